#include "wzs/sequence.hpp"

#include <algorithm>
#include <stdexcept>

#include "wzs/weightsets.hpp"

namespace wzs {

void Sequence::check_modulus() const {
  if (modulus_ < 1) throw std::invalid_argument("sequence: modulus must be >= 1");
}

Sequence::Sequence(residue_t modulus, std::vector<residue_t> terms)
    : modulus_(modulus), terms_(std::move(terms)) {
  check_modulus();
  for (residue_t t : terms_) {
    if (t < 0 || t >= modulus_) {
      throw std::invalid_argument("sequence: term " + std::to_string(t) + " outside [0, " +
                                  std::to_string(modulus_ - 1) + "]");
    }
  }
  std::sort(terms_.begin(), terms_.end());
}

Sequence Sequence::from_integers(residue_t modulus, std::span<const residue_t> values) {
  if (modulus < 1) throw std::invalid_argument("sequence: modulus must be >= 1");
  std::vector<residue_t> terms;
  terms.reserve(values.size());
  for (residue_t v : values) terms.push_back(mod(v, modulus));
  return Sequence(modulus, std::move(terms));
}

std::size_t Sequence::multiplicity(residue_t g) const {
  const auto [lo, hi] = std::equal_range(terms_.begin(), terms_.end(), g);
  return static_cast<std::size_t>(hi - lo);
}

bool Sequence::divides(const Sequence& other) const {
  return modulus_ == other.modulus_ &&
         std::includes(other.terms_.begin(), other.terms_.end(), terms_.begin(), terms_.end());
}

Sequence Sequence::project(residue_t m) const {
  if (m < 1 || modulus_ % m != 0) {
    throw std::invalid_argument("sequence: cannot project Z_" + std::to_string(modulus_) +
                                " onto Z_" + std::to_string(m));
  }
  return from_integers(m, terms_);
}

Sequence Sequence::with(residue_t term) const {
  std::vector<residue_t> t = terms_;
  t.push_back(mod(term, modulus_));
  return Sequence(modulus_, std::move(t));
}

std::string Sequence::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(terms_[i]);
  }
  return out + "] mod " + std::to_string(modulus_);
}

bool validates(const Certificate& cert, const Sequence& seq, const WeightSet& weights) {
  if (seq.modulus() != weights.modulus()) return false;
  std::vector<bool> used(seq.length(), false);
  residue_t sum = 0;
  for (const auto& pick : cert.picked) {
    if (pick.index >= seq.length() || used[pick.index]) return false;
    if (!weights.contains(pick.weight)) return false;
    used[pick.index] = true;
    sum = mod(sum + mul_mod(pick.weight, seq[pick.index], seq.modulus()), seq.modulus());
  }
  return sum == mod(cert.claimed_sum, seq.modulus());
}

bool validates_zero_sum(const Certificate& cert, const Sequence& seq, const WeightSet& weights) {
  return !cert.picked.empty() && cert.claimed_sum == 0 && validates(cert, seq, weights);
}

}  // namespace wzs

#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "wzs/modarith.hpp"

namespace wzs {

/// A multiset over Z_n, stored as its sorted list of terms.
class Sequence {
 public:
  explicit Sequence(residue_t modulus) : modulus_(modulus) { check_modulus(); }
  Sequence(residue_t modulus, std::vector<residue_t> terms);
  Sequence(residue_t modulus, std::initializer_list<residue_t> terms)
      : Sequence(modulus, std::vector<residue_t>(terms)) {}

  /// Reduces every term mod n before storing.
  static Sequence from_integers(residue_t modulus, std::span<const residue_t> values);

  residue_t modulus() const { return modulus_; }
  const std::vector<residue_t>& terms() const { return terms_; }
  std::size_t length() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  residue_t operator[](std::size_t i) const { return terms_[i]; }

  /// v_g(S).
  std::size_t multiplicity(residue_t g) const;
  /// T | S in the multiset sense.
  bool divides(const Sequence& other) const;

  /// Image under Z_n -> Z_m for m | n.
  Sequence project(residue_t m) const;
  Sequence with(residue_t term) const;

  std::string to_string() const;

  friend bool operator==(const Sequence&, const Sequence&) = default;
  friend auto operator<=>(const Sequence& a, const Sequence& b) {
    if (auto c = a.modulus_ <=> b.modulus_; c != 0) return c;
    return a.terms_ <=> b.terms_;
  }

 private:
  void check_modulus() const;

  residue_t modulus_;
  std::vector<residue_t> terms_;
};

struct WeightedPick {
  std::size_t index;  // into the sorted terms of the sequence
  residue_t weight;
  friend bool operator==(const WeightedPick&, const WeightedPick&) = default;
};

/// Witness of a weighted sum: sum(weight * terms[index]) = claimed_sum (mod n).
struct Certificate {
  std::vector<WeightedPick> picked;
  residue_t claimed_sum = 0;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

class WeightSet;

/// Distinct indices, weights in A and the congruence all hold. A zero-sum
/// certificate additionally needs a nonempty pick list and claimed_sum = 0.
bool validates(const Certificate& cert, const Sequence& seq, const WeightSet& weights);
bool validates_zero_sum(const Certificate& cert, const Sequence& seq, const WeightSet& weights);

}  // namespace wzs

#include "wzs/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wzs {

Sequence random_sequence(residue_t n, std::size_t length, Rng& rng) {
  std::uniform_int_distribution<residue_t> term(0, n - 1);
  std::vector<residue_t> terms(length);
  for (auto& x : terms) x = term(rng);
  return Sequence(n, std::move(terms));
}

OrbitTransform random_transform(std::size_t length, const WeightSet& weights, Rng& rng) {
  const auto us = units(weights.modulus());
  const auto& as = weights.elements();
  std::uniform_int_distribution<std::size_t> pick_unit(0, us.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_weight(0, as.size() - 1);
  OrbitTransform t;
  t.scale = us[pick_unit(rng)];
  for (std::size_t i = 0; i < length; ++i) t.weights.push_back(as[pick_weight(rng)]);
  t.permutation.resize(length);
  std::iota(t.permutation.begin(), t.permutation.end(), 0);
  std::shuffle(t.permutation.begin(), t.permutation.end(), rng);
  return t;
}

Sequence apply(const OrbitTransform& t, const Sequence& seq) {
  const residue_t n = seq.modulus();
  std::vector<residue_t> out;
  for (std::size_t i = 0; i < seq.length(); ++i) {
    out.push_back(mul_mod(mul_mod(t.scale, t.weights[i], n), seq[t.permutation[i]], n));
  }
  return Sequence(n, std::move(out));
}

Sequence coprimality_violator(const ModulusProfile& profile, std::size_t length, Rng& rng) {
  const auto primes = profile.primes();
  if (primes.empty()) throw std::invalid_argument("coprimality_violator: n must be > 1");
  const residue_t n = profile.n;
  const residue_t p = primes[std::uniform_int_distribution<std::size_t>(0, primes.size() - 1)(rng)];
  const std::size_t max_coprime = p % 3 == 1 ? 1 : 0;
  const std::size_t coprime =
      std::min(length, std::uniform_int_distribution<std::size_t>(0, max_coprime)(rng));

  std::uniform_int_distribution<residue_t> multiple(0, n / p - 1);
  std::uniform_int_distribution<residue_t> any(0, n - 1);
  std::vector<residue_t> terms;
  for (std::size_t i = 0; i < coprime; ++i) {
    residue_t x;
    do x = any(rng);
    while (x % p == 0);
    terms.push_back(x);
  }
  while (terms.size() < length) terms.push_back(p * multiple(rng));
  return Sequence(n, std::move(terms));
}

}  // namespace wzs

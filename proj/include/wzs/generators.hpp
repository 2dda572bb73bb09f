#pragma once

// Random inputs for the property checks run by `verify` and the test suites.

#include <cstddef>
#include <random>
#include <vector>

#include "wzs/modarith.hpp"
#include "wzs/sequence.hpp"
#include "wzs/weightsets.hpp"

namespace wzs {

using Rng = std::mt19937_64;

Sequence random_sequence(residue_t n, std::size_t length, Rng& rng);

struct OrbitTransform {
  residue_t scale = 1;                // c in Z_n^*
  std::vector<residue_t> weights;     // a_i in A
  std::vector<std::size_t> permutation;
};

OrbitTransform random_transform(std::size_t length, const WeightSet& weights, Rng& rng);

/// y_i = c * a_i * x_{sigma(i)}.
Sequence apply(const OrbitTransform& t, const Sequence& seq);

/// A length-`length` sequence over Z_n in which some prime p | n sees fewer
/// coprime terms than an extremal sequence must have: at most one for
/// p = 1 (mod 3), none for p = 2 (mod 3).
Sequence coprimality_violator(const ModulusProfile& profile, std::size_t length, Rng& rng);

}  // namespace wzs

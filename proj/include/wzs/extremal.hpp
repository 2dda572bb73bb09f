#pragma once

// Extremal sequences for cubic weights: canonical forms under the
// (c, a_1..a_k, sigma) action, exhaustive enumeration of classes, the
// recursive construction, and structural classification.

#include <cstdint>
#include <optional>
#include <vector>

#include "wzs/modarith.hpp"
#include "wzs/search.hpp"
#include "wzs/sequence.hpp"
#include "wzs/weightsets.hpp"

namespace wzs {

struct CanonicalSequence {
  Sequence base;
  std::uint64_t orbit_size = 0;  // number of distinct multisets in the orbit
  Sequence canonical;
};

/// Lexicographically least sorted sequence equivalent to `seq`: each term is
/// reduced to the least element of its A-orbit, then the best unit scaling
/// is taken. A must be a subgroup of Z_n^*; HypothesisError otherwise.
CanonicalSequence canonicalize(const Sequence& seq, const WeightSet& weights);

bool equivalent(const Sequence& s, const Sequence& t, const WeightSet& weights);

struct ExtremalEnumeration {
  residue_t n = 1;
  residue_t davenport = 0;
  std::vector<CanonicalSequence> classes;  // ordered by canonical form
  bool complete = true;
  SearchStats stats;
};

/// Every equivalence class of zero-sum-free sequences of length
/// `davenport - 1`. A flagged-incomplete partial list comes back if the
/// budget runs out.
ExtremalEnumeration enumerate_extremal(const WeightSet& weights, residue_t davenport,
                                       const SearchBudget& budget = {});

/// Extremal sequence for T_n built from the largest prime down: a prime
/// p = 1 (mod 3) contributes the pair of lifts of (1, g) with g the least
/// non-cube mod p, a prime p = 2 (mod 3) contributes the lift of 1; the rest
/// is p times the construction for n/p.
Sequence construct_extremal(const ModulusProfile& profile);

enum class StructureCase { case1, case2, base };

struct StructureStep {
  StructureCase kind = StructureCase::base;
  residue_t modulus = 1;                   // n at this level
  residue_t prime = 0;                     // p used to split (0 for base)
  std::vector<residue_t> coprime_terms;    // terms of this level not divisible by p
  Sequence remainder{1};                   // the other terms divided by p, over Z_{n/p}
  std::vector<residue_t> qualifying_primes;
};

/// Recursive decomposition, outermost level first; the last step is base.
struct StructureReport {
  std::vector<StructureStep> steps;
};

/// Splits a T_n-extremal sequence along a prime that sees exactly two
/// (p = 1 mod 3) or one (p = 2 mod 3) coprime terms and recurses on the
/// quotient. The input is checked for extremality first (HypothesisError
/// if it is not); a failure to split throws TheoremViolation.
StructureReport classify_structure(const Sequence& seq, const ModulusProfile& profile);

/// Inverse of classify_structure.
Sequence reconstruct(const StructureReport& report);

}  // namespace wzs

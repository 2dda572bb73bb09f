#pragma once

// D_A(Z_n) and E_A(Z_n): exact search, closed forms for cubic weights, and
// the product construction that realizes the lower bound.

#include <optional>
#include <string_view>

#include "wzs/modarith.hpp"
#include "wzs/search.hpp"
#include "wzs/sequence.hpp"
#include "wzs/weightsets.hpp"

namespace wzs {

enum class Method { search, formula, gao_relation, direct_E };

std::string_view to_string(Method method);

struct InvariantResult {
  residue_t n = 1;
  WeightKind kind = WeightKind::cubes;
  residue_t value = 0;
  Method method = Method::search;
  // When the budget runs out `value` is the best lower bound and
  // [lower, upper] brackets the true constant.
  bool conclusive = true;
  residue_t lower = 0;
  residue_t upper = 0;
  // D methods: a zero-sum-free sequence of length value - 1.
  // direct_E: a sequence of length value - 1 with no length-n weighted
  // zero-sum subsequence.
  std::optional<Sequence> witness;
  SearchStats stats;
};

/// 1 + the longest length of an A-weighted zero-sum-free sequence over Z_n.
/// `incumbent` is a known zero-sum-free sequence used as the starting lower
/// bound. Never returns a wrong exact value: if the budget runs out the
/// result is flagged inconclusive with a bracket.
InvariantResult davenport_search(residue_t n, const WeightSet& weights,
                                 const SearchBudget& budget = {},
                                 const std::optional<Sequence>& incumbent = std::nullopt);

/// 2*Omega(n1) + Omega(n2) + 1 for cubic weights. HypothesisError names the
/// failed hypothesis outside the theorem's range.
InvariantResult davenport_formula(const ModulusProfile& profile);

/// n + 2*Omega(n1) + Omega(n2), same hypotheses.
InvariantResult e_formula(const ModulusProfile& profile);

/// E = D + n - 1.
residue_t gao_E(residue_t davenport, residue_t n);

struct EDirectOptions {
  SearchBudget budget{};
  /// Largest n handled by exhaustive enumeration; above it only random and
  /// structured refutation is attempted.
  residue_t exhaustive_limit = 8;
  std::uint64_t rng_seed = 0;
  std::size_t random_trials = 2000;
};

/// Least l such that every length-l sequence has an A-weighted zero-sum
/// subsequence of length n, computed without going through D.
InvariantResult e_direct(residue_t n, const WeightSet& weights, const EDirectOptions& options = {});

/// Witness over Z_{u*v} from witnesses over Z_u and Z_v: the Z_u terms are
/// scaled by v and the Z_v terms are lifted to their least representative.
Sequence combine_witnesses(const Sequence& u_witness, const Sequence& v_witness);

/// Zero-sum-free sequence built prime by prime with combine_witnesses. For
/// cubes its length is 2*Omega(n1) + Omega(n2) (+ contributions of 2 and 3).
/// Throws ContractError if the result fails the zero-sum-free check.
Sequence lower_bound_witness(const ModulusProfile& profile, WeightKind family);

struct PriorBound {
  int sevens = 0;           // l in n = 7^l * n1 * n2
  residue_t davenport = 0;  // 3*Omega(n1) + Omega(n2) + 5l + 1
  residue_t e = 0;          // n + 3*Omega(n1) + Omega(n2) + 5l
};

/// Earlier upper bounds for cubic weights, valid for odd n prime to 3.
PriorBound prior_upper_bound(const ModulusProfile& profile);

}  // namespace wzs

#pragma once

// Weighted zero-sum decision procedures over Z_n.
//
// Every existence check is a reachable-sum DP over bitsets of length n with
// the layers kept, so a certificate can be read back without re-running.

#include <cstddef>
#include <optional>
#include <vector>

#include "wzs/modarith.hpp"
#include "wzs/residue_set.hpp"
#include "wzs/sequence.hpp"
#include "wzs/weightsets.hpp"

namespace wzs {

/// { a*x mod n : a in A }.
ResidueSet weighted_multiples(residue_t x, const WeightSet& weights);

/// Sums sum(a_i * x_i) over nonempty subsequences with weights in A.
ResidueSet reachable_sums(const Sequence& seq, const WeightSet& weights);

/// A nonempty A-weighted zero-sum subsequence, if one exists.
std::optional<Certificate> has_weighted_zero_subseq(const Sequence& seq, const WeightSet& weights);

enum class EmptySum { exclude, include };

/// An A-weighted zero-sum subsequence with exactly `length` terms. The
/// empty selection only counts when `empty` is EmptySum::include.
std::optional<Certificate> has_fixed_length_zero_subseq(const Sequence& seq,
                                                        const WeightSet& weights,
                                                        std::size_t length,
                                                        EmptySum empty = EmptySum::exclude);

/// Weights for every term such that the whole sequence sums to zero.
std::optional<Certificate> full_sequence_zero_sum(const Sequence& seq, const WeightSet& weights);

/// Whole-sequence T_n-weighted zero-sum test done prime power by prime
/// power: S qualifies iff each projection S^(p) does over T_{p^r}.
bool crt_zero_check(const Sequence& seq);

/// A zero-sum subsequence of exactly m terms with cubic weights, built by
/// peeling off primes that see few coprime terms and otherwise solving each
/// prime separately and gluing the weights by CRT.
///
/// Needs n odd, square-free, coprime to 3, 7 and 13, with
/// m >= 3*omega(n1) + 2*omega(n2) and length >= m + 2*Omega(n1) + Omega(n2);
/// throws HypothesisError otherwise.
Certificate extract_length_m(const Sequence& seq, const ModulusProfile& profile, std::size_t m);

}  // namespace wzs

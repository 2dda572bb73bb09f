#pragma once

// Depth-first enumeration of A-weighted zero-sum-free sequences over Z_n.
//
// Sequences are grown in non-decreasing order so each multiset is seen once.
// Two symmetries shrink the space further:
//  * global scaling by a unit c: the term of least gcd(x, n) can be taken to
//    be that gcd d itself, so every branch starts at a proper divisor d of n
//    and only admits terms x >= d with gcd(x, n) >= d;
//  * when A is a subgroup of units, each term may be replaced by the least
//    element of its A-orbit.
// A branch dies as soon as 0 becomes a reachable weighted sum.

#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "wzs/residue_set.hpp"
#include "wzs/sequence.hpp"
#include "wzs/weightsets.hpp"

namespace wzs {

struct SearchBudget {
  std::uint64_t max_nodes = 100'000'000;
  std::chrono::milliseconds max_time{60'000};
  unsigned jobs = 1;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  double wall_ms = 0.0;
};

class ZeroSumFreeSearch {
 public:
  explicit ZeroSumFreeSearch(const WeightSet& weights);

  struct Longest {
    std::size_t length = 0;         // longest zero-sum-free length found
    std::optional<Sequence> witness;
    bool complete = true;           // false if the budget ran out
    SearchStats stats;
  };

  /// Longest zero-sum-free sequence. The witness is the first one reached in
  /// branch order, independent of the number of workers.
  Longest longest(const SearchBudget& budget) const;

  /// Calls `visit` on every reduced zero-sum-free sequence of exactly
  /// `length` terms. Returns false if the budget ran out first. `visit` may
  /// be called from several threads at once.
  bool for_each_of_length(std::size_t length, const SearchBudget& budget,
                          const std::function<void(const Sequence&)>& visit,
                          SearchStats* stats = nullptr) const;

  /// Candidate terms after orbit reduction, increasing.
  const std::vector<residue_t>& alphabet() const { return alphabet_; }

 private:
  struct Candidate {
    residue_t value;
    residue_t gcd;
    std::vector<residue_t> multiples;  // distinct a*x
    ResidueSet negated;                // { -a*x }
    bool kills = false;                // some a*x = 0
  };

  struct Shared;
  struct Branch {
    std::size_t length = 0;
    std::vector<residue_t> witness;
  };

  // Zero-sum-free prefixes of length min(2, depth), in branch order.
  std::vector<std::vector<std::size_t>> prefixes(std::size_t depth) const;
  void descend(Shared& shared, std::vector<std::size_t>& path, const ResidueSet& reach,
               residue_t root_gcd, std::size_t max_depth, Branch& best,
               const std::function<void(const Sequence&)>* visit) const;
  bool extend(const ResidueSet& reach, std::size_t index, ResidueSet& out) const;
  Sequence to_sequence(const std::vector<std::size_t>& path) const;

  WeightSet weights_;
  residue_t n_;
  std::vector<residue_t> alphabet_;
  std::vector<Candidate> candidates_;
  std::vector<std::size_t> roots_;  // candidates that are proper divisors of n
};

}  // namespace wzs

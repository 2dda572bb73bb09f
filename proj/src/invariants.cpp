#include "wzs/invariants.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "wzs/hypotheses.hpp"
#include "wzs/zerosum.hpp"

namespace wzs {

std::string_view to_string(Method method) {
  switch (method) {
    case Method::search: return "search";
    case Method::formula: return "formula";
    case Method::gao_relation: return "gao_relation";
    case Method::direct_E: return "direct_E";
  }
  return "search";
}

InvariantResult davenport_search(residue_t n, const WeightSet& weights, const SearchBudget& budget,
                                 const std::optional<Sequence>& incumbent) {
  if (n < 2) throw std::invalid_argument("davenport_search: n must be >= 2");
  if (weights.modulus() != n) throw std::invalid_argument("davenport_search: modulus mismatch");

  const ZeroSumFreeSearch search(weights);
  auto found = search.longest(budget);

  InvariantResult result;
  result.n = n;
  result.kind = weights.kind();
  result.method = Method::search;
  result.stats = found.stats;
  result.witness = found.witness;
  std::size_t best = found.length;
  if (incumbent && incumbent->modulus() == n && incumbent->length() > best &&
      !has_weighted_zero_subseq(*incumbent, weights)) {
    best = incumbent->length();
    result.witness = incumbent;
  }
  result.value = static_cast<residue_t>(best) + 1;
  result.conclusive = found.complete;
  result.lower = result.value;
  // Any n terms contain an unweighted zero-sum subsequence; scale it by one weight.
  result.upper = found.complete ? result.value : n;
  return result;
}

InvariantResult davenport_formula(const ModulusProfile& profile) {
  require_cubic_hypotheses(profile);
  InvariantResult result;
  result.n = profile.n;
  result.kind = WeightKind::cubes;
  result.method = Method::formula;
  result.value = 2 * profile.big_omega_n1 + profile.big_omega_n2 + 1;
  result.lower = result.upper = result.value;
  return result;
}

InvariantResult e_formula(const ModulusProfile& profile) {
  require_cubic_hypotheses(profile);
  InvariantResult result;
  result.n = profile.n;
  result.kind = WeightKind::cubes;
  result.method = Method::formula;
  result.value = profile.n + 2 * profile.big_omega_n1 + profile.big_omega_n2;
  result.lower = result.upper = result.value;
  return result;
}

residue_t gao_E(residue_t davenport, residue_t n) { return davenport + n - 1; }

namespace {

// Sequences with no weighted zero-sum subsequence of length n, grown in
// non-decreasing order. layers[c] holds sums of exactly c weighted terms.
class FixedLengthFreeSearch {
 public:
  FixedLengthFreeSearch(const WeightSet& weights, const SearchBudget& budget)
      : weights_(weights), n_(weights.modulus()), budget_(budget) {
    if (weights.is_subgroup() && weights.all_units()) {
      alphabet_ = WeightOrbits(weights).representatives();
    } else {
      for (residue_t x = 0; x < n_; ++x) alphabet_.push_back(x);
    }
    for (residue_t x : alphabet_) {
      ResidueSet m(n_);
      for (residue_t a : weights.elements()) m.insert(mul_mod(a, x, n_));
      multiples_.push_back(m.elements());
    }
  }

  void run() {
    start_ = std::chrono::steady_clock::now();
    std::vector<ResidueSet> layers(static_cast<std::size_t>(n_) + 1, ResidueSet(n_));
    layers[0].insert(0);
    std::vector<residue_t> path;
    descend(layers, 0, path);
  }

  std::size_t best_length = 0;
  std::vector<residue_t> best;
  bool complete = true;
  std::uint64_t nodes = 0;

 private:
  void descend(const std::vector<ResidueSet>& layers, std::size_t first,
               std::vector<residue_t>& path) {
    if (path.size() > best_length || (best_length == 0 && path.empty())) {
      best_length = path.size();
      best = path;
    }
    // Two copies of n - 1 terms always suffice (scaled Erdos-Ginzburg-Ziv).
    if (path.size() >= static_cast<std::size_t>(2 * n_ - 1)) return;
    std::vector<ResidueSet> next(layers.size(), ResidueSet(n_));
    for (std::size_t i = first; i < alphabet_.size(); ++i) {
      if (++nodes > budget_.max_nodes ||
          ((nodes & 1023U) == 0 && std::chrono::steady_clock::now() - start_ > budget_.max_time)) {
        complete = false;
        return;
      }
      next[0] = layers[0];
      const std::size_t top = std::min(path.size() + 1, layers.size() - 1);
      for (std::size_t c = 1; c < layers.size(); ++c) {
        next[c] = layers[c];
        if (c <= top) {
          for (residue_t w : multiples_[i]) next[c].or_rotated(layers[c - 1], w);
        }
      }
      if (next.back().contains(0)) continue;
      path.push_back(alphabet_[i]);
      descend(next, i, path);
      path.pop_back();
      if (!complete) return;
    }
  }

  const WeightSet& weights_;
  residue_t n_;
  SearchBudget budget_;
  std::vector<residue_t> alphabet_;
  std::vector<std::vector<residue_t>> multiples_;
  std::chrono::steady_clock::time_point start_;
};

bool lacks_length_n_zero_sum(const Sequence& seq, const WeightSet& weights) {
  return !has_fixed_length_zero_subseq(seq, weights, static_cast<std::size_t>(seq.modulus()));
}

}  // namespace

InvariantResult e_direct(residue_t n, const WeightSet& weights, const EDirectOptions& options) {
  if (n < 2) throw std::invalid_argument("e_direct: n must be >= 2");
  if (weights.modulus() != n) throw std::invalid_argument("e_direct: modulus mismatch");
  const auto start = std::chrono::steady_clock::now();

  InvariantResult result;
  result.n = n;
  result.kind = weights.kind();
  result.method = Method::direct_E;
  // Scaled Erdos-Ginzburg-Ziv bound.
  result.upper = 2 * n - 1;

  if (n <= options.exhaustive_limit) {
    FixedLengthFreeSearch search(weights, options.budget);
    search.run();
    result.value = static_cast<residue_t>(search.best_length) + 1;
    result.witness = Sequence(n, search.best);
    result.stats.nodes = search.nodes;
    result.conclusive = search.complete;
    result.lower = result.value;
    if (search.complete) result.upper = result.value;
  } else {
    // Refutation only: every sequence found without a length-n zero sum
    // raises the lower bound.
    std::vector<residue_t> best(static_cast<std::size_t>(n - 1), 0);
    const auto d = davenport_search(n, weights, options.budget);
    if (d.witness) {
      std::vector<residue_t> structured = best;
      for (residue_t x : d.witness->terms()) structured.push_back(x);
      if (lacks_length_n_zero_sum(Sequence(n, structured), weights)) best = structured;
    }
    std::mt19937_64 rng(options.rng_seed);
    std::uniform_int_distribution<residue_t> term(0, n - 1);
    for (std::size_t trial = 0; trial < options.random_trials; ++trial) {
      if (static_cast<residue_t>(best.size()) + 1 >= result.upper) break;
      std::vector<residue_t> candidate(best.size() + 1);
      for (auto& x : candidate) x = term(rng);
      if (lacks_length_n_zero_sum(Sequence(n, candidate), weights)) best = std::move(candidate);
    }
    result.value = static_cast<residue_t>(best.size()) + 1;
    result.witness = Sequence(n, best);
    result.lower = result.value;
    result.conclusive = result.lower == result.upper;
  }
  result.stats.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

Sequence combine_witnesses(const Sequence& u_witness, const Sequence& v_witness) {
  const residue_t u = u_witness.modulus();
  const residue_t v = v_witness.modulus();
  const residue_t n = u * v;
  std::vector<residue_t> terms;
  for (residue_t x : u_witness.terms()) terms.push_back(v * x);
  for (residue_t y : v_witness.terms()) terms.push_back(y);
  return Sequence(n, std::move(terms));
}

namespace {

Sequence prime_witness(residue_t p, WeightKind family) {
  switch (family) {
    case WeightKind::cubes:
      if (p % 3 == 1) {
        // (1, g) is zero-sum-free iff g lies outside -T_p.
        const WeightSet t = cubes(p);
        for (residue_t g = 2; g < p; ++g) {
          if (!t.contains(p - g)) return Sequence(p, {1, g});
        }
        throw ContractError("no residue outside -T_" + std::to_string(p));
      }
      return Sequence(p, {1});
    case WeightKind::units:
      return Sequence(p, {1});
    case WeightKind::squares:
    case WeightKind::pm_one:
    case WeightKind::singleton_one: {
      const auto d = davenport_search(p, make_weights(family, p));
      return d.witness ? *d.witness : Sequence(p);
    }
    case WeightKind::custom:
      break;
  }
  throw std::invalid_argument("lower_bound_witness: custom weights have no family structure");
}

Sequence witness_rec(residue_t n, WeightKind family) {
  if (n == 1) return Sequence(1);
  const auto profile = factor(n);
  const residue_t p = profile.factors.front().prime;
  if (n == p) return prime_witness(p, family);
  return combine_witnesses(prime_witness(p, family), witness_rec(n / p, family));
}

}  // namespace

Sequence lower_bound_witness(const ModulusProfile& profile, WeightKind family) {
  Sequence witness = witness_rec(profile.n, family);
  if (profile.n >= 2 && has_weighted_zero_subseq(witness, make_weights(family, profile.n))) {
    throw ContractError("lower-bound construction is not zero-sum-free: " + witness.to_string());
  }
  return witness;
}

PriorBound prior_upper_bound(const ModulusProfile& profile) {
  if (profile.n % 2 == 0) throw HypothesisError("n is odd");
  if (profile.n % 3 == 0) throw HypothesisError("3 does not divide n");
  PriorBound bound;
  for (const auto& f : profile.factors)
    if (f.prime == 7) bound.sevens = f.exponent;
  const int omega1 = profile.big_omega_n1 - bound.sevens;
  bound.davenport = 3 * omega1 + profile.big_omega_n2 + 5 * bound.sevens + 1;
  bound.e = profile.n + 3 * omega1 + profile.big_omega_n2 + 5 * bound.sevens;
  return bound;
}

}  // namespace wzs

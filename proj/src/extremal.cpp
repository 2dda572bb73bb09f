#include "wzs/extremal.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <string>

#include "wzs/hypotheses.hpp"
#include "wzs/invariants.hpp"
#include "wzs/zerosum.hpp"

namespace wzs {

namespace {

void require_unit_subgroup(const WeightSet& weights) {
  if (!weights.is_subgroup() || !weights.all_units()) {
    throw HypothesisError("A is a subgroup of Z_n^*");
  }
}

std::uint64_t multichoose(std::uint64_t size, std::uint64_t k) {
  // C(size + k - 1, k), built incrementally so every partial is integral.
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (size + i - 1) / i;
  return r;
}

residue_t least_non_cube(residue_t p) {
  const WeightSet t = cubes(p);
  for (residue_t g = 2; g < p; ++g)
    if (!t.contains(g)) return g;
  throw ContractError("every unit mod " + std::to_string(p) + " is a cube");
}

}  // namespace

CanonicalSequence canonicalize(const Sequence& seq, const WeightSet& weights) {
  require_unit_subgroup(weights);
  if (seq.modulus() != weights.modulus()) {
    throw std::invalid_argument("canonicalize: modulus mismatch");
  }
  const residue_t n = seq.modulus();
  const WeightOrbits orbits(weights);

  std::set<std::vector<residue_t>> images;
  for (residue_t c : units(n)) {
    std::vector<residue_t> img;
    img.reserve(seq.length());
    for (residue_t x : seq.terms()) img.push_back(orbits.representative(mul_mod(c, x, n)));
    std::sort(img.begin(), img.end());
    images.insert(std::move(img));
  }

  // Distinct rep-multisets give disjoint families of multisets; each family
  // picks every term freely inside its A-orbit.
  std::uint64_t orbit_size = 0;
  for (const auto& img : images) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < img.size();) {
      std::size_t j = i;
      while (j < img.size() && img[j] == img[i]) ++j;
      count *= multichoose(orbits.orbit_size(img[i]), j - i);
      i = j;
    }
    orbit_size += count;
  }
  return {seq, orbit_size, Sequence(n, *images.begin())};
}

bool equivalent(const Sequence& s, const Sequence& t, const WeightSet& weights) {
  require_unit_subgroup(weights);
  if (s.modulus() != t.modulus() || s.length() != t.length()) return false;
  return canonicalize(s, weights).canonical == canonicalize(t, weights).canonical;
}

ExtremalEnumeration enumerate_extremal(const WeightSet& weights, residue_t davenport,
                                       const SearchBudget& budget) {
  require_unit_subgroup(weights);
  if (davenport < 1) throw std::invalid_argument("enumerate_extremal: D must be >= 1");
  ExtremalEnumeration out;
  out.n = weights.modulus();
  out.davenport = davenport;

  std::mutex mutex;
  std::map<Sequence, CanonicalSequence> found;
  const ZeroSumFreeSearch search(weights);
  out.complete = search.for_each_of_length(
      static_cast<std::size_t>(davenport - 1), budget,
      [&](const Sequence& s) {
        CanonicalSequence c = canonicalize(s, weights);
        c.base = c.canonical;
        const std::lock_guard<std::mutex> lock(mutex);
        found.emplace(c.canonical, std::move(c));
      },
      &out.stats);
  for (auto& [key, value] : found) out.classes.push_back(std::move(value));
  return out;
}

namespace {

Sequence construct_rec(residue_t n) {
  if (n == 1) return Sequence(1);
  const ModulusProfile profile = factor(n);
  const residue_t p = profile.factors.back().prime;
  const residue_t rest = n / p;
  const Sequence child = construct_rec(rest);

  std::vector<residue_t> terms;
  const CrtPart one[] = {{1, p}, {0, rest}};
  terms.push_back(crt_combine(one));
  if (p % 3 == 1) {
    const CrtPart g[] = {{least_non_cube(p), p}, {0, rest}};
    terms.push_back(crt_combine(g));
  }
  for (residue_t y : child.terms()) terms.push_back(p * y);
  return Sequence(n, std::move(terms));
}

bool is_extremal(const Sequence& seq, const ModulusProfile& profile) {
  const residue_t d = davenport_formula(profile).value;
  if (static_cast<residue_t>(seq.length()) != d - 1) return false;
  if (profile.n == 1) return true;
  return !has_weighted_zero_subseq(seq, cubes(profile.n));
}

void classify_rec(const Sequence& seq, StructureReport& report) {
  const residue_t n = seq.modulus();
  if (n == 1) {
    StructureStep base;
    base.kind = StructureCase::base;
    base.modulus = 1;
    report.steps.push_back(std::move(base));
    return;
  }
  const ModulusProfile profile = factor(n);
  auto coprime_count = [&](residue_t p) {
    return static_cast<std::size_t>(std::count_if(seq.terms().begin(), seq.terms().end(),
                                                  [&](residue_t x) { return x % p != 0; }));
  };

  StructureStep step;
  step.modulus = n;
  for (residue_t p : profile.primes_n1()) {
    const std::size_t c = coprime_count(p);
    if (c < 2) {
      throw TheoremViolation("extremal " + seq.to_string() + " has " + std::to_string(c) +
                             " term(s) coprime to " + std::to_string(p) + ", expected >= 2");
    }
    if (c == 2) step.qualifying_primes.push_back(p);
  }
  for (residue_t q : profile.primes_n2()) {
    const std::size_t c = coprime_count(q);
    if (c < 1) {
      throw TheoremViolation("extremal " + seq.to_string() + " has no term coprime to " +
                             std::to_string(q));
    }
    if (c == 1) step.qualifying_primes.push_back(q);
  }
  if (step.qualifying_primes.empty()) {
    throw TheoremViolation("no prime splits extremal sequence " + seq.to_string());
  }

  const residue_t p = step.qualifying_primes.front();
  step.prime = p;
  step.kind = p % 3 == 1 ? StructureCase::case1 : StructureCase::case2;
  std::vector<residue_t> divided;
  for (residue_t x : seq.terms()) {
    if (x % p != 0) {
      step.coprime_terms.push_back(x);
    } else {
      divided.push_back(x / p);
    }
  }
  step.remainder = Sequence(n / p, divided);

  if (step.kind == StructureCase::case1) {
    const Sequence pair = Sequence::from_integers(p, step.coprime_terms);
    if (has_weighted_zero_subseq(pair, cubes(p))) {
      throw TheoremViolation("image of " + seq.to_string() + " outside p | x is not T_" +
                             std::to_string(p) + "-zero-sum-free");
    }
  }
  if (!is_extremal(step.remainder, factor(n / p))) {
    throw TheoremViolation("quotient " + step.remainder.to_string() + " of " + seq.to_string() +
                           " is not extremal");
  }
  Sequence child = step.remainder;
  report.steps.push_back(std::move(step));
  classify_rec(child, report);
}

}  // namespace

Sequence construct_extremal(const ModulusProfile& profile) {
  require_cubic_hypotheses(profile);
  Sequence seq = construct_rec(profile.n);
  if (!is_extremal(seq, profile)) {
    throw ContractError("constructed sequence " + seq.to_string() + " is not extremal");
  }
  return seq;
}

StructureReport classify_structure(const Sequence& seq, const ModulusProfile& profile) {
  require_cubic_hypotheses(profile);
  if (seq.modulus() != profile.n) throw std::invalid_argument("classify_structure: modulus mismatch");
  if (!is_extremal(seq, profile)) throw HypothesisError("the sequence is T_n-extremal");
  StructureReport report;
  classify_rec(seq, report);
  return report;
}

Sequence reconstruct(const StructureReport& report) {
  if (report.steps.empty() || report.steps.back().kind != StructureCase::base) {
    throw std::invalid_argument("reconstruct: report must end in a base step");
  }
  Sequence current(report.steps.back().modulus);
  for (auto it = report.steps.rbegin() + 1; it != report.steps.rend(); ++it) {
    std::vector<residue_t> terms = it->coprime_terms;
    for (residue_t y : current.terms()) terms.push_back(it->prime * y);
    current = Sequence(it->modulus, std::move(terms));
  }
  return current;
}

}  // namespace wzs

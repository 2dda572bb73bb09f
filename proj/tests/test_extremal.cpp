#include <map>

#include "doctest.h"
#include "oracles.hpp"
#include "wzs/extremal.hpp"
#include "wzs/generators.hpp"
#include "wzs/hypotheses.hpp"
#include "wzs/invariants.hpp"
#include "wzs/zerosum.hpp"

using namespace wzs;

namespace {

std::vector<oracle::Int> plain(const WeightSet& a) { return {a.elements().begin(), a.elements().end()}; }

std::uint64_t total_orbit_size(const ExtremalEnumeration& e) {
  std::uint64_t total = 0;
  for (const auto& c : e.classes) total += c.orbit_size;
  return total;
}

}  // namespace

TEST_CASE("canonical forms") {
  const auto t = cubes(19);
  CHECK(canonicalize(Sequence(19, {18, 5}), t).canonical == Sequence(19, {1, 2}));
  CHECK(equivalent(Sequence(19, {2, 4}), Sequence(19, {1, 2}), t));
  CHECK_FALSE(equivalent(Sequence(19, {1, 1}), Sequence(19, {1, 2}), t));
  CHECK_THROWS_AS(canonicalize(Sequence(10, {1}), custom(10, {3})), HypothesisError);
  // Orbit of a single unit under T_19 and unit scaling: all 18 units.
  CHECK(canonicalize(Sequence(19, {5}), t).orbit_size == 18);
}

TEST_CASE("canonical form is orbit invariant") {
  Rng rng(19);
  for (residue_t n : {19, 35, 55, 95, 91}) {
    const auto t = cubes(n);
    for (int trial = 0; trial < 150; ++trial) {
      const Sequence s = random_sequence(n, 1 + trial % 5, rng);
      const Sequence y = apply(random_transform(s.length(), t, rng), s);
      CHECK(canonicalize(s, t).canonical == canonicalize(y, t).canonical);
    }
  }
}

TEST_CASE("enumeration matches brute-force orbit counts") {
  for (residue_t n : {7, 13, 19, 25, 31, 55}) {
    const auto t = cubes(n);
    const residue_t d = davenport_search(n, t).value;
    const auto e = enumerate_extremal(t, d);
    REQUIRE(e.complete);
    const auto all = oracle::zero_sum_free_multisets(n, plain(t), static_cast<std::size_t>(d - 1));
    CHECK_MESSAGE(e.classes.size() == oracle::orbit_count(all, n, plain(t)), "n=" << n);
    CHECK(total_orbit_size(e) == all.size());
  }
}

TEST_CASE("frozen enumeration sizes") {
  // Brute-force values from oracles.hpp, frozen.
  const std::map<residue_t, std::pair<std::size_t, std::uint64_t>> expected{
      {19, {1, 108}}, {55, {3, 600}}, {85, {3, 1344}}, {95, {7, 18576}}, {35, {8, 1872}}, {49, {3, 7056}}};
  for (const auto& [n, counts] : expected) {
    const auto t = cubes(n);
    const auto e = enumerate_extremal(t, davenport_search(n, t).value);
    CHECK(e.classes.size() == counts.first);
    CHECK(total_orbit_size(e) == counts.second);
  }
}

TEST_CASE("construction and classification round trip") {
  for (residue_t n : {5, 19, 55, 95, 19 * 31, 5 * 11 * 19, 31 * 37}) {
    const auto p = factor(n);
    const Sequence s = construct_extremal(p);
    CHECK(static_cast<residue_t>(s.length()) == davenport_formula(p).value - 1);
    CHECK_FALSE(has_weighted_zero_subseq(s, cubes(n)));
    const auto report = classify_structure(s, p);
    CHECK(report.steps.back().kind == StructureCase::base);
    CHECK(reconstruct(report) == s);
  }
  const auto s95 = construct_extremal(factor(95));
  CHECK(s95 == Sequence(95, {19, 20, 40}));
}

TEST_CASE("classification of every extremal class") {
  for (residue_t n : {55, 95}) {
    const auto p = factor(n);
    const auto t = cubes(n);
    const auto e = enumerate_extremal(t, davenport_formula(p).value);
    for (const auto& c : e.classes) {
      const auto report = classify_structure(c.canonical, p);
      CHECK(equivalent(reconstruct(report), c.canonical, t));
      const auto& top = report.steps.front();
      CHECK(!top.qualifying_primes.empty());
      CHECK(top.coprime_terms.size() == (top.prime % 3 == 1 ? 2U : 1U));
    }
  }
}

TEST_CASE("classification guards") {
  const auto p = factor(95);
  CHECK_THROWS_AS(classify_structure(Sequence(95, {1, 20, 77}), p), HypothesisError);
  CHECK_THROWS_AS(classify_structure(Sequence(95, {1, 2}), p), HypothesisError);
  CHECK_THROWS_AS(classify_structure(Sequence(35, {1, 2, 5}), factor(35)), HypothesisError);
}

TEST_CASE("coprimality violators always have a zero sum") {
  Rng rng(23);
  for (residue_t n : {55, 95, 5 * 11 * 19}) {
    const auto p = factor(n);
    const auto len = static_cast<std::size_t>(davenport_formula(p).value - 1);
    for (int trial = 0; trial < 200; ++trial) {
      const Sequence s = coprimality_violator(p, len, rng);
      CHECK(s.length() == len);
      CHECK(has_weighted_zero_subseq(s, cubes(n)));
    }
  }
}

TEST_CASE("worked canonical forms") {
  const auto t = cubes(19);
  const residue_t g = 2;
  for (residue_t c : units(19)) {
    for (residue_t a : t.elements()) {
      for (residue_t b : t.elements()) {
        const Sequence moved(19, {c * a % 19 * g % 19, c * b % 19});
        CHECK(canonicalize(moved, t).canonical == canonicalize(Sequence(19, {1, g}), t).canonical);
      }
    }
  }
  CHECK(canonicalize(Sequence(19, {0, 0}), t).canonical == Sequence(19, {0, 0}));
  const Sequence s(19, {1, 5});
  CHECK(equivalent(s, s, t));
  CHECK(equivalent(Sequence(19, {1, g}), Sequence(19, {1, g * g}), t) ==
        oracle::equivalent_exhaustive({1, g}, {1, g * g}, plain(t), 19));
  CHECK_FALSE(equivalent(Sequence(19, {0, 1}), Sequence(19, {1, 1}), t));
  for (residue_t x = 1; x < 19; ++x) {
    for (residue_t y = x; y < 19; ++y) {
      CHECK(equivalent(Sequence(19, {1, 2}), Sequence(19, {x, y}), t) ==
            oracle::equivalent_exhaustive({1, 2}, {x, y}, plain(t), 19));
    }
  }
}

TEST_CASE("worked enumerations and constructions") {
  const auto e5 = enumerate_extremal(cubes(5), 2);
  REQUIRE(e5.classes.size() == 1);
  CHECK(e5.classes[0].canonical == Sequence(5, {1}));
  CHECK(construct_extremal(factor(5)) == Sequence(5, {1}));
  const Sequence s19 = construct_extremal(factor(19));
  CHECK(s19 == Sequence(19, {1, 2}));
  CHECK_FALSE(is_kth_power_residue(2, 3, 19));
  // Every T_19-extremal pair is a pair of units with ratio outside T_19.
  const auto e19 = enumerate_extremal(cubes(19), 3);
  for (const auto& pair : oracle::zero_sum_free_multisets(19, plain(cubes(19)), 2)) {
    CHECK(pair[0] != 0);
    CHECK_FALSE(cubes(19).contains(pair[1] * inverse_mod(pair[0], 19) % 19));
  }
  CHECK(e19.classes.size() == 1);
}

TEST_CASE("classification steps respect the prime split") {
  for (residue_t n : {55, 95, 5 * 11 * 19}) {
    const auto p = factor(n);
    for (const auto& step : classify_structure(construct_extremal(p), p).steps) {
      if (step.kind == StructureCase::case1) CHECK(step.prime % 3 == 1);
      if (step.kind == StructureCase::case2) CHECK(step.prime % 3 == 2);
      if (step.kind == StructureCase::base) CHECK(step.modulus == 1);
    }
  }
}

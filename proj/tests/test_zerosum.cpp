#include "doctest.h"
#include "oracles.hpp"
#include "wzs/generators.hpp"
#include "wzs/hypotheses.hpp"
#include "wzs/zerosum.hpp"

using namespace wzs;

namespace {

oracle::Seq plain(const Sequence& s) { return {s.terms().begin(), s.terms().end()}; }
std::vector<oracle::Int> plain(const WeightSet& a) { return {a.elements().begin(), a.elements().end()}; }

}  // namespace

TEST_CASE("sequence basics") {
  const Sequence s(10, {7, 3, 3});
  CHECK(s.terms() == std::vector<residue_t>{3, 3, 7});
  CHECK(s.multiplicity(3) == 2);
  CHECK(Sequence(10, {3, 7}).divides(s));
  CHECK_FALSE(Sequence(10, {7, 7}).divides(s));
  CHECK(s.project(5) == Sequence(5, {2, 3, 3}));
  CHECK(s.to_string() == "[3,3,7] mod 10");
  const std::vector<residue_t> raw{-1, 23};
  CHECK(Sequence::from_integers(10, raw) == Sequence(10, {3, 9}));
  CHECK_THROWS(Sequence(10, {10}));
}

TEST_CASE("a zero term is a zero sum") {
  const auto c = has_weighted_zero_subseq(Sequence(5, {0}), cubes(5));
  REQUIRE(c);
  CHECK(validates_zero_sum(*c, Sequence(5, {0}), cubes(5)));
}

TEST_CASE("certificate validation rejects tampering") {
  const Sequence s(95, {3, 17, 40});
  const auto t = cubes(95);
  auto c = has_weighted_zero_subseq(s, t);
  REQUIRE(c);
  CHECK(validates_zero_sum(*c, s, t));
  auto wrong_weight = *c;
  wrong_weight.picked[0].weight = 2;
  CHECK_FALSE(validates_zero_sum(wrong_weight, s, t));
  auto repeated = *c;
  repeated.picked.push_back(repeated.picked[0]);
  CHECK_FALSE(validates(repeated, s, t));
  CHECK_FALSE(validates_zero_sum(Certificate{}, s, t));
}

TEST_CASE("zero-sum detection matches brute force") {
  Rng rng(7);
  for (residue_t n : {5, 7, 13, 19, 20, 35, 55, 95}) {
    for (const auto& a : {cubes(n), squares(n), pm_one(n)}) {
      for (int trial = 0; trial < 60; ++trial) {
        const Sequence s = random_sequence(n, 1 + trial % 4, rng);
        const bool expected = oracle::has_zero_sum(plain(s), plain(a), n);
        const auto c = has_weighted_zero_subseq(s, a);
        CHECK_MESSAGE(c.has_value() == expected, s.to_string());
        if (c) CHECK(validates_zero_sum(*c, s, a));
        if (s.length() <= 3)
          CHECK(expected == oracle::has_zero_sum_exhaustive(plain(s), plain(a), n));
      }
    }
  }
}

TEST_CASE("reachable sums") {
  const auto r = reachable_sums(Sequence(19, {1}), cubes(19));
  CHECK(r.elements() == cubes(19).elements());
  CHECK_THROWS(reachable_sums(Sequence(18, {1}), cubes(19)));
}

TEST_CASE("fixed-length zero sums match brute force") {
  Rng rng(11);
  for (residue_t n : {5, 7, 11, 19}) {
    const auto a = cubes(n);
    for (int trial = 0; trial < 80; ++trial) {
      const Sequence s = random_sequence(n, 2 + trial % 6, rng);
      for (std::size_t len = 1; len <= s.length(); ++len) {
        const auto c = has_fixed_length_zero_subseq(s, a, len);
        CHECK(c.has_value() == oracle::has_zero_sum_of_length(plain(s), plain(a), n, len));
        if (c) {
          CHECK(c->picked.size() == len);
          CHECK(validates_zero_sum(*c, s, a));
        }
      }
    }
  }
  CHECK(has_fixed_length_zero_subseq(Sequence(5, {1}), cubes(5), 0, EmptySum::include));
  CHECK_FALSE(has_fixed_length_zero_subseq(Sequence(5, {1}), cubes(5), 0));
}

TEST_CASE("full-sequence sums and the prime-power split") {
  Rng rng(3);
  for (residue_t n : {35, 95, 91, 45, 98}) {
    const auto t = cubes(n);
    for (int trial = 0; trial < 100; ++trial) {
      const Sequence s = random_sequence(n, trial % 5, rng);
      const bool expected = oracle::full_zero_sum(plain(s), plain(t), n);
      const auto c = full_sequence_zero_sum(s, t);
      CHECK(c.has_value() == expected);
      if (c) CHECK(c->picked.size() == s.length());
      CHECK(crt_zero_check(s) == expected);
    }
  }
}

TEST_CASE("length-m extraction") {
  const auto p = factor(95);
  const auto t = cubes(95);
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Sequence s = random_sequence(95, 8, rng);
    const Certificate c = extract_length_m(s, p, 5);
    CHECK(c.picked.size() == 5);
    CHECK(validates_zero_sum(c, s, t));
  }
  // Sequences that force the peeling cases: everything divisible by 19 or 5.
  for (const auto& s : {Sequence(95, {0, 0, 0, 0, 0, 0, 0, 0}), Sequence(95, {1, 19, 38, 57, 76, 19, 38, 1}),
                        Sequence(95, {1, 2, 5, 10, 15, 20, 25, 30})}) {
    const Certificate c = extract_length_m(s, p, 5);
    CHECK(validates_zero_sum(c, s, t));
  }
  const auto p1001 = factor(11 * 17 * 5);
  for (int trial = 0; trial < 50; ++trial) {
    const Sequence s = random_sequence(935, 9, rng);
    CHECK(validates_zero_sum(extract_length_m(s, p1001, 6), s, cubes(935)));
  }
  CHECK_THROWS_AS(extract_length_m(random_sequence(95, 7, rng), p, 5), HypothesisError);
  CHECK_THROWS_AS(extract_length_m(random_sequence(95, 8, rng), p, 4), HypothesisError);
  CHECK_THROWS_AS(extract_length_m(random_sequence(21, 9, rng), factor(21), 5), HypothesisError);
}

TEST_CASE("reachable sums equal full enumeration") {
  for (residue_t n : {5, 7, 9, 19}) {
    for (const auto& a : {cubes(n), units_weights(n), singleton_one(n)}) {
      // Every multiset of length <= 4.
      std::function<void(std::vector<residue_t>&, residue_t)> rec = [&](std::vector<residue_t>& cur,
                                                                         residue_t from) {
        const Sequence s(n, cur);
        const auto set = oracle::reachable_exhaustive(plain(s), plain(a), n);
        CHECK(reachable_sums(s, a).elements() == std::vector<residue_t>(set.begin(), set.end()));
        if (cur.size() == 4) return;
        for (residue_t x = from; x < n; ++x) {
          cur.push_back(x);
          rec(cur, x);
          cur.pop_back();
        }
      };
      std::vector<residue_t> cur;
      rec(cur, 0);
    }
  }
  CHECK(reachable_sums(Sequence(19), cubes(19)).empty());
  CHECK(reachable_sums(Sequence(19, {0}), cubes(19)).elements() == std::vector<residue_t>{0});
}

TEST_CASE("reachable sums are monotone under divisibility") {
  Rng rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const Sequence s = random_sequence(95, 5, rng);
    const Sequence t(95, {s[0], s[2], s[4]});
    REQUIRE(t.divides(s));
    const auto big = reachable_sums(s, cubes(95));
    for (residue_t x : reachable_sums(t, cubes(95)).elements()) CHECK(big.contains(x));
  }
}

TEST_CASE("single units never vanish") {
  for (residue_t x : units(19)) CHECK_FALSE(has_weighted_zero_subseq(Sequence(19, {x}), cubes(19)));
  CHECK(has_weighted_zero_subseq(Sequence(19, {1, 1, 1}), cubes(19)));
  CHECK(has_weighted_zero_subseq(Sequence(31, {1, 1, 1}), cubes(31)));
}

TEST_CASE("three units have a full cubic zero sum mod p") {
  Rng rng(31);
  for (residue_t p : {11, 19, 31}) {
    std::uniform_int_distribution<residue_t> unit(1, p - 1), any(0, p - 1);
    std::uniform_int_distribution<int> extra(0, 4);
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<residue_t> terms{unit(rng), unit(rng), unit(rng)};
      for (int k = extra(rng); k > 0; --k) terms.push_back(any(rng));
      CHECK(full_sequence_zero_sum(Sequence(p, terms), cubes(p)));
    }
  }
}

TEST_CASE("two units have a full unit-weighted zero sum mod p^r") {
  Rng rng(25);
  for (residue_t q : {5, 25, 19}) {
    std::uniform_int_distribution<residue_t> any(0, q - 1);
    std::uniform_int_distribution<int> extra(0, 4);
    const auto u = units(q);
    std::uniform_int_distribution<std::size_t> pick(0, u.size() - 1);
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<residue_t> terms{u[pick(rng)], u[pick(rng)]};
      for (int k = extra(rng); k > 0; --k) terms.push_back(any(rng));
      CHECK(full_sequence_zero_sum(Sequence(q, terms), units_weights(q)));
    }
  }
}

TEST_CASE("length-n zero sums at the E bound") {
  Rng rng(98);
  for (int trial = 0; trial < 10; ++trial) {
    const Sequence s = random_sequence(95, 98, rng);
    const auto c = has_fixed_length_zero_subseq(s, cubes(95), 95);
    REQUIRE(c);
    CHECK(c->picked.size() == 95);
    CHECK(validates_zero_sum(*c, s, cubes(95)));
  }
  const Sequence zeros(7, std::vector<residue_t>(7, 0));
  CHECK(has_fixed_length_zero_subseq(zeros, cubes(7), 7));
  CHECK_FALSE(has_fixed_length_zero_subseq(Sequence(7, {0}), cubes(7), 2));
}

TEST_CASE("prime-power split refuses a bad projection") {
  // mod 5 the single term 1 cannot vanish.
  CHECK_FALSE(crt_zero_check(Sequence(95, {76})));
  CHECK(crt_zero_check(Sequence(95, {0, 0})));
  CHECK(crt_zero_check(Sequence(95)));
}

TEST_CASE("small extraction examples") {
  const Sequence s5(5, {1, 2, 3});
  const auto c5 = extract_length_m(s5, factor(5), 2);
  CHECK(c5.picked.size() == 2);
  CHECK(validates_zero_sum(c5, s5, cubes(5)));
  const Sequence s19(19, {0, 0, 0, 0, 0});
  const auto c19 = extract_length_m(s19, factor(19), 3);
  CHECK(c19.picked.size() == 3);
  CHECK(validates_zero_sum(c19, s19, cubes(19)));
}

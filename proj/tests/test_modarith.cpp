#include "doctest.h"
#include "oracles.hpp"
#include "wzs/modarith.hpp"

using namespace wzs;

TEST_CASE("factorization and the n1/n2 split") {
  const auto p = factor(2 * 9 * 7 * 7 * 5 * 11);
  CHECK(p.three_part == 18);
  CHECK(p.n1 == 49);
  CHECK(p.n2 == 55);
  CHECK(p.big_omega_n1 == 2);
  CHECK(p.small_omega_n1 == 1);
  CHECK(p.big_omega_n2 == 2);
  CHECK(p.small_omega_n2 == 2);
  CHECK_FALSE(p.is_squarefree());
  CHECK(factor(95).is_squarefree());
  CHECK(factor(1).factors.empty());
  CHECK_THROWS_AS(factor(0), std::out_of_range);
  CHECK_THROWS_AS(factor(1'000'001), std::out_of_range);
}

TEST_CASE("divisors and phi agree with direct counting") {
  for (residue_t n = 1; n <= 200; ++n) {
    const auto p = factor(n);
    std::vector<residue_t> expected;
    for (residue_t d = 1; d <= n; ++d)
      if (n % d == 0) expected.push_back(d);
    CHECK(divisors(p) == expected);
    CHECK(euler_phi(p) == static_cast<residue_t>(oracle::unit_list(n).size() + (n == 1)));
  }
}

TEST_CASE("crt") {
  const std::vector<CrtPart> parts{{2, 5}, {3, 19}};
  CHECK(crt_combine(parts) == 22);
  CHECK(crt_combine(parts) == oracle::crt_pair(2, 5, 3, 19));
  const std::vector<CrtPart> bad{{1, 6}, {1, 4}};
  CHECK_THROWS_AS(crt_combine(bad), std::invalid_argument);
  const auto p = factor(1001);
  for (residue_t x = 0; x < 1001; x += 37) CHECK(crt_combine(crt_split(x, p)) == x);
}

TEST_CASE("inverse") {
  CHECK(inverse_mod(3, 95) * 3 % 95 == 1);
  CHECK_THROWS_AS(inverse_mod(5, 95), std::invalid_argument);
}

TEST_CASE("power residues match enumeration") {
  CHECK_FALSE(is_kth_power_residue(2, 3, 19));
  for (residue_t m : {2, 4, 8, 9, 27, 19, 49, 95, 96, 343, 1000}) {
    for (int k : {2, 3}) {
      for (residue_t a = 0; a < m; ++a) {
        CHECK_MESSAGE(is_kth_power_residue(a, k, m) == oracle::is_kth_power(a, k, m),
                      "a=" << a << " k=" << k << " m=" << m);
      }
    }
  }
}

TEST_CASE("worked factorizations") {
  const auto p95 = factor(95);
  CHECK(p95.factors == std::vector<PrimeFactor>{{5, 1}, {19, 1}});
  CHECK(p95.n1 == 19);
  CHECK(p95.n2 == 5);
  const auto p1 = factor(1);
  CHECK(p1.n1 == 1);
  CHECK(p1.n2 == 1);
  const auto p = factor(3773);
  CHECK(p.n1 == 343);
  CHECK(p.n2 == 11);
  CHECK(p.big_omega_n1 == 3);
  for (residue_t n = 1; n <= 2000; ++n) {
    const auto q = factor(n);
    CHECK(q.n1 * q.n2 * q.three_part == n);
    CHECK(q.big_omega() >= q.small_omega());
    CHECK(q.big_omega() == q.big_omega_n1 + q.big_omega_n2 + factor(q.three_part).big_omega());
  }
}

TEST_CASE("units") {
  CHECK(units(5) == std::vector<residue_t>{1, 2, 3, 4});
  CHECK(units(9) == std::vector<residue_t>{1, 2, 4, 5, 7, 8});
  CHECK(units(1) == std::vector<residue_t>{0});
}

TEST_CASE("trivial crt parts") {
  const std::vector<CrtPart> zero{{0, 5}, {0, 19}};
  const std::vector<CrtPart> one{{1, 5}, {1, 19}};
  CHECK(crt_combine(zero) == 0);
  CHECK(crt_combine(one) == 1);
}

TEST_CASE("one is a k-th power everywhere") {
  for (residue_t m = 1; m <= 300; ++m)
    for (int k = 1; k <= 6; ++k) CHECK(is_kth_power_residue(1, k, m));
}

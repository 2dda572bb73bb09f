#include "doctest.h"
#include "oracles.hpp"
#include "wzs/weightsets.hpp"

using namespace wzs;

namespace {
std::vector<residue_t> as_residues(const std::vector<oracle::Int>& v) { return {v.begin(), v.end()}; }
}  // namespace

TEST_CASE("built-in families") {
  CHECK(cubes(9).elements() == std::vector<residue_t>{1, 8});
  CHECK(squares(11).elements() == std::vector<residue_t>{1, 3, 4, 5, 9});
  CHECK(cubes(19).elements() == std::vector<residue_t>{1, 7, 8, 11, 12, 18});
  CHECK(pm_one(10).elements() == std::vector<residue_t>{1, 9});
  CHECK(singleton_one(10).elements() == std::vector<residue_t>{1});
  for (residue_t n = 2; n <= 120; ++n) {
    CHECK(cubes(n).elements() == as_residues(oracle::power_units(n, 3)));
    CHECK(squares(n).elements() == as_residues(oracle::power_units(n, 2)));
    CHECK(units_weights(n).elements() == as_residues(oracle::unit_list(n)));
    CHECK(cubes(n).is_subgroup());
  }
}

TEST_CASE("cubes are all units when every prime is 2 mod 3") {
  for (residue_t n : {5, 11, 55, 85, 187}) CHECK(cubes(n) == units_weights(n));
  CHECK(cubes(95).size() == 24);
}

TEST_CASE("custom sets") {
  const auto a = custom(10, {3, 3, 1});
  CHECK(a.elements() == std::vector<residue_t>{1, 3});
  CHECK(a.kind() == WeightKind::custom);
  CHECK_FALSE(custom(10, {2}).is_subgroup());
  CHECK_THROWS(custom(10, {}));
  CHECK_THROWS(custom(10, {0}));
  CHECK_THROWS(custom(10, {10}));
  CHECK_THROWS(make_weights(WeightKind::custom, 10));
}

TEST_CASE("projection of cubes is cubes") {
  for (residue_t n : {95, 1001, 63, 98}) {
    for (residue_t m = 2; m <= n; ++m) {
      if (n % m == 0) CHECK(project(cubes(n), m) == cubes(m));
    }
  }
  CHECK_THROWS(project(custom(10, {5}), 5));
  CHECK_THROWS(project(cubes(10), 3));
}

TEST_CASE("kind names round-trip") {
  for (auto k : {WeightKind::cubes, WeightKind::squares, WeightKind::units, WeightKind::pm_one,
                 WeightKind::singleton_one, WeightKind::custom}) {
    CHECK(parse_weight_kind(to_string(k)) == k);
  }
  CHECK(parse_weight_kind("pm_one") == WeightKind::pm_one);
  CHECK_THROWS(parse_weight_kind("fifths"));
}

TEST_CASE("orbits under a subgroup") {
  const WeightOrbits o(cubes(19));
  CHECK(o.representatives() == std::vector<residue_t>{0, 1, 2, 4});
  CHECK(o.representative(18) == 1);
  CHECK(o.orbit_size(5) == 6);
  CHECK(o.orbit_size(0) == 1);
  CHECK_THROWS(WeightOrbits(custom(10, {3})));
}

TEST_CASE("worked weight sets") {
  CHECK(cubes(5).elements() == std::vector<residue_t>{1, 2, 3, 4});
  CHECK(singleton_one(7).elements() == std::vector<residue_t>{1});
  CHECK(pm_one(7).elements() == std::vector<residue_t>{1, 6});
  CHECK(project(cubes(95), 19) == cubes(19));
  CHECK(project(cubes(95), 5).elements() == std::vector<residue_t>{1, 2, 3, 4});
  CHECK(project(singleton_one(95), 5).elements() == std::vector<residue_t>{1});
  for (residue_t p : {7, 13, 19, 31, 37, 43, 61, 67, 73, 79}) {
    CHECK(cubes(p).size() == static_cast<std::size_t>((p - 1) / 3));
  }
  for (residue_t p : {5, 11, 17, 23, 29, 41, 47}) CHECK(cubes(p) == units_weights(p));
}

TEST_CASE("subgroup detection matches the multiplication table") {
  for (residue_t n = 2; n <= 500; ++n) {
    for (const auto& a : {cubes(n), squares(n), units_weights(n), pm_one(n), singleton_one(n)}) {
      const auto& e = a.elements();
      bool closed = std::find(e.begin(), e.end(), 1) != e.end();
      for (std::size_t i = 0; i < e.size() && closed; ++i)
        for (std::size_t j = 0; j < e.size() && closed; ++j)
          closed = std::binary_search(e.begin(), e.end(), e[i] * e[j] % n);
      CHECK(a.is_subgroup() == closed);
    }
  }
  CHECK_FALSE(custom(10, {1, 3, 7}).is_subgroup());
  CHECK(custom(10, {1, 3, 7, 9}).is_subgroup());
}

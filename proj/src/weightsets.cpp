#include "wzs/weightsets.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wzs {

std::string_view to_string(WeightKind kind) {
  switch (kind) {
    case WeightKind::cubes: return "cubes";
    case WeightKind::squares: return "squares";
    case WeightKind::units: return "units";
    case WeightKind::pm_one: return "pm1";
    case WeightKind::singleton_one: return "one";
    case WeightKind::custom: return "custom";
  }
  return "custom";
}

WeightKind parse_weight_kind(std::string_view name) {
  if (name == "cubes") return WeightKind::cubes;
  if (name == "squares") return WeightKind::squares;
  if (name == "units") return WeightKind::units;
  if (name == "pm1" || name == "pm_one") return WeightKind::pm_one;
  if (name == "one" || name == "singleton_one") return WeightKind::singleton_one;
  if (name == "custom") return WeightKind::custom;
  throw std::invalid_argument("unknown weight kind '" + std::string(name) + "'");
}

WeightSet::WeightSet(residue_t modulus, std::vector<residue_t> elements, WeightKind kind)
    : modulus_(modulus), elements_(std::move(elements)), kind_(kind), mask_(modulus) {
  if (modulus < 2) throw std::invalid_argument("weight set: modulus must be >= 2");
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (elements_.empty()) throw std::invalid_argument("weight set: must be nonempty");
  for (residue_t a : elements_) {
    if (a < 1 || a >= modulus) {
      throw std::invalid_argument("weight set: element " + std::to_string(a) +
                                  " outside [1, " + std::to_string(modulus - 1) + "]");
    }
    mask_.insert(a);
  }
  all_units_ = std::all_of(elements_.begin(), elements_.end(),
                           [&](residue_t a) { return std::gcd(a, modulus) == 1; });
  is_subgroup_ = mask_.contains(1);
  for (std::size_t i = 0; is_subgroup_ && i < elements_.size(); ++i) {
    for (std::size_t j = i; j < elements_.size(); ++j) {
      if (!mask_.contains(mul_mod(elements_[i], elements_[j], modulus))) {
        is_subgroup_ = false;
        break;
      }
    }
  }
}

namespace {

std::vector<residue_t> unit_powers(residue_t n, std::uint64_t k) {
  std::vector<residue_t> out;
  for (residue_t u : units(n)) out.push_back(pow_mod(u, k, n));
  return out;
}

}  // namespace

WeightSet cubes(residue_t n) {
  if (n < 2) throw std::invalid_argument("cubes: n must be >= 2");
  return WeightSet(n, unit_powers(n, 3), WeightKind::cubes);
}

WeightSet squares(residue_t n) {
  if (n < 2) throw std::invalid_argument("squares: n must be >= 2");
  return WeightSet(n, unit_powers(n, 2), WeightKind::squares);
}

WeightSet units_weights(residue_t n) {
  if (n < 2) throw std::invalid_argument("units: n must be >= 2");
  return WeightSet(n, units(n), WeightKind::units);
}

WeightSet pm_one(residue_t n) {
  if (n < 2) throw std::invalid_argument("pm_one: n must be >= 2");
  return WeightSet(n, {1, n - 1}, WeightKind::pm_one);
}

WeightSet singleton_one(residue_t n) {
  if (n < 2) throw std::invalid_argument("singleton_one: n must be >= 2");
  return WeightSet(n, {1}, WeightKind::singleton_one);
}

WeightSet custom(residue_t n, std::vector<residue_t> elements) {
  return WeightSet(n, std::move(elements), WeightKind::custom);
}

WeightSet make_weights(WeightKind kind, residue_t n) {
  switch (kind) {
    case WeightKind::cubes: return cubes(n);
    case WeightKind::squares: return squares(n);
    case WeightKind::units: return units_weights(n);
    case WeightKind::pm_one: return pm_one(n);
    case WeightKind::singleton_one: return singleton_one(n);
    case WeightKind::custom: break;
  }
  throw std::invalid_argument("make_weights: custom weights need explicit elements");
}

WeightSet project(const WeightSet& weights, residue_t m) {
  const residue_t n = weights.modulus();
  if (m < 2 || n % m != 0) {
    throw std::invalid_argument("project: " + std::to_string(m) + " is not a divisor >= 2 of " +
                                std::to_string(n));
  }
  std::vector<residue_t> image;
  for (residue_t a : weights.elements()) {
    const residue_t r = a % m;
    if (r == 0) {
      throw std::invalid_argument("project: weight " + std::to_string(a) + " vanishes modulo " +
                                  std::to_string(m));
    }
    image.push_back(r);
  }
  return WeightSet(m, std::move(image), weights.kind());
}

WeightOrbits::WeightOrbits(const WeightSet& weights) {
  if (!weights.is_subgroup() || !weights.all_units()) {
    throw std::invalid_argument("weight orbits need a subgroup of the unit group");
  }
  const residue_t n = weights.modulus();
  rep_.assign(static_cast<std::size_t>(n), -1);
  size_.assign(static_cast<std::size_t>(n), 0);
  for (residue_t x = 0; x < n; ++x) {
    if (rep_[x] >= 0) continue;
    // x is the least unvisited residue, hence the least element of its orbit.
    std::vector<residue_t> orbit;
    for (residue_t a : weights.elements()) {
      const residue_t y = mul_mod(a, x, n);
      if (rep_[y] < 0) {
        rep_[y] = x;
        orbit.push_back(y);
      }
    }
    size_[x] = orbit.size();
    reps_.push_back(x);
  }
}

}  // namespace wzs

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wzs/modarith.hpp"
#include "wzs/residue_set.hpp"

namespace wzs {

enum class WeightKind { cubes, squares, units, pm_one, singleton_one, custom };

/// CLI spelling: cubes, squares, units, pm1, one, custom.
std::string_view to_string(WeightKind kind);
/// Accepts the CLI spelling and the long tags (pm_one, singleton_one).
WeightKind parse_weight_kind(std::string_view name);

/// A nonempty set of weights A in [1, n-1], materialized as a sorted list
/// plus a membership mask.
class WeightSet {
 public:
  WeightSet(residue_t modulus, std::vector<residue_t> elements, WeightKind kind);

  residue_t modulus() const { return modulus_; }
  WeightKind kind() const { return kind_; }
  const std::vector<residue_t>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(residue_t a) const { return a >= 0 && a < modulus_ && mask_.contains(a); }

  /// Contains 1 and is closed under multiplication mod n.
  bool is_subgroup() const { return is_subgroup_; }
  bool all_units() const { return all_units_; }

  friend bool operator==(const WeightSet& a, const WeightSet& b) {
    return a.modulus_ == b.modulus_ && a.elements_ == b.elements_;
  }

 private:
  residue_t modulus_;
  std::vector<residue_t> elements_;
  WeightKind kind_;
  ResidueSet mask_;
  bool is_subgroup_ = false;
  bool all_units_ = false;
};

WeightSet cubes(residue_t n);
WeightSet squares(residue_t n);
WeightSet units_weights(residue_t n);
WeightSet pm_one(residue_t n);
WeightSet singleton_one(residue_t n);
WeightSet custom(residue_t n, std::vector<residue_t> elements);

/// Built-in family by tag; `custom` is rejected here.
WeightSet make_weights(WeightKind kind, residue_t n);

/// Image of A under Z_n -> Z_m. The built-in families map onto the same
/// family over Z_m; custom sets with an element vanishing mod m are rejected.
WeightSet project(const WeightSet& weights, residue_t m);

/// Orbits of Z_n under multiplication by a subgroup A of Z_n^*: each residue
/// maps to the least element of A*x.
class WeightOrbits {
 public:
  explicit WeightOrbits(const WeightSet& weights);

  residue_t modulus() const { return static_cast<residue_t>(rep_.size()); }
  residue_t representative(residue_t x) const { return rep_[x]; }
  std::size_t orbit_size(residue_t x) const { return size_[rep_[x]]; }
  /// Orbit representatives in increasing order (including 0).
  const std::vector<residue_t>& representatives() const { return reps_; }

 private:
  std::vector<residue_t> rep_;
  std::vector<std::size_t> size_;
  std::vector<residue_t> reps_;
};

}  // namespace wzs

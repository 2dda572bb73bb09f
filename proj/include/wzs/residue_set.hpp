#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "wzs/modarith.hpp"

namespace wzs {

/// Fixed-universe bitset over Z_n. The DP layers are built from these.
class ResidueSet {
 public:
  ResidueSet() = default;
  explicit ResidueSet(residue_t modulus)
      : modulus_(modulus), words_((static_cast<std::size_t>(modulus) + 63) / 64, 0) {}

  residue_t modulus() const { return modulus_; }

  void insert(residue_t x) { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  void erase(residue_t x) { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }
  bool contains(residue_t x) const { return (words_[x >> 6] >> (x & 63)) & 1U; }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool intersects(const ResidueSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  ResidueSet& operator|=(const ResidueSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  /// this |= { (s + shift) mod n : s in src }.
  void or_rotated(const ResidueSet& src, residue_t shift);

  /// Elements in increasing order.
  std::vector<residue_t> elements() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        const int b = std::countr_zero(w);
        f(static_cast<residue_t>(i * 64 + static_cast<std::size_t>(b)));
        w &= w - 1;
      }
    }
  }

  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

 private:
  residue_t modulus_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace wzs

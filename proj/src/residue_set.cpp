#include "wzs/residue_set.hpp"

namespace wzs {

namespace {

// dst |= src << k, dropping bits at or above `bits`.
void or_shift_left(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src,
                   std::size_t k, std::size_t bits) {
  const std::size_t ws = k / 64;
  const std::size_t bs = k % 64;
  const std::size_t nw = dst.size();
  for (std::size_t j = nw; j-- > ws;) {
    std::uint64_t v = src[j - ws] << bs;
    if (bs != 0 && j - ws >= 1) v |= src[j - ws - 1] >> (64 - bs);
    dst[j] |= v;
  }
  if (bits % 64 != 0) dst[nw - 1] &= (std::uint64_t{1} << (bits % 64)) - 1;
}

// dst |= src >> k.
void or_shift_right(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src,
                    std::size_t k) {
  const std::size_t ws = k / 64;
  const std::size_t bs = k % 64;
  const std::size_t nw = dst.size();
  for (std::size_t j = 0; j + ws < nw; ++j) {
    std::uint64_t v = src[j + ws] >> bs;
    if (bs != 0 && j + ws + 1 < nw) v |= src[j + ws + 1] << (64 - bs);
    dst[j] |= v;
  }
}

}  // namespace

void ResidueSet::or_rotated(const ResidueSet& src, residue_t shift) {
  const auto n = static_cast<std::size_t>(modulus_);
  const auto k = static_cast<std::size_t>(mod(shift, modulus_));
  if (k == 0) {
    *this |= src;
    return;
  }
  if (&src == this) {
    const ResidueSet copy = src;
    or_rotated(copy, shift);
    return;
  }
  // Bits >= n never occur in either operand, so the top-word mask in
  // or_shift_left only clears bits shifted past the universe.
  or_shift_left(words_, src.words_, k, n);
  or_shift_right(words_, src.words_, n - k);
}

std::vector<residue_t> ResidueSet::elements() const {
  std::vector<residue_t> out;
  for_each([&](residue_t x) { out.push_back(x); });
  return out;
}

}  // namespace wzs

#pragma once

// Compact monomial keys for the hot enumeration loops. A variable is one byte
// (family * 128 + rank of the pair among 15 indices, plus one so that zero
// means "no factor"); a monomial of degree <= 8 is its sorted bytes packed
// into a 64-bit word.

#include <array>
#include <cstddef>
#include <cstdint>
#include <utility>

#include "tracecert/poly.hpp"

namespace tracecert::packed {

inline constexpr int kMaxIndex = 15;
inline constexpr std::size_t kMaxDegree = 8;

using Key = std::uint64_t;

inline bool supports(int n, std::size_t degree) { return n <= kMaxIndex && degree <= kMaxDegree; }

inline std::uint8_t code(Family family, int i, int j) {
  if (i > j) std::swap(i, j);
  const int rank = (i - 1) * kMaxIndex - (i - 1) * (i - 2) / 2 + (j - i);
  return static_cast<std::uint8_t>(static_cast<int>(family) * 128 + rank + 1);
}

VarRef decode(std::uint8_t byte);

/// Sorts the first `count` codes in place and packs them.
Key pack(std::uint8_t* codes, std::size_t count);

Monomial unpack(Key key);

}  // namespace tracecert::packed

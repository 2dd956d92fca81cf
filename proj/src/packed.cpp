#include "tracecert/packed.hpp"

#include <stdexcept>

namespace tracecert::packed {

namespace {

struct PairTable {
  std::array<std::pair<int, int>, 128> pairs{};
  PairTable() {
    for (int i = 1; i <= kMaxIndex; ++i) {
      for (int j = i; j <= kMaxIndex; ++j) pairs[code(Family::a, i, j) - 1] = {i, j};
    }
  }
};

const PairTable& pair_table() {
  static const PairTable table;
  return table;
}

}  // namespace

VarRef decode(std::uint8_t byte) {
  if (byte == 0) throw std::invalid_argument("packed::decode: empty slot");
  const int value = byte - 1;
  const auto [i, j] = pair_table().pairs[static_cast<std::size_t>(value % 128)];
  return VarRef{value >= 128 ? Family::b : Family::a, i, j};
}

Key pack(std::uint8_t* codes, std::size_t count) {
  // insertion sort: count is at most eight
  for (std::size_t k = 1; k < count; ++k) {
    const std::uint8_t x = codes[k];
    std::size_t p = k;
    while (p > 0 && codes[p - 1] > x) {
      codes[p] = codes[p - 1];
      --p;
    }
    codes[p] = x;
  }
  Key key = 0;
  for (std::size_t k = 0; k < count; ++k) key |= static_cast<Key>(codes[k]) << (56 - 8 * k);
  return key;
}

Monomial unpack(Key key) {
  std::vector<VarRef> factors;
  for (std::size_t k = 0; k < kMaxDegree; ++k) {
    const auto byte = static_cast<std::uint8_t>(key >> (56 - 8 * k));
    if (byte == 0) break;
    factors.push_back(decode(byte));
  }
  return Monomial(std::move(factors));
}

}  // namespace tracecert::packed

#include "tracecert/certificate.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace tracecert {

namespace {

VarRef a(int i, int j) { return VarRef::make(Family::a, i, j); }
VarRef b(int i, int j) { return VarRef::make(Family::b, i, j); }
Monomial mono(VarRef x, VarRef y, VarRef z) { return Monomial({x, y, z}); }

int image(std::span<const int> sigma, int x) {
  if (x < 1 || x > static_cast<int>(sigma.size())) throw std::out_of_range("index outside permutation");
  return sigma[static_cast<std::size_t>(x - 1)];
}

std::vector<int> parse_tuple(std::string_view text, bool& hatted) {
  hatted = false;
  if (text.size() < 3 || text.front() != '(' || text.back() != ')') {
    throw std::invalid_argument("malformed index '" + std::string(text) + "'");
  }
  std::vector<int> parts;
  std::size_t pos = 1;
  while (pos < text.size() - 1) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size() - 1, value);
    if (ec != std::errc()) throw std::invalid_argument("malformed index '" + std::string(text) + "'");
    pos = static_cast<std::size_t>(ptr - text.data());
    parts.push_back(value);
    if (pos < text.size() - 1 && text[pos] == '^') {
      hatted = true;
      ++pos;
    }
    if (pos < text.size() - 1) {
      if (text[pos] != ',') throw std::invalid_argument("malformed index '" + std::string(text) + "'");
      ++pos;
    }
  }
  return parts;
}

bool in_range(int n, int x) { return x >= 1 && x <= n; }

bool valid(int n, const YIndex& y) {
  switch (y.block) {
    case 1:
      return in_range(n, y.i) && y.i < y.j && y.j < y.k && in_range(n, y.k) && y.contains(y.l);
    case 2:
      return in_range(n, y.i) && in_range(n, y.j) && y.i != y.j;
    case 3:
      return in_range(n, y.i) && in_range(n, y.j);
    default:
      return false;
  }
}

int eq(int x, int y) { return x == y ? 1 : 0; }

long s1(const YIndex& r, const YIndex& c) {
  const int common = static_cast<int>(r.contains(c.i)) + r.contains(c.j) + r.contains(c.k);
  return 6L * (common + eq(r.l, c.l));
}

long s2(const YIndex& r, const YIndex& c) {
  return 6L * eq(r.j, c.j) + 30L * eq(r.i, c.i) + 12L * eq(r.i, c.j) + 12L * eq(r.j, c.i);
}

long s3(const YIndex& r, const YIndex& c) {
  if (r.i != r.j && c.i != c.j) {
    const int common = eq(r.i, c.i) + eq(r.i, c.j) + eq(r.j, c.i) + eq(r.j, c.j);
    return 3L * (common + eq(r.i, c.i));
  }
  return 3L * (3 * eq(r.i, c.i) + 2 * eq(r.j, c.j));
}

long s12(const YIndex& r, const YIndex& c) {
  return 12L * r.contains(c.i) + 6L * r.contains(c.j) + 6L * eq(c.i, r.l);
}

long s13(const YIndex& r, const YIndex& c) {
  return 6L * r.contains(c.i) + 3L * r.contains(c.j) + 3L * eq(c.j, r.l);
}

// First matching condition wins, in the order printed in the definition.
long s23(const YIndex& r, const YIndex& c) {
  const int i = r.i, j = r.j, hi = c.i, hj = c.j;
  if (i == hi && j == hj) return 15;
  if (i == hi && i == hj) return 21;
  if (i == hi && i != j && j != hi && i != hj) return 12;
  if (j == hi && i == hj) return 15;
  if (i == hj && j != hi && i != hi) return 9;
  if (hi == hj && j == hi) return 9;
  if (j == hi && i != hj && j != hj) return 6;
  if (j == hj && hi != hj) return 3;
  return 0;
}

}  // namespace

YIndex YIndex::triple(int i, int j, int k, int l) {
  int t[3] = {i, j, k};
  std::sort(t, t + 3);
  return {1, t[0], t[1], t[2], l};
}

std::string YIndex::to_string() const {
  switch (block) {
    case 1:
      return "({" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "}," + std::to_string(l) + ")";
    case 2:
      return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    default:
      return "(" + std::to_string(i) + "^," + std::to_string(j) + "^)";
  }
}

YIndex YIndex::parse(std::string_view text) {
  if (text.size() > 2 && text[1] == '{') {
    // ({i,j,k},l)
    std::string flat(text);
    flat.erase(std::remove(flat.begin(), flat.end(), '{'), flat.end());
    flat.erase(std::remove(flat.begin(), flat.end(), '}'), flat.end());
    bool hatted = false;
    const auto parts = parse_tuple(flat, hatted);
    if (parts.size() != 4 || hatted) throw std::invalid_argument("malformed y-index '" + std::string(text) + "'");
    YIndex out = triple(parts[0], parts[1], parts[2], parts[3]);
    if (!out.contains(out.l)) throw std::invalid_argument("y-index: l not in T in '" + std::string(text) + "'");
    return out;
  }
  bool hatted = false;
  const auto parts = parse_tuple(text, hatted);
  if (parts.size() != 2) throw std::invalid_argument("malformed y-index '" + std::string(text) + "'");
  return hatted ? hat(parts[0], parts[1]) : pair(parts[0], parts[1]);
}

Monomial YIndex::monomial() const {
  switch (block) {
    case 1: {
      int rest[2];
      int n = 0;
      for (int x : {i, j, k}) {
        if (x != l) rest[n++] = x;
      }
      return mono(a(l, rest[0]), a(l, rest[1]), b(rest[0], rest[1]));
    }
    case 2:
      return mono(a(i, j), a(i, i), b(i, j));
    default:
      return mono(a(i, j), a(i, j), b(i, i));
  }
}

YIndex YIndex::permute(std::span<const int> sigma) const {
  if (block == 1) return triple(image(sigma, i), image(sigma, j), image(sigma, k), image(sigma, l));
  return {block, image(sigma, i), image(sigma, j), 0, 0};
}

std::string ZIndex::to_string() const {
  std::string out = "(" + std::to_string(block);
  if (block == 3) return out + "," + std::to_string(k) + ")";
  if (sub != 0) out += "," + std::to_string(sub);
  if (k != 0) out += "," + std::to_string(k);
  if (l != 0) out += "," + std::to_string(l);
  return out + ")";
}

ZIndex ZIndex::parse(std::string_view text) {
  bool hatted = false;
  const auto parts = parse_tuple(text, hatted);
  if (hatted || parts.empty() || parts[0] < 1 || parts[0] > 6) {
    throw std::invalid_argument("malformed z-index '" + std::string(text) + "'");
  }
  ZIndex z;
  z.block = parts[0];
  if (z.block == 1) {
    if (parts.size() != 1) throw std::invalid_argument("malformed z-index '" + std::string(text) + "'");
    return z;
  }
  if (z.block == 3) {
    if (parts.size() != 2) throw std::invalid_argument("malformed z-index '" + std::string(text) + "'");
    z.k = parts[1];
    return z;
  }
  if (parts.size() < 2 || parts.size() > 4) throw std::invalid_argument("malformed z-index '" + std::string(text) + "'");
  z.sub = parts[1];
  if (parts.size() > 2) z.k = parts[2];
  if (parts.size() > 3) z.l = parts[3];
  return z;
}

Monomial ZIndex::monomial(int i, int j) const {
  const int k_ = k, l_ = l;
  switch (block) {
    case 1:
      return mono(a(i, j), a(i, j), b(i, j));
    case 2:
      return sub == 1 ? mono(a(i, i), a(i, j), b(i, i)) : mono(a(i, j), a(i, k_), b(i, k_));
    case 3:
      return mono(a(i, j), a(j, k_), b(j, k_));
    case 4:
      switch (sub) {
        case 1: return mono(a(i, i), a(j, j), b(i, j));
        case 2: return mono(a(i, i), a(j, k_), b(i, k_));
        case 3: return mono(a(i, k_), a(j, j), b(j, k_));
        case 4: return mono(a(i, k_), a(j, k_), b(k_, k_));
        default: return mono(a(i, k_), a(j, l_), b(k_, l_));
      }
    case 5:
      switch (sub) {
        case 1: return mono(a(i, i), a(i, i), b(i, j));
        case 2: return mono(a(i, i), a(i, j), b(j, j));
        case 3: return mono(a(i, i), a(i, k_), b(k_, j));
        case 4: return mono(a(i, k_), a(i, k_), b(i, j));
        case 5: return mono(a(i, k_), a(j, k_), b(j, j));
        case 6: return mono(a(i, k_), a(k_, k_), b(j, k_));
        default: return mono(a(i, k_), a(k_, l_), b(j, l_));
      }
    default:
      switch (sub) {
        case 1: return mono(a(j, j), a(i, j), b(i, i));
        case 2: return mono(a(j, j), a(j, j), b(i, j));
        case 3: return mono(a(j, j), a(k_, j), b(i, k_));
        case 4: return mono(a(j, k_), a(i, k_), b(i, i));
        case 5: return mono(a(j, k_), a(j, k_), b(i, j));
        case 6: return mono(a(j, k_), a(k_, k_), b(i, k_));
        default: return mono(a(j, k_), a(k_, l_), b(i, l_));
      }
  }
}

ZIndex ZIndex::permute(std::span<const int> sigma) const {
  ZIndex out = *this;
  if (k != 0) out.k = image(sigma, k);
  if (l != 0) out.l = image(sigma, l);
  return out;
}

std::size_t y_size(int n) {
  const auto nn = static_cast<std::size_t>(n);
  return 3 * binomial(n, 3).get_ui() + nn * (nn - 1) + nn * nn;
}

std::size_t z_size(int n) {
  const auto nn = static_cast<std::size_t>(n);
  return 3 * nn * nn - 2 * nn;
}

std::vector<YIndex> y_indices(int n) {
  std::vector<YIndex> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        for (int l : {i, j, k}) out.push_back(YIndex::triple(i, j, k, l));
      }
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i != j) out.push_back(YIndex::pair(i, j));
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) out.push_back(YIndex::hat(i, j));
  }
  return out;
}

std::vector<ZIndex> z_indices(int n, int i, int j) {
  if (!(1 <= i && i < j && j <= n)) throw std::invalid_argument("z_indices: need 1 <= i < j <= n");
  std::vector<int> others;
  for (int k = 1; k <= n; ++k) {
    if (k != i && k != j) others.push_back(k);
  }
  std::vector<ZIndex> out;
  out.push_back({1, 0, 0, 0});
  out.push_back({2, 1, 0, 0});
  for (int k : others) out.push_back({2, 2, k, 0});
  for (int k = 1; k <= n; ++k) {
    if (k != i) out.push_back({3, 0, k, 0});
  }
  for (int block = 4; block <= 6; ++block) {
    const int singles = block == 4 ? 1 : 2;
    const int families = block == 4 ? 3 : 4;
    for (int s = 1; s <= singles; ++s) out.push_back({block, s, 0, 0});
    for (int s = singles + 1; s <= singles + families; ++s) {
      for (int k : others) out.push_back({block, s, k, 0});
    }
    for (int k : others) {
      for (int l : others) {
        if (k != l) out.push_back({block, singles + families + 1, k, l});
      }
    }
  }
  return out;
}

LabeledMonomialVector build_y(int n) {
  LabeledMonomialVector out;
  for (const auto& y : y_indices(n)) {
    out.labels.push_back(y.to_string());
    out.entries.push_back(y.monomial());
  }
  return out;
}

LabeledMonomialVector build_z(int n, int i, int j) {
  LabeledMonomialVector out;
  for (const auto& z : z_indices(n, i, j)) {
    out.labels.push_back(z.to_string());
    out.entries.push_back(z.monomial(i, j));
  }
  return out;
}

long entry_U(int n, const YIndex& row, const YIndex& col) {
  if (!valid(n, row) || !valid(n, col)) {
    throw std::invalid_argument("entry_U: invalid index " + row.to_string() + " / " + col.to_string());
  }
  if (row.block > col.block) return entry_U(n, col, row);
  switch (row.block * 10 + col.block) {
    case 11: return s1(row, col);
    case 12: return s12(row, col);
    case 13: return s13(row, col);
    case 22: return s2(row, col);
    case 23: return s23(row, col);
    default: return s3(row, col);
  }
}

ExactMatrix build_U(int n) {
  const auto labels = y_indices(n);
  const std::size_t size = labels.size();
  ExactMatrix u(size, size);
  const auto rows = static_cast<std::ptrdiff_t>(size);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t r = 0; r < rows; ++r) {
    const auto row = static_cast<std::size_t>(r);
    for (std::size_t c = 0; c < size; ++c) u(row, c) = entry_U(n, labels[row], labels[c]);
  }
  std::vector<std::string> text;
  for (const auto& y : labels) text.push_back(y.to_string());
  u.set_labels(text, text);
  return u;
}

std::vector<std::size_t> r_block_sizes(int n) {
  const auto m = static_cast<std::size_t>(n - 1);
  const auto nn = static_cast<std::size_t>(n);
  return {1, m, m, m * m, nn * m, nn * m};
}

BlockConstantMatrix build_R_blocks(int n) {
  const std::vector<std::vector<long>> grid = {{30, 21, 21, 12, 9, 9}, {21, 18, 12, 9, 3, 9}, {21, 12, 18, 9, 9, 3},
                                               {12, 9, 9, 6, 3, 3},     {9, 3, 9, 3, 6, 0},    {9, 9, 3, 3, 0, 6}};
  std::vector<Rational> values;
  for (const auto& row : grid) {
    for (long v : row) values.emplace_back(v);
  }
  const auto sizes = r_block_sizes(n);
  return BlockConstantMatrix(sizes, sizes, std::move(values));
}

ExactMatrix build_R(int n) {
  ExactMatrix r = build_R_blocks(n).expand();
  std::vector<std::string> labels;
  if (n == 1) {
    labels.push_back(ZIndex{}.to_string());
  } else {
    for (const auto& z : z_indices(n, 1, 2)) labels.push_back(z.to_string());
  }
  r.set_labels(labels, labels);
  return r;
}

}  // namespace tracecert

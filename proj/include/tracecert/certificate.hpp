#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tracecert/block_matrix.hpp"
#include "tracecert/exact_matrix.hpp"
#include "tracecert/poly.hpp"

namespace tracecert {

/// Index of an entry of y.
///   block 1: (T, l) with T = {i < j < k} and l in T   -> "({i,j,k},l)"
///   block 2: ordered pair (i, j), i != j              -> "(i,j)"
///   block 3: ordered pair (i^, j^), equality allowed  -> "(i^,j^)"
struct YIndex {
  int block = 1;
  int i = 0;
  int j = 0;
  int k = 0;  // block 1 only
  int l = 0;  // block 1 only

  static YIndex triple(int i, int j, int k, int l);
  static YIndex pair(int i, int j) { return {2, i, j, 0, 0}; }
  static YIndex hat(int i, int j) { return {3, i, j, 0, 0}; }

  std::string to_string() const;
  /// Throws std::invalid_argument on malformed text.
  static YIndex parse(std::string_view text);
  Monomial monomial() const;
  /// Relabels every index through sigma (1-based images).
  YIndex permute(std::span<const int> sigma) const;
  bool contains(int x) const { return i == x || j == x || k == x; }  // block 1: x in T

  friend auto operator<=>(const YIndex&, const YIndex&) = default;
};

/// Index of an entry of z_(i,j): the tag tuple "(1)", "(2,1)", "(2,2,k)",
/// "(3,k)", "(4,5,k,l)", ... . `sub` is 0 for blocks 1 and 3; k and l are 0
/// when absent.
struct ZIndex {
  int block = 1;
  int sub = 0;
  int k = 0;
  int l = 0;

  std::string to_string() const;
  static ZIndex parse(std::string_view text);
  /// Monomial at this index of z_(i,j).
  Monomial monomial(int i, int j) const;
  /// Relabels k and l through sigma.
  ZIndex permute(std::span<const int> sigma) const;

  friend auto operator<=>(const ZIndex&, const ZIndex&) = default;
};

struct LabeledMonomialVector {
  std::vector<std::string> labels;
  std::vector<Monomial> entries;
  std::size_t size() const { return entries.size(); }
};

std::size_t y_size(int n);
std::size_t z_size(int n);

std::vector<YIndex> y_indices(int n);
/// Throws std::invalid_argument unless 1 <= i < j <= n.
std::vector<ZIndex> z_indices(int n, int i, int j);

LabeledMonomialVector build_y(int n);
LabeledMonomialVector build_z(int n, int i, int j);

/// Entry of U in the given row and column. Throws std::invalid_argument if
/// either index is not a valid y-index for n.
long entry_U(int n, const YIndex& row, const YIndex& col);
/// Dense U with y-index labels; rows are filled in parallel.
ExactMatrix build_U(int n);

/// Row/column block sizes of R: 1, n-1, n-1, (n-1)^2, n(n-1), n(n-1).
std::vector<std::size_t> r_block_sizes(int n);
BlockConstantMatrix build_R_blocks(int n);
/// Dense R labeled with the z_(1,2) index tags (just "(1)" when n = 1).
ExactMatrix build_R(int n);

}  // namespace tracecert

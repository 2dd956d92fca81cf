#pragma once

#include <cstddef>
#include <vector>

#include "tracecert/exact_matrix.hpp"

namespace tracecert {

/// Block matrix that is constant inside every block.
///
/// Row block r has row_sizes()[r] rows, column block c has col_sizes()[c]
/// columns, and every entry of block (r, c) equals value(r, c). Zero-sized
/// blocks are allowed and simply vanish on expansion.
class BlockConstantMatrix {
 public:
  BlockConstantMatrix() = default;
  /// `values` is row-block major and must hold row_sizes.size() * col_sizes.size() entries.
  BlockConstantMatrix(std::vector<std::size_t> row_sizes, std::vector<std::size_t> col_sizes,
                      std::vector<Rational> values);
  static BlockConstantMatrix from_grid(std::vector<std::size_t> row_sizes, std::vector<std::size_t> col_sizes,
                                       const std::vector<std::vector<Rational>>& grid);

  const std::vector<std::size_t>& row_sizes() const { return row_sizes_; }
  const std::vector<std::size_t>& col_sizes() const { return col_sizes_; }
  std::size_t row_blocks() const { return row_sizes_.size(); }
  std::size_t col_blocks() const { return col_sizes_.size(); }
  std::size_t rows() const;
  std::size_t cols() const;

  const Rational& value(std::size_t rb, std::size_t cb) const { return values_[rb * col_sizes_.size() + cb]; }

  ExactMatrix expand() const;
  BlockConstantMatrix transpose() const;
  /// Contiguous range of row blocks and column blocks.
  BlockConstantMatrix blocks(std::size_t rb0, std::size_t rb_count, std::size_t cb0, std::size_t cb_count) const;

  /// True when every block value is the same nonnegative constant or every
  /// block is empty; such a matrix is a Gram matrix and hence PSD.
  bool is_uniform_nonnegative() const;
  /// Square block structure, zero off-diagonal blocks, nonnegative diagonal
  /// constants: PSD as a direct sum of Gram matrices.
  bool is_psd_block_diagonal() const;

  friend bool operator==(const BlockConstantMatrix&, const BlockConstantMatrix&) = default;

 private:
  std::vector<std::size_t> row_sizes_;
  std::vector<std::size_t> col_sizes_;
  std::vector<Rational> values_;
};

BlockConstantMatrix operator-(const BlockConstantMatrix& a, const BlockConstantMatrix& b);

/// Product of block-constant matrices; block (i, j) of the result is
/// sum_k A(i,k) * |k| * B(k,j). Throws std::invalid_argument when A's column
/// blocks differ from B's row blocks.
BlockConstantMatrix block_product(const BlockConstantMatrix& a, const BlockConstantMatrix& b);

struct ConstantBlockPinv {
  BlockConstantMatrix matrix;
  bool zero_block = false;  // input was the zero block; result is zero by convention
};

/// Moore-Penrose inverse of the s x s matrix with every entry c: the s x s
/// matrix with every entry 1/(s^2 c). For c = 0 the result is the zero block
/// and `zero_block` is set. Throws std::invalid_argument for s = 0.
ConstantBlockPinv pinv_constant_block(std::size_t s, const Rational& c);

/// Pseudo-inverse of a block-diagonal matrix with constant diagonal blocks,
/// taken block by block. Throws if the structure is not square block-diagonal.
BlockConstantMatrix pinv_block_diagonal(const BlockConstantMatrix& m);

}  // namespace tracecert

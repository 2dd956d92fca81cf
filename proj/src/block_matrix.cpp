#include "tracecert/block_matrix.hpp"

#include <numeric>
#include <stdexcept>

namespace tracecert {

BlockConstantMatrix::BlockConstantMatrix(std::vector<std::size_t> row_sizes, std::vector<std::size_t> col_sizes,
                                         std::vector<Rational> values)
    : row_sizes_(std::move(row_sizes)), col_sizes_(std::move(col_sizes)), values_(std::move(values)) {
  if (values_.size() != row_sizes_.size() * col_sizes_.size()) {
    throw std::invalid_argument("BlockConstantMatrix: value grid does not match block structure");
  }
}

BlockConstantMatrix BlockConstantMatrix::from_grid(std::vector<std::size_t> row_sizes,
                                                   std::vector<std::size_t> col_sizes,
                                                   const std::vector<std::vector<Rational>>& grid) {
  std::vector<Rational> values;
  for (const auto& row : grid) {
    if (row.size() != col_sizes.size()) throw std::invalid_argument("BlockConstantMatrix::from_grid: ragged grid");
    values.insert(values.end(), row.begin(), row.end());
  }
  return BlockConstantMatrix(std::move(row_sizes), std::move(col_sizes), std::move(values));
}

std::size_t BlockConstantMatrix::rows() const {
  return std::accumulate(row_sizes_.begin(), row_sizes_.end(), std::size_t{0});
}

std::size_t BlockConstantMatrix::cols() const {
  return std::accumulate(col_sizes_.begin(), col_sizes_.end(), std::size_t{0});
}

ExactMatrix BlockConstantMatrix::expand() const {
  ExactMatrix out(rows(), cols());
  std::size_t r0 = 0;
  for (std::size_t rb = 0; rb < row_sizes_.size(); ++rb) {
    std::size_t c0 = 0;
    for (std::size_t cb = 0; cb < col_sizes_.size(); ++cb) {
      for (std::size_t r = 0; r < row_sizes_[rb]; ++r) {
        for (std::size_t c = 0; c < col_sizes_[cb]; ++c) out(r0 + r, c0 + c) = value(rb, cb);
      }
      c0 += col_sizes_[cb];
    }
    r0 += row_sizes_[rb];
  }
  return out;
}

BlockConstantMatrix BlockConstantMatrix::transpose() const {
  std::vector<Rational> values(values_.size());
  for (std::size_t rb = 0; rb < row_blocks(); ++rb) {
    for (std::size_t cb = 0; cb < col_blocks(); ++cb) values[cb * row_blocks() + rb] = value(rb, cb);
  }
  return BlockConstantMatrix(col_sizes_, row_sizes_, std::move(values));
}

BlockConstantMatrix BlockConstantMatrix::blocks(std::size_t rb0, std::size_t rb_count, std::size_t cb0,
                                                std::size_t cb_count) const {
  if (rb0 + rb_count > row_blocks() || cb0 + cb_count > col_blocks()) {
    throw std::out_of_range("BlockConstantMatrix::blocks out of range");
  }
  std::vector<std::size_t> rs(row_sizes_.begin() + static_cast<std::ptrdiff_t>(rb0),
                              row_sizes_.begin() + static_cast<std::ptrdiff_t>(rb0 + rb_count));
  std::vector<std::size_t> cs(col_sizes_.begin() + static_cast<std::ptrdiff_t>(cb0),
                              col_sizes_.begin() + static_cast<std::ptrdiff_t>(cb0 + cb_count));
  std::vector<Rational> values;
  for (std::size_t rb = rb0; rb < rb0 + rb_count; ++rb) {
    for (std::size_t cb = cb0; cb < cb0 + cb_count; ++cb) values.push_back(value(rb, cb));
  }
  return BlockConstantMatrix(std::move(rs), std::move(cs), std::move(values));
}

bool BlockConstantMatrix::is_uniform_nonnegative() const {
  const Rational* common = nullptr;
  for (std::size_t rb = 0; rb < row_blocks(); ++rb) {
    if (row_sizes_[rb] == 0) continue;
    for (std::size_t cb = 0; cb < col_blocks(); ++cb) {
      if (col_sizes_[cb] == 0) continue;
      if (common == nullptr) {
        common = &value(rb, cb);
      } else if (value(rb, cb) != *common) {
        return false;
      }
    }
  }
  return common == nullptr || sgn(*common) >= 0;
}

bool BlockConstantMatrix::is_psd_block_diagonal() const {
  if (row_sizes_ != col_sizes_) return false;
  for (std::size_t rb = 0; rb < row_blocks(); ++rb) {
    for (std::size_t cb = 0; cb < col_blocks(); ++cb) {
      if (row_sizes_[rb] == 0 || col_sizes_[cb] == 0) continue;
      if (rb == cb ? sgn(value(rb, cb)) < 0 : sgn(value(rb, cb)) != 0) return false;
    }
  }
  return true;
}

BlockConstantMatrix operator-(const BlockConstantMatrix& a, const BlockConstantMatrix& b) {
  if (a.row_sizes() != b.row_sizes() || a.col_sizes() != b.col_sizes()) {
    throw std::invalid_argument("BlockConstantMatrix subtraction: structure mismatch");
  }
  std::vector<Rational> values;
  for (std::size_t rb = 0; rb < a.row_blocks(); ++rb) {
    for (std::size_t cb = 0; cb < a.col_blocks(); ++cb) values.emplace_back(a.value(rb, cb) - b.value(rb, cb));
  }
  return BlockConstantMatrix(a.row_sizes(), a.col_sizes(), std::move(values));
}

BlockConstantMatrix block_product(const BlockConstantMatrix& a, const BlockConstantMatrix& b) {
  if (a.col_sizes() != b.row_sizes()) throw std::invalid_argument("block_product: block structures do not conform");
  std::vector<Rational> values;
  values.reserve(a.row_blocks() * b.col_blocks());
  for (std::size_t i = 0; i < a.row_blocks(); ++i) {
    for (std::size_t j = 0; j < b.col_blocks(); ++j) {
      Rational sum = 0;
      for (std::size_t k = 0; k < a.col_blocks(); ++k) {
        sum += a.value(i, k) * Rational(static_cast<unsigned long>(a.col_sizes()[k])) * b.value(k, j);
      }
      values.push_back(sum);
    }
  }
  return BlockConstantMatrix(a.row_sizes(), b.col_sizes(), std::move(values));
}

ConstantBlockPinv pinv_constant_block(std::size_t s, const Rational& c) {
  if (s == 0) throw std::invalid_argument("pinv_constant_block: block size must be positive");
  if (sgn(c) == 0) return {BlockConstantMatrix({s}, {s}, {Rational(0)}), true};
  const Rational ss(static_cast<unsigned long>(s));
  return {BlockConstantMatrix({s}, {s}, {Rational(1) / (ss * ss * c)}), false};
}

BlockConstantMatrix pinv_block_diagonal(const BlockConstantMatrix& m) {
  if (m.row_sizes() != m.col_sizes()) throw std::invalid_argument("pinv_block_diagonal: non-square block structure");
  const std::size_t k = m.row_blocks();
  std::vector<Rational> values(k * k);
  for (std::size_t rb = 0; rb < k; ++rb) {
    for (std::size_t cb = 0; cb < k; ++cb) {
      if (rb != cb && sgn(m.value(rb, cb)) != 0 && m.row_sizes()[rb] != 0 && m.col_sizes()[cb] != 0) {
        throw std::invalid_argument("pinv_block_diagonal: nonzero off-diagonal block");
      }
    }
    if (m.row_sizes()[rb] != 0) values[rb * k + rb] = pinv_constant_block(m.row_sizes()[rb], m.value(rb, rb)).matrix.value(0, 0);
  }
  return BlockConstantMatrix(m.row_sizes(), m.col_sizes(), std::move(values));
}

}  // namespace tracecert

#include "tracecert/exact_matrix.hpp"

#include <stdexcept>
#include <string>

#include "tracecert/elimination.hpp"
#include "tracecert/kernels.hpp"

namespace tracecert {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw std::invalid_argument("ExactMatrix: expected " + std::to_string(rows * cols) + " entries, got " +
                                std::to_string(entries_.size()));
  }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::constant(std::size_t rows, std::size_t cols, const Rational& value) {
  return ExactMatrix(rows, cols, std::vector<Rational>(rows * cols, value));
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  ExactMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ExactMatrix::from_rows: ragged input");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

void ExactMatrix::set_labels(std::vector<std::string> row_labels, std::vector<std::string> col_labels) {
  if (!row_labels.empty() && row_labels.size() != rows_) {
    throw std::invalid_argument("ExactMatrix: row label count does not match row count");
  }
  if (!col_labels.empty() && col_labels.size() != cols_) {
    throw std::invalid_argument("ExactMatrix: column label count does not match column count");
  }
  row_labels_ = std::move(row_labels);
  col_labels_ = std::move(col_labels);
}

bool ExactMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if ((*this)(r, c) != (*this)(c, r)) return false;
    }
  }
  return true;
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : entries_) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

bool ExactMatrix::is_integral() const {
  for (const auto& x : entries_) {
    if (x.get_den() != 1) return false;
  }
  return true;
}

bool ExactMatrix::is_constant(const Rational& value) const {
  for (const auto& x : entries_) {
    if (x != value) return false;
  }
  return true;
}

std::optional<std::pair<std::size_t, std::size_t>> ExactMatrix::first_difference(const ExactMatrix& other) const {
  require_same_shape(other, "first_difference");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] != other.entries_[i]) return std::pair{i / cols_, i % cols_};
  }
  return std::nullopt;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  t.row_labels_ = col_labels_;
  t.col_labels_ = row_labels_;
  return t;
}

ExactMatrix ExactMatrix::submatrix(std::size_t row0, std::size_t rows, std::size_t col0, std::size_t cols) const {
  if (row0 + rows > rows_ || col0 + cols > cols_) throw std::out_of_range("ExactMatrix::submatrix out of range");
  ExactMatrix s(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) s(r, c) = (*this)(row0 + r, col0 + c);
  }
  if (!row_labels_.empty()) {
    s.row_labels_.assign(row_labels_.begin() + static_cast<std::ptrdiff_t>(row0),
                         row_labels_.begin() + static_cast<std::ptrdiff_t>(row0 + rows));
  }
  if (!col_labels_.empty()) {
    s.col_labels_.assign(col_labels_.begin() + static_cast<std::ptrdiff_t>(col0),
                         col_labels_.begin() + static_cast<std::ptrdiff_t>(col0 + cols));
  }
  return s;
}

Rational ExactMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of a non-square matrix");
  Rational t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

void ExactMatrix::require_same_shape(const ExactMatrix& other, const char* op) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument(std::string("ExactMatrix::") + op + ": shape mismatch");
  }
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& other) {
  require_same_shape(other, "operator+=");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& other) {
  require_same_shape(other, "operator-=");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const Rational& scalar) {
  for (auto& x : entries_) x *= scalar;
  return *this;
}

ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
ExactMatrix operator*(ExactMatrix a, const Rational& scalar) { return a *= scalar; }
ExactMatrix operator*(const Rational& scalar, ExactMatrix a) { return a *= scalar; }
ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) { return kernels::multiply(a, b); }

std::vector<Rational> multiply(const ExactMatrix& m, std::span<const Rational> v) {
  if (v.size() != m.cols()) throw std::invalid_argument("matrix-vector product: size mismatch");
  std::vector<Rational> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (sgn(v[c]) != 0) acc += m(r, c) * v[c];
    }
    out[r] = acc;
  }
  return out;
}

namespace {

DenseRows<Rational> to_rows(const ExactMatrix& m) {
  DenseRows<Rational> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows[r].assign(m.row(r).begin(), m.row(r).end());
  return rows;
}

}  // namespace

std::size_t rank(const ExactMatrix& m) { return reduced_row_echelon(to_rows(m), m.cols()).pivots.size(); }

Rational determinant(const ExactMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  DenseRows<Rational> a = to_rows(m);
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && sgn(a[pivot][c]) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(a[r][c]) == 0) continue;
      const Rational factor = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= factor * a[c][k];
    }
  }
  return det;
}

ExactMatrix kernel_basis(const ExactMatrix& m) {
  const auto basis = kernel_vectors<Rational>(to_rows(m), m.cols(), Rational(0), Rational(1));
  ExactMatrix k(m.cols(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < m.cols(); ++i) k(i, j) = basis[j][i];
  }
  return k;
}

}  // namespace tracecert

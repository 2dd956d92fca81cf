#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tracecert/exact.hpp"

namespace tracecert {

/// Dense row-major matrix of exact rationals with optional row/column labels.
///
/// Labels are carried as their serialized text ("({1,2,3},1)", "(2,2,3)", ...)
/// and never take part in arithmetic or equality.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix constant(std::size_t rows, std::size_t cols, const Rational& value);
  /// Convenience for tests and literals.
  static ExactMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Rational> entries() const { return entries_; }
  std::span<Rational> entries() { return entries_; }
  std::span<const Rational> row(std::size_t r) const {
    return std::span<const Rational>(entries_).subspan(r * cols_, cols_);
  }

  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }
  bool has_labels() const { return !row_labels_.empty() || !col_labels_.empty(); }
  /// Throws std::invalid_argument unless each non-empty list matches the dimension.
  void set_labels(std::vector<std::string> row_labels, std::vector<std::string> col_labels);

  bool is_symmetric() const;
  bool is_zero() const;
  bool is_integral() const;
  /// True when every entry equals `value`.
  bool is_constant(const Rational& value) const;

  /// Index of the first entry (row-major) that differs from `other`, if any.
  std::optional<std::pair<std::size_t, std::size_t>> first_difference(const ExactMatrix& other) const;

  ExactMatrix transpose() const;
  ExactMatrix submatrix(std::size_t row0, std::size_t rows, std::size_t col0, std::size_t cols) const;
  Rational trace() const;

  ExactMatrix& operator+=(const ExactMatrix& other);
  ExactMatrix& operator-=(const ExactMatrix& other);
  ExactMatrix& operator*=(const Rational& scalar);

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  void require_same_shape(const ExactMatrix& other, const char* op) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
};

ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b);
ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b);
ExactMatrix operator*(ExactMatrix a, const Rational& scalar);
ExactMatrix operator*(const Rational& scalar, ExactMatrix a);
/// Dense product through the parallel kernel (see kernels.hpp).
ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);

std::vector<Rational> multiply(const ExactMatrix& m, std::span<const Rational> v);

/// Exact Gaussian elimination utilities over Q.
std::size_t rank(const ExactMatrix& m);
Rational determinant(const ExactMatrix& m);
/// Columns of the result form a basis of the right kernel (free-variable basis,
/// pivot order). A full-rank input yields a cols x 0 matrix.
ExactMatrix kernel_basis(const ExactMatrix& m);

}  // namespace tracecert

#pragma once

#include <vector>

#include "tracecert/exact_matrix.hpp"
#include "tracecert/poly.hpp"

namespace tracecert {

/// All binary words of length m with exactly r ones, in lexicographic order.
/// A zero stands for the letter A, a one for B.
struct WordSpec {
  int m = 0;
  int r = 0;
  std::vector<std::vector<int>> words;

  /// Throws std::invalid_argument unless 0 <= r <= m.
  static WordSpec make(int m, int r);
};

/// Coefficient of t^r in trace((A + tB)^m) for symbolic symmetric n x n
/// matrices A = (a{i,j}) and B = (b{i,j}), by direct enumeration of words and
/// closed index walks. Work is split over (word, first index) pairs.
Polynomial coefficient_polynomial(int n, int m, int r);

/// Numeric counterpart: evaluates trace((A + tB)^m) at t = 0..m and recovers
/// the coefficient of t^r by exact Lagrange interpolation. Throws
/// std::invalid_argument on asymmetric or mismatched matrices.
Rational numeric_t_coefficient(const ExactMatrix& a, const ExactMatrix& b, int m, int r);

/// Substitution a{i,j} = A(i,j), b{i,j} = B(i,j) for all i <= j.
Assignment assignment_from(const ExactMatrix& a, const ExactMatrix& b);

namespace serial {

/// Reference enumeration with ordered-map accumulation and no packing.
Polynomial coefficient_polynomial(int n, int m, int r);

}  // namespace serial

}  // namespace tracecert

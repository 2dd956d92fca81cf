#pragma once

#include <string>
#include <vector>

#include "tracecert/elimination.hpp"
#include "tracecert/exact.hpp"

namespace tracecert {

/// n = square * squarefree with square = s^2, s > 0. Zero is returned as {0, 0}.
struct SquarefreeSplit {
  Integer root;        // s
  Integer squarefree;  // D, carries the sign of n
};
SquarefreeSplit squarefree_split(const Integer& n);

/// Element rational + radical * sqrt(D) of Q(sqrt(D)).
///
/// D must be squarefree and different from 1 when the radical part is
/// nonzero. D == 0 marks a plain rational whose field has not been fixed yet;
/// it combines with any D. Combining two different nonzero radicands throws
/// std::domain_error.
class QuadExtScalar {
 public:
  QuadExtScalar() = default;
  QuadExtScalar(Rational rational) : rational_(std::move(rational)) {}  // NOLINT(implicit)
  QuadExtScalar(Rational rational, Rational radical, Integer radicand);

  const Rational& rational() const { return rational_; }
  const Rational& radical() const { return radical_; }
  const Integer& radicand() const { return radicand_; }

  QuadExtScalar conjugate() const;
  /// Field norm a^2 - D b^2.
  Rational norm() const;
  bool is_rational() const { return sgn(radical_) == 0; }
  std::string to_string() const;

  friend QuadExtScalar operator+(const QuadExtScalar& x, const QuadExtScalar& y);
  friend QuadExtScalar operator-(const QuadExtScalar& x, const QuadExtScalar& y);
  friend QuadExtScalar operator-(const QuadExtScalar& x);
  friend QuadExtScalar operator*(const QuadExtScalar& x, const QuadExtScalar& y);
  /// Throws std::domain_error on division by zero.
  friend QuadExtScalar operator/(const QuadExtScalar& x, const QuadExtScalar& y);
  friend bool operator==(const QuadExtScalar& x, const QuadExtScalar& y);

 private:
  static Integer common_radicand(const QuadExtScalar& x, const QuadExtScalar& y);

  Rational rational_;
  Rational radical_;
  Integer radicand_ = 0;
};

inline bool is_zero(const QuadExtScalar& x) { return sgn(x.rational()) == 0 && sgn(x.radical()) == 0; }

using QuadMatrix = DenseRows<QuadExtScalar>;

/// Right kernel over Q(sqrt(D)); one basis vector per free column.
std::vector<std::vector<QuadExtScalar>> quad_kernel_basis(const QuadMatrix& m, std::size_t cols,
                                                          const Integer& radicand);

}  // namespace tracecert

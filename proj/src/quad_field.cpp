#include "tracecert/quad_field.hpp"

#include <stdexcept>

namespace tracecert {

SquarefreeSplit squarefree_split(const Integer& n) {
  if (sgn(n) == 0) return {Integer(0), Integer(0)};
  Integer rest = abs(n);
  Integer root = 1;
  Integer squarefree = 1;
  for (Integer p = 2; p * p <= rest; ++p) {
    unsigned e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t()) != 0) {
      rest /= p;
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i) root *= p;
    if (e % 2 == 1) squarefree *= p;
  }
  squarefree *= rest;
  if (sgn(n) < 0) squarefree = -squarefree;
  return {root, squarefree};
}

QuadExtScalar::QuadExtScalar(Rational rational, Rational radical, Integer radicand)
    : rational_(std::move(rational)), radical_(std::move(radical)), radicand_(std::move(radicand)) {
  if (sgn(radical_) != 0 && (radicand_ == 0 || radicand_ == 1)) {
    throw std::invalid_argument("QuadExtScalar: radical part needs a squarefree radicand other than 0 and 1");
  }
}

Integer QuadExtScalar::common_radicand(const QuadExtScalar& x, const QuadExtScalar& y) {
  if (x.radicand_ == 0) return y.radicand_;
  if (y.radicand_ == 0 || x.radicand_ == y.radicand_) return x.radicand_;
  throw std::domain_error("QuadExtScalar: operands lie in different quadratic fields");
}

QuadExtScalar QuadExtScalar::conjugate() const { return {rational_, -radical_, radicand_}; }

Rational QuadExtScalar::norm() const {
  return rational_ * rational_ - Rational(radicand_) * radical_ * radical_;
}

std::string QuadExtScalar::to_string() const {
  if (is_rational()) return tracecert::to_string(rational_);
  std::string out = tracecert::to_string(rational_);
  out += sgn(radical_) < 0 ? " - " : " + ";
  out += tracecert::to_string(Rational(abs(radical_)));
  out += "*sqrt(" + tracecert::to_string(radicand_) + ")";
  return out;
}

QuadExtScalar operator+(const QuadExtScalar& x, const QuadExtScalar& y) {
  const Integer d = QuadExtScalar::common_radicand(x, y);
  return {x.rational_ + y.rational_, x.radical_ + y.radical_, d};
}

QuadExtScalar operator-(const QuadExtScalar& x, const QuadExtScalar& y) {
  const Integer d = QuadExtScalar::common_radicand(x, y);
  return {x.rational_ - y.rational_, x.radical_ - y.radical_, d};
}

QuadExtScalar operator-(const QuadExtScalar& x) { return {-x.rational_, -x.radical_, x.radicand_}; }

QuadExtScalar operator*(const QuadExtScalar& x, const QuadExtScalar& y) {
  const Integer d = QuadExtScalar::common_radicand(x, y);
  return {x.rational_ * y.rational_ + Rational(d) * x.radical_ * y.radical_,
          x.rational_ * y.radical_ + x.radical_ * y.rational_, d};
}

QuadExtScalar operator/(const QuadExtScalar& x, const QuadExtScalar& y) {
  const Integer d = QuadExtScalar::common_radicand(x, y);
  const Rational n = y.norm();
  // D is squarefree and not 1, so the norm vanishes only at zero.
  if (sgn(n) == 0) throw std::domain_error("QuadExtScalar: division by zero");
  const QuadExtScalar num = x * y.conjugate();
  return {num.rational_ / n, num.radical_ / n, d};
}

bool operator==(const QuadExtScalar& x, const QuadExtScalar& y) {
  if (x.rational_ != y.rational_ || x.radical_ != y.radical_) return false;
  return sgn(x.radical_) == 0 || x.radicand_ == y.radicand_;
}

std::vector<std::vector<QuadExtScalar>> quad_kernel_basis(const QuadMatrix& m, std::size_t cols,
                                                          const Integer& radicand) {
  const QuadExtScalar zero(Rational(0), Rational(0), radicand);
  const QuadExtScalar one(Rational(1), Rational(0), radicand);
  return kernel_vectors(m, cols, zero, one);
}

}  // namespace tracecert

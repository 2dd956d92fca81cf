#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tracecert/exact_matrix.hpp"

namespace tracecert {

/// Univariate polynomial with exact coefficients, stored ascending by degree
/// (coeffs[k] multiplies x^k) and trimmed of trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> ascending);
  static UPoly monomial(const Rational& c, std::size_t degree);
  /// From degree-descending coefficients.
  static UPoly from_descending(const std::vector<Rational>& descending);

  const std::vector<Rational>& ascending() const { return coeffs_; }
  std::vector<Rational> descending() const;
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  Rational evaluate(const Rational& x) const;
  std::string to_string() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly&, const UPoly&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

UPoly pow(const UPoly& p, unsigned k);

/// Monic characteristic polynomial det(xI - M).
struct CharPoly {
  std::vector<Rational> coeffs;  // degree-descending; coeffs.front() == 1
  std::size_t degree() const { return coeffs.size() - 1; }
  UPoly as_upoly() const { return UPoly::from_descending(coeffs); }
  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

/// Exact characteristic polynomial via similarity reduction to upper
/// Hessenberg form over Q followed by the Hessenberg determinant recurrence.
/// Throws std::invalid_argument for non-square input.
CharPoly char_poly(const ExactMatrix& m);

struct PsdDecision {
  bool psd = false;
  /// One character per coefficient of det(xI - M), degree-descending:
  /// '+', '-' or '0'.
  std::string sign_pattern;
  /// Index into sign_pattern of the first coefficient breaking weak alternation.
  std::optional<std::size_t> violation;
};

/// Decides positive semidefiniteness of a symmetric rational matrix. The char
/// poly of a symmetric matrix is real-rooted, so every root is >= 0 exactly when
/// the coefficients weakly alternate in sign (zeros are compatible with either
/// sign). Throws std::invalid_argument for asymmetric input.
PsdDecision is_psd_exact(const ExactMatrix& m);

/// Weak sign alternation test on degree-descending coefficients; returns the
/// first offending index, if any.
std::optional<std::size_t> first_alternation_violation(const std::vector<Rational>& descending);
std::string sign_pattern(const std::vector<Rational>& descending);

}  // namespace tracecert

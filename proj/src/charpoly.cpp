#include "tracecert/charpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace tracecert {

UPoly::UPoly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

UPoly UPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> coeffs(degree + 1);
  coeffs[degree] = c;
  return UPoly(std::move(coeffs));
}

UPoly UPoly::from_descending(const std::vector<Rational>& descending) {
  return UPoly(std::vector<Rational>(descending.rbegin(), descending.rend()));
}

std::vector<Rational> UPoly::descending() const { return {coeffs_.rbegin(), coeffs_.rend()}; }

void UPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational UPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string UPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational magnitude = abs(c);
    if (magnitude != 1 || k == 0) out += tracecert::to_string(magnitude);
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) + b.coefficient(i);
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) - b.coefficient(i);
  return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return UPoly();
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UPoly(std::move(c));
}

UPoly pow(const UPoly& p, unsigned k) {
  UPoly result({Rational(1)});
  for (unsigned i = 0; i < k; ++i) result = result * p;
  return result;
}

CharPoly char_poly(const ExactMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("char_poly: matrix is not square");
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> h(n, std::vector<Rational>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) h[r][c] = m(r, c);
  }

  // Similarity transforms to upper Hessenberg form: eliminate below the
  // subdiagonal in column m-1 using row m as pivot, applying the inverse
  // transform on the columns.
  for (std::size_t col = 0; col + 2 < n; ++col) {
    const std::size_t piv_row = col + 1;
    std::size_t i = piv_row;
    while (i < n && sgn(h[i][col]) == 0) ++i;
    if (i == n) continue;
    if (i != piv_row) {
      std::swap(h[i], h[piv_row]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][i], h[r][piv_row]);
    }
    const Rational pivot = h[piv_row][col];
    for (std::size_t j = piv_row + 1; j < n; ++j) {
      if (sgn(h[j][col]) == 0) continue;
      const Rational u = h[j][col] / pivot;
      for (std::size_t k = 0; k < n; ++k) {
        if (sgn(h[piv_row][k]) != 0) h[j][k] -= u * h[piv_row][k];
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (sgn(h[r][j]) != 0) h[r][piv_row] += u * h[r][j];
      }
    }
  }

  // Determinant recurrence for Hessenberg matrices (1-based in the comments):
  // p_k = (x - h_kk) p_{k-1} - sum_{i=1}^{k-1} h_{k-i,k} (prod_{j=k-i+1}^{k} h_{j,j-1}) p_{k-i-1}.
  std::vector<UPoly> p;
  p.reserve(n + 1);
  p.emplace_back(std::vector<Rational>{Rational(1)});
  const UPoly x = UPoly::monomial(Rational(1), 1);
  for (std::size_t k = 1; k <= n; ++k) {
    UPoly pk = (x - UPoly({h[k - 1][k - 1]})) * p[k - 1];
    Rational t = 1;
    for (std::size_t i = 1; i < k; ++i) {
      t *= h[k - i][k - i - 1];
      if (sgn(t) == 0) break;
      const Rational coeff = h[k - i - 1][k - 1] * t;
      if (sgn(coeff) != 0) pk = pk - UPoly({coeff}) * p[k - i - 1];
    }
    p.push_back(std::move(pk));
  }
  CharPoly out;
  out.coeffs = p[n].descending();
  out.coeffs.resize(n + 1);  // trailing zero coefficients were trimmed from the ascending form
  return out;
}

std::string sign_pattern(const std::vector<Rational>& descending) {
  std::string out;
  out.reserve(descending.size());
  for (const auto& c : descending) out += sgn(c) > 0 ? '+' : (sgn(c) < 0 ? '-' : '0');
  return out;
}

std::optional<std::size_t> first_alternation_violation(const std::vector<Rational>& descending) {
  for (std::size_t k = 0; k < descending.size(); ++k) {
    const int s = sgn(descending[k]);
    const int expected = (k % 2 == 0) ? 1 : -1;
    if (s != 0 && s != expected) return k;
  }
  return std::nullopt;
}

PsdDecision is_psd_exact(const ExactMatrix& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("is_psd_exact: matrix is not symmetric");
  const CharPoly chi = char_poly(m);
  PsdDecision decision;
  decision.sign_pattern = sign_pattern(chi.coeffs);
  decision.violation = first_alternation_violation(chi.coeffs);
  decision.psd = !decision.violation.has_value();
  return decision;
}

}  // namespace tracecert

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tracecert/certificate.hpp"
#include "tracecert/charpoly.hpp"
#include "tracecert/exact_matrix.hpp"
#include "tracecert/poly.hpp"
#include "tracecert/quad_field.hpp"
#include "tracecert/report.hpp"

namespace tracecert {

// ---------------------------------------------------------------------------
// Certificate expansion and the sum-of-squares identity

/// y^T U y + sum_{i<j} z_(i,j)^T R z_(i,j), fully collected. The C(n,2)
/// copies of R are expanded in parallel.
Polynomial expand_certificate(int n);

namespace serial {
Polynomial expand_certificate(int n);
}

/// Compares expand_certificate(n) with the coefficient of t^2 in trace((A+tB)^6).
ProofReport verify_identity(int n);

/// Where a matrix entry comes from: U (copy_i == 0) or the (copy_i, copy_j)
/// copy of R. Rows and columns index into y or z.
struct Contribution {
  int copy_i = 0;
  int copy_j = 0;
  std::size_t row = 0;
  std::size_t col = 0;
  long value = 0;
};

struct AccountingEntry {
  Monomial monomial;
  std::vector<Contribution> contributions;
  Integer total;
};

struct AccountingReport {
  int n = 0;
  std::vector<AccountingEntry> entries;  // sorted by monomial
  std::vector<std::string> y_labels;
  std::vector<std::string> z_labels;     // labels of z_(i,j) are the same tags for every copy
  std::size_t positions_expected = 0;
  std::size_t positions_seen = 0;
  bool positions_unique = false;
  Integer grand_total;

  const AccountingEntry* find(const Monomial& m) const;
  std::string source(const Contribution& c) const;
};

/// Per-monomial ledger of every matrix position of U and of each copy of R.
AccountingReport accounting_report(int n);
/// Checks the ledger against p: coverage of every position exactly once and
/// per-monomial totals equal to p's coefficients.
ProofReport verify_accounting(const AccountingReport& report, const Polynomial& p);

/// Seeded random integer symmetric pairs (A, B): numeric interpolation,
/// evaluation of p and evaluation of the expanded certificate must agree and
/// be nonnegative.
ProofReport verify_random(int n, int samples, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Positive semidefiniteness of R

/// n >= 4: replays the generalized Schur complement argument with E the
/// blocks-5-and-6 corner. n < 4: direct char-poly sign test on R.
ProofReport verify_R_psd(int n);

// ---------------------------------------------------------------------------
// Minimal polynomial of U

struct MuCoefficients {
  Integer b, c, d, f, g, h;
  /// Degree-descending coefficients of mu(x) = x^4 + f x^3 + g x^2 + h x.
  std::vector<Rational> mu() const;
};

/// Throws std::logic_error if the closed forms for c, f, g, h disagree with
/// the defining relations.
MuCoefficients mu_coefficients(int n);

/// U^4 + fU^3 + gU^2 + hU = 0, the Descartes sign condition on mu, and for
/// n <= 3 a direct PSD test of U.
ProofReport verify_min_poly(int n);
/// PSD decision for U (min-poly argument; direct test for small n).
ProofReport verify_U_psd(int n);

// ---------------------------------------------------------------------------
// Entry-type formulas for U, U^2, U^3, U^4

struct PowerPattern {
  const char* row;
  const char* col;
  /// Ascending coefficients in n, one polynomial per power 1..4.
  std::array<std::array<long, 7>, 4> coeffs;
};

/// The transcribed index-type table (57 patterns).
const std::vector<PowerPattern>& power_table();
Integer evaluate_pattern(const PowerPattern& pattern, int power, int n);

/// Orbit representative of an ordered pair of y-indices under S_n.
std::pair<YIndex, YIndex> canonical_pair(const YIndex& row, const YIndex& col);
/// Reference version over all n! permutations.
std::pair<YIndex, YIndex> canonical_pair_brute_force(const YIndex& row, const YIndex& col, int n);

/// `powers[k]` must hold U^(k+1) for k = 0..3 (pass build_U and its powers).
ProofReport verify_power_entry_formulas(int n, int power, const std::vector<ExactMatrix>& powers);
ProofReport verify_power_entry_formulas(int n, int power);

// ---------------------------------------------------------------------------
// Spectral structure

std::size_t nullity_w(int n);

struct NullVector {
  int family = 0;  // 1..7
  std::string description;
  std::vector<Rational> entries;
};

/// The seven explicit families of kernel vectors of U.
std::vector<NullVector> null_family(int n);
/// Ones on y-blocks 1 and 2, one half on block 3.
std::vector<Rational> d_eigenvector(int n);

/// Kernel family checks plus the char-poly conjecture check. The conjecture
/// outcome is reported under witness["conjecture"] and does not affect the
/// verified flag. The char-poly comparison can be skipped for large n.
ProofReport verify_spectrum(int n, bool check_char_poly = true);

struct QuadEigenvectors {
  QuadExtScalar lambda;
  std::vector<std::vector<QuadExtScalar>> vectors;  // each satisfies U x = lambda x
};

struct QuadSpectrum {
  Integer discriminant;  // b^2 - 4c
  Integer root;          // s with discriminant = s^2 * radicand
  Integer radicand;      // squarefree part (1 when the discriminant is a square)
  ExactMatrix v;         // basis of the orthogonal complement of the 0 and d eigenvectors
  std::vector<QuadEigenvectors> roots;
};

/// Exact eigenvectors for both roots of q(x) = x^2 + bx + c. Throws
/// std::runtime_error if V does not have 2(n-1) columns.
QuadSpectrum extract_quadratic_eigenvectors(int n);
ProofReport verify_quadratic_eigenvectors(int n);

/// Series coefficients of (1+x+4x^2+x^3+x^4) / ((1-x)^5 (1+x)^4) up to x^order.
std::vector<Rational> gamma_series(std::size_t order);
ProofReport verify_c_generating_function(int n_max);

}  // namespace tracecert

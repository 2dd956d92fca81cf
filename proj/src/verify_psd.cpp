#include <stdexcept>

#include "tracecert/block_matrix.hpp"
#include "tracecert/kernels.hpp"
#include "tracecert/verifier.hpp"

namespace tracecert {

namespace {

nlohmann::json entry_witness(const ExactMatrix& m, std::size_t r, std::size_t c) {
  nlohmann::json w = {{"row", r}, {"col", c}, {"value", to_string(m(r, c))}};
  if (!m.row_labels().empty()) w["row_label"] = m.row_labels()[r];
  if (!m.col_labels().empty()) w["col_label"] = m.col_labels()[c];
  return w;
}

nlohmann::json block_values(const BlockConstantMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t rb = 0; rb < m.row_blocks(); ++rb) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t cb = 0; cb < m.col_blocks(); ++cb) row.push_back(to_string(m.value(rb, cb)));
    rows.push_back(row);
  }
  return rows;
}

ProofReport direct_psd(const std::string& claim, int n, const ExactMatrix& m) {
  const PsdDecision d = is_psd_exact(m);
  nlohmann::json w = {{"n", n}, {"method", "char-poly sign alternation"}, {"sign_pattern", d.sign_pattern}};
  if (d.psd) return ProofReport::pass(claim, w);
  w["violation_index"] = *d.violation;
  return ProofReport::fail(claim, w);
}

std::optional<std::pair<std::size_t, std::size_t>> first_nonzero(const ExactMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (sgn(m(r, c)) != 0) return std::make_pair(r, c);
    }
  }
  return std::nullopt;
}

}  // namespace

ProofReport verify_R_psd(int n) {
  const std::string claim = "psd-r";
  if (n < 1) throw std::invalid_argument("verify_R_psd: n must be positive");
  if (n < 4) return direct_psd(claim, n, build_R(n));

  // R = [[F, G^T], [G, E]] with E the rows and columns of blocks 5 and 6.
  const BlockConstantMatrix r = build_R_blocks(n);
  const BlockConstantMatrix f = r.blocks(0, 4, 0, 4);
  const BlockConstantMatrix g = r.blocks(4, 2, 0, 4);
  const BlockConstantMatrix e = r.blocks(4, 2, 4, 2);
  nlohmann::json w = {{"n", n}, {"method", "generalized Schur complement"}};

  if (!e.is_psd_block_diagonal()) {
    w["step"] = "E positive semidefinite";
    w["E"] = block_values(e);
    return ProofReport::fail(claim, w);
  }

  const BlockConstantMatrix e_pinv = pinv_block_diagonal(e);
  const ExactMatrix e_dense = e.expand();
  const ExactMatrix e_pinv_dense = e_pinv.expand();
  // Penrose conditions, densely.
  const ExactMatrix ee = e_dense * e_pinv_dense;
  const ExactMatrix pe = e_pinv_dense * e_dense;
  if (ee * e_dense != e_dense || pe * e_pinv_dense != e_pinv_dense || !ee.is_symmetric() || !pe.is_symmetric()) {
    w["step"] = "pseudo-inverse of E";
    return ProofReport::fail(claim, w);
  }

  // (I - E E^+) G = 0
  const ExactMatrix h = ExactMatrix::identity(e_dense.rows()) - ee;
  const ExactMatrix hg = h * g.expand();
  if (const auto bad = first_nonzero(hg)) {
    w["step"] = "(I - E E^+) G = 0";
    w["entry"] = entry_witness(hg, bad->first, bad->second);
    return ProofReport::fail(claim, w);
  }

  // F - G^T E^+ G, by block algebra and densely.
  const BlockConstantMatrix gt_epinv_g = block_product(g.transpose(), block_product(e_pinv, g));
  const BlockConstantMatrix schur = f - gt_epinv_g;
  const ExactMatrix schur_dense = f.expand() - g.expand().transpose() * e_pinv_dense * g.expand();
  const auto nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  const ExactMatrix threes = ExactMatrix::constant(nn, nn, Rational(3));
  if (schur.expand() != schur_dense || schur_dense != threes) {
    w["step"] = "F - G^T E^+ G is the all-3 matrix";
    w["schur_blocks"] = block_values(schur);
    if (const auto bad = schur_dense.first_difference(threes)) w["entry"] = entry_witness(schur_dense, bad->first, bad->second);
    return ProofReport::fail(claim, w);
  }
  if (!schur.is_uniform_nonnegative()) {
    w["step"] = "Schur complement is a Gram matrix";
    return ProofReport::fail(claim, w);
  }

  w["E_pinv_diagonal"] = to_string(e_pinv.value(0, 0));
  w["GtEpG"] = block_values(gt_epinv_g);
  w["schur_size"] = nn;
  w["schur_value"] = "3";
  return ProofReport::pass(claim, w);
}

std::vector<Rational> MuCoefficients::mu() const {
  return {Rational(1), Rational(f), Rational(g), Rational(h), Rational(0)};
}

MuCoefficients mu_coefficients(int n) {
  if (n < 1) throw std::invalid_argument("mu_coefficients: n must be positive");
  const Integer N = n;
  MuCoefficients m;
  m.b = -3 * N * (4 * N - 3);
  m.c = 18 * N * N * N * N - 27 * N * N * N + 9 * N * N;
  m.d = 15 * N * (2 * N - 1);
  m.f = m.b - m.d;
  m.g = m.c - m.b * m.d;
  m.h = -m.c * m.d;
  const Integer c_binomial = 54 * (2 * binomial(n + 2, 4) + 5 * binomial(n + 1, 4) + binomial(n, 4));
  const Integer f_closed = -42 * N * N + 24 * N;
  const Integer g_closed = 378 * N * N * N * N - 477 * N * N * N + 144 * N * N;
  const Integer n3 = N * N * N;
  const Integer h_closed = -540 * n3 * n3 + 1080 * n3 * N * N - 675 * n3 * N + 135 * n3;
  if (m.c != c_binomial || m.f != f_closed || m.g != g_closed || m.h != h_closed) {
    throw std::logic_error("mu_coefficients: closed forms disagree at n = " + std::to_string(n));
  }
  return m;
}

ProofReport verify_min_poly(int n) {
  const std::string claim = "min-poly";
  const MuCoefficients mu = mu_coefficients(n);
  const ExactMatrix u = build_U(n);
  const ExactMatrix u2 = u * u;
  const ExactMatrix u3 = u2 * u;
  const ExactMatrix u4 = u3 * u;
  const ExactMatrix value = u4 + Rational(mu.f) * u3 + Rational(mu.g) * u2 + Rational(mu.h) * u;

  const std::vector<Rational> coeffs = mu.mu();
  nlohmann::json w = {{"n", n},
                      {"mu", UPoly::from_descending(coeffs).to_string()},
                      {"f", to_string(mu.f)},
                      {"g", to_string(mu.g)},
                      {"h", to_string(mu.h)},
                      {"sign_pattern", sign_pattern(coeffs)}};
  if (const auto bad = first_nonzero(value)) {
    ExactMatrix labeled = value;
    labeled.set_labels(u.row_labels(), u.col_labels());
    w["entry"] = entry_witness(labeled, bad->first, bad->second);
    return ProofReport::fail(claim, w);
  }
  // Weak alternation means mu(-x) has no sign changes, so by Descartes mu has
  // no negative root.
  if (const auto bad = first_alternation_violation(coeffs)) {
    w["descartes_violation_index"] = *bad;
    return ProofReport::fail(claim, w);
  }
  return ProofReport::pass(claim, w);
}

ProofReport verify_U_psd(int n) {
  const std::string claim = "psd-u";
  if (n <= 3) {
    ProofReport direct = direct_psd(claim, n, build_U(n));
    if (!direct.verified) return direct;
  }
  ProofReport annihilator = verify_min_poly(n);
  annihilator.claim = claim;
  if (annihilator.verified) annihilator.witness["method"] = n <= 3 ? "direct char-poly test and annihilating polynomial" : "annihilating polynomial";
  return annihilator;
}

}  // namespace tracecert

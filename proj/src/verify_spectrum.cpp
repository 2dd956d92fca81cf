#include <map>
#include <stdexcept>

#include "tracecert/elimination.hpp"
#include "tracecert/kernels.hpp"
#include "tracecert/verifier.hpp"

namespace tracecert {

namespace {

class Basis {
 public:
  explicit Basis(int n) {
    const auto labels = y_indices(n);
    for (std::size_t k = 0; k < labels.size(); ++k) position_[labels[k]] = k;
    size_ = labels.size();
  }

  std::size_t size() const { return size_; }
  std::vector<Rational> zero() const { return std::vector<Rational>(size_); }
  void add(std::vector<Rational>& v, const YIndex& y, long coeff) const { v[position_.at(y)] += coeff; }

 private:
  std::size_t size_ = 0;
  std::map<YIndex, std::size_t> position_;
};

YIndex hat(int i, int j) { return YIndex::hat(i, j); }

bool is_zero_vector(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

std::string pretty(const std::vector<std::pair<long, YIndex>>& terms) {
  std::string out;
  for (const auto& [c, y] : terms) {
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    if (std::abs(c) != 1) out += std::to_string(std::abs(c));
    out += "e" + y.to_string();
  }
  return out;
}

NullVector make_vector(const Basis& basis, int family, const std::vector<std::pair<long, YIndex>>& terms) {
  NullVector v{family, pretty(terms), basis.zero()};
  for (const auto& [c, y] : terms) basis.add(v.entries, y, c);
  return v;
}

// The third family exactly as printed; used only to report that it is not in the kernel.
std::vector<NullVector> printed_family_three(int n, const Basis& basis) {
  std::vector<NullVector> out;
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      if (i == j) continue;
      out.push_back(make_vector(basis, 3,
                                {{1, YIndex::triple(i, j, n, i)}, {-1, hat(i, n)}, {-1, hat(j, n)}, {-2, hat(n, j)}, {1, hat(n, n)}}));
    }
  }
  return out;
}

std::vector<QuadExtScalar> quad_multiply(const ExactMatrix& m, const std::vector<QuadExtScalar>& x) {
  std::vector<QuadExtScalar> out;
  out.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    QuadExtScalar acc = x.empty() ? QuadExtScalar() : QuadExtScalar(Rational(0), Rational(0), x.front().radicand());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (sgn(m(r, c)) != 0) acc = acc + QuadExtScalar(m(r, c)) * x[c];
    }
    out.push_back(acc);
  }
  return out;
}

}  // namespace

std::size_t nullity_w(int n) {
  const long nn = n;
  return 3 * binomial(n, 3).get_ui() + static_cast<std::size_t>(2 * nn * nn - 3 * nn + 1);
}

std::vector<NullVector> null_family(int n) {
  const Basis basis(n);
  std::vector<NullVector> out;
  // 1: e({i,j,k},l) - e(x^,n^) - e(y^,n^) - 2e(n^,l^) + 2e(n^,n^), T inside [n-1], {x,y} = T \ {l}
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        for (int l : {i, j, k}) {
          int rest[2];
          int cnt = 0;
          for (int x : {i, j, k}) {
            if (x != l) rest[cnt++] = x;
          }
          out.push_back(make_vector(basis, 1,
                                    {{1, YIndex::triple(i, j, k, l)},
                                     {-1, hat(rest[0], n)},
                                     {-1, hat(rest[1], n)},
                                     {-2, hat(n, l)},
                                     {2, hat(n, n)}}));
        }
      }
    }
  }
  // 2: e(i,j) - e(i^,n^) - e(j^,n^) - 2e(n^,i^) + 2e(n^,n^)
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      if (i == j) continue;
      out.push_back(make_vector(basis, 2,
                                {{1, YIndex::pair(i, j)}, {-1, hat(i, n)}, {-1, hat(j, n)}, {-2, hat(n, i)}, {2, hat(n, n)}}));
    }
  }
  // 3: e({i,j,n},i) - e(j^,n^) - 2e(n^,i^) + e(n^,n^)
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      if (i == j) continue;
      out.push_back(make_vector(basis, 3, {{1, YIndex::triple(i, j, n, i)}, {-1, hat(j, n)}, {-2, hat(n, i)}, {1, hat(n, n)}}));
    }
  }
  // 4: e(i,n) - e(i^,n^) - 2e(n^,i^) + e(n^,n^)
  for (int i = 1; i < n; ++i) {
    out.push_back(make_vector(basis, 4, {{1, YIndex::pair(i, n)}, {-1, hat(i, n)}, {-2, hat(n, i)}, {1, hat(n, n)}}));
  }
  // 5: e({i,j,n},n) - e(i^,n^) - e(j^,n^)
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      out.push_back(make_vector(basis, 5, {{1, YIndex::triple(i, j, n, n)}, {-1, hat(i, n)}, {-1, hat(j, n)}}));
    }
  }
  // 6: e(n,i) - e(i^,n^) - e(n^,n^)
  for (int i = 1; i < n; ++i) {
    out.push_back(make_vector(basis, 6, {{1, YIndex::pair(n, i)}, {-1, hat(i, n)}, {-1, hat(n, n)}}));
  }
  // 7: e(i^,j^) - e(i^,n^) - e(n^,j^) + e(n^,n^), i, j <= n-1
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      out.push_back(make_vector(basis, 7, {{1, hat(i, j)}, {-1, hat(i, n)}, {-1, hat(n, j)}, {1, hat(n, n)}}));
    }
  }
  return out;
}

std::vector<Rational> d_eigenvector(int n) {
  std::vector<Rational> v;
  for (const auto& y : y_indices(n)) v.push_back(y.block == 3 ? Rational(1, 2) : Rational(1));
  return v;
}

ProofReport verify_spectrum(int n, bool check_char_poly) {
  const std::string claim = "spectrum";
  if (n < 2) throw std::invalid_argument("verify_spectrum: n must be at least 2");
  const ExactMatrix u = build_U(n);
  const MuCoefficients mu = mu_coefficients(n);
  const std::size_t w_expected = nullity_w(n);
  nlohmann::json w = {{"n", n}, {"w", w_expected}, {"d", to_string(mu.d)}};

  const std::vector<NullVector> family = null_family(n);
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& v : family) {
    counts[std::to_string(v.family)] = counts.value(std::to_string(v.family), 0) + 1;
    if (!is_zero_vector(multiply(u, v.entries))) {
      w["failing_vector"] = {{"family", v.family}, {"vector", v.description}};
      return ProofReport::fail(claim, w);
    }
  }
  w["family_counts"] = counts;
  ExactMatrix stacked(family.size(), u.cols());
  for (std::size_t r = 0; r < family.size(); ++r) {
    for (std::size_t c = 0; c < u.cols(); ++c) stacked(r, c) = family[r].entries[c];
  }
  const std::size_t independent = rank(stacked);
  w["null_vectors"] = family.size();
  w["null_rank"] = independent;
  if (family.size() != w_expected || independent != w_expected) {
    w["reason"] = "null family is not an independent set of size w";
    return ProofReport::fail(claim, w);
  }
  // Independent kernel vectors only bound the nullity from below; pin it down.
  const std::size_t nullity = u.cols() - rank(u);
  w["nullity"] = nullity;
  if (nullity != w_expected) {
    w["reason"] = "nullity of U differs from w";
    return ProofReport::fail(claim, w);
  }

  const std::vector<Rational> dv = d_eigenvector(n);
  const std::vector<Rational> udv = multiply(u, dv);
  for (std::size_t k = 0; k < dv.size(); ++k) {
    if (udv[k] != Rational(mu.d) * dv[k]) {
      w["reason"] = "U v != d v";
      w["entry"] = {{"row", u.row_labels()[k]}, {"Uv", to_string(udv[k])}, {"dv", to_string(Rational(mu.d) * dv[k])}};
      return ProofReport::fail(claim, w);
    }
  }

  const Basis basis(n);
  bool printed_ok = true;
  for (const auto& v : printed_family_three(n, basis)) printed_ok = printed_ok && is_zero_vector(multiply(u, v.entries));
  w["printed_third_family_in_kernel"] = printed_ok;

  if (check_char_poly) {
    const CharPoly chi = char_poly(u);
    const UPoly x = UPoly::monomial(Rational(1), 1);
    const UPoly q({Rational(mu.c), Rational(mu.b), Rational(1)});
    const UPoly expected = pow(x, static_cast<unsigned>(w_expected)) * (x - UPoly({Rational(mu.d)})) *
                           pow(q, static_cast<unsigned>(n - 1));
    const bool confirmed = chi.as_upoly() == expected;
    w["conjecture"] = confirmed ? "confirmed" : "conjecture-unconfirmed";
    w["char_poly_factored"] = "x^" + std::to_string(w_expected) + " (x - " + to_string(mu.d) + ") (" + q.to_string() +
                              ")^" + std::to_string(n - 1);
    if (confirmed) {
      // U is symmetric, hence diagonalizable: the minimal polynomial is the
      // product of the distinct linear factors. 0, d and the roots of q are
      // pairwise distinct when c != 0 and q(d) != 0.
      const bool distinct = sgn(mu.c) != 0 && sgn(q.evaluate(Rational(mu.d))) != 0;
      w["minimal_polynomial"] = distinct ? UPoly::from_descending(mu.mu()).to_string() : "not determined";
    }
  } else {
    w["conjecture"] = "skipped";
  }
  return ProofReport::pass(claim, w);
}

QuadSpectrum extract_quadratic_eigenvectors(int n) {
  if (n < 2) throw std::invalid_argument("extract_quadratic_eigenvectors: n must be at least 2");
  const ExactMatrix u = build_U(n);
  const MuCoefficients mu = mu_coefficients(n);

  DenseRows<Rational> rows;
  for (auto& v : null_family(n)) rows.push_back(std::move(v.entries));
  rows.push_back(d_eigenvector(n));
  const auto kernel = kernel_vectors(std::move(rows), u.cols(), Rational(0), Rational(1));
  const auto expected_cols = static_cast<std::size_t>(2 * (n - 1));
  if (kernel.size() != expected_cols) {
    throw std::runtime_error("extract_quadratic_eigenvectors: complement has dimension " + std::to_string(kernel.size()) +
                             ", expected " + std::to_string(expected_cols));
  }
  QuadSpectrum out;
  out.v = ExactMatrix(u.rows(), kernel.size());
  for (std::size_t c = 0; c < kernel.size(); ++c) {
    for (std::size_t r = 0; r < u.rows(); ++r) out.v(r, c) = kernel[c][r];
  }
  out.v.set_labels(u.row_labels(), {});

  out.discriminant = mu.b * mu.b - 4 * mu.c;
  const SquarefreeSplit split = squarefree_split(out.discriminant);
  out.root = split.root;
  out.radicand = split.squarefree;
  const bool rational = out.radicand == 1;
  const ExactMatrix uv = u * out.v;
  const Rational half_b = Rational(mu.b) / 2;
  const Rational half_s = Rational(out.root) / 2;

  for (int sign : {1, -1}) {
    QuadEigenvectors root;
    const Rational offset = sign * half_s;
    root.lambda = rational ? QuadExtScalar(Rational(offset - half_b)) : QuadExtScalar(-half_b, offset, out.radicand);
    const Integer radicand = rational ? Integer(0) : out.radicand;
    QuadMatrix wm(uv.rows(), std::vector<QuadExtScalar>(uv.cols()));
    for (std::size_t r = 0; r < uv.rows(); ++r) {
      for (std::size_t c = 0; c < uv.cols(); ++c) {
        wm[r][c] = QuadExtScalar(uv(r, c)) - root.lambda * QuadExtScalar(out.v(r, c));
      }
    }
    for (const auto& alpha : quad_kernel_basis(wm, uv.cols(), radicand)) {
      std::vector<QuadExtScalar> x(out.v.rows(), QuadExtScalar(Rational(0), Rational(0), radicand));
      for (std::size_t r = 0; r < out.v.rows(); ++r) {
        for (std::size_t c = 0; c < out.v.cols(); ++c) {
          if (sgn(out.v(r, c)) != 0) x[r] = x[r] + QuadExtScalar(out.v(r, c)) * alpha[c];
        }
      }
      root.vectors.push_back(std::move(x));
    }
    out.roots.push_back(std::move(root));
  }
  return out;
}

ProofReport verify_quadratic_eigenvectors(int n) {
  const std::string claim = "eigenvectors";
  const QuadSpectrum spec = extract_quadratic_eigenvectors(n);
  const ExactMatrix u = build_U(n);
  nlohmann::json w = {{"n", n},
                      {"discriminant", to_string(spec.discriminant)},
                      {"radicand", to_string(spec.radicand)},
                      {"v_columns", spec.v.cols()}};
  std::vector<std::vector<Rational>> others;
  for (auto& v : null_family(n)) others.push_back(std::move(v.entries));
  others.push_back(d_eigenvector(n));

  nlohmann::json roots = nlohmann::json::array();
  for (const auto& root : spec.roots) {
    nlohmann::json rj = {{"lambda", root.lambda.to_string()}, {"dimension", root.vectors.size()}};
    if (root.vectors.size() != static_cast<std::size_t>(n - 1)) {
      w["reason"] = "eigenspace dimension differs from n - 1";
      w["root"] = rj;
      return ProofReport::fail(claim, w);
    }
    for (std::size_t k = 0; k < root.vectors.size(); ++k) {
      const auto& x = root.vectors[k];
      if (std::all_of(x.begin(), x.end(), [](const QuadExtScalar& e) { return is_zero(e); })) {
        w["reason"] = "zero eigenvector";
        w["root"] = rj;
        return ProofReport::fail(claim, w);
      }
      const auto ux = quad_multiply(u, x);
      for (std::size_t r = 0; r < x.size(); ++r) {
        if (!(ux[r] == root.lambda * x[r])) {
          w["reason"] = "U x != lambda x";
          w["root"] = rj;
          w["entry"] = {{"vector", k}, {"row", u.row_labels()[r]}, {"Ux", ux[r].to_string()}};
          return ProofReport::fail(claim, w);
        }
      }
      for (const auto& o : others) {
        QuadExtScalar dot(Rational(0), Rational(0), x.front().radicand());
        for (std::size_t r = 0; r < x.size(); ++r) {
          if (sgn(o[r]) != 0) dot = dot + QuadExtScalar(o[r]) * x[r];
        }
        if (!is_zero(dot)) {
          w["reason"] = "eigenvector not orthogonal to the 0 and d eigenvectors";
          w["root"] = rj;
          return ProofReport::fail(claim, w);
        }
      }
    }
    roots.push_back(rj);
  }
  w["roots"] = roots;
  return ProofReport::pass(claim, w);
}

std::vector<Rational> gamma_series(std::size_t order) {
  const UPoly numerator({Rational(1), Rational(1), Rational(4), Rational(1), Rational(1)});
  const UPoly denominator = pow(UPoly({Rational(1), Rational(-1)}), 5) * pow(UPoly({Rational(1), Rational(1)}), 4);
  const Rational d0 = denominator.coefficient(0);
  std::vector<Rational> s(order + 1);
  for (std::size_t k = 0; k <= order; ++k) {
    Rational acc = numerator.coefficient(k);
    for (std::size_t i = 1; i <= k; ++i) acc -= denominator.coefficient(i) * s[k - i];
    s[k] = acc / d0;
  }
  return s;
}

ProofReport verify_c_generating_function(int n_max) {
  const std::string claim = "series";
  if (n_max < 4) throw std::invalid_argument("verify_c_generating_function: n_max must be at least 4");
  const std::vector<Rational> s = gamma_series(static_cast<std::size_t>(2 * n_max - 3));
  nlohmann::json values = nlohmann::json::array();
  for (int n = 4; n <= n_max; ++n) {
    const Integer c = mu_coefficients(n).c;
    const Rational coefficient = s[static_cast<std::size_t>(2 * n - 3)];
    const Integer weighted = 2 * binomial(n + 2, 4) + 5 * binomial(n + 1, 4) + binomial(n, 4);
    if (coefficient != (Rational(c) / 54) || Rational(weighted) != (Rational(c) / 54)) {
      return ProofReport::fail(claim, {{"n", n},
                                       {"series_coefficient", to_string(coefficient)},
                                       {"c_over_54", to_string((Rational(c) / 54))},
                                       {"binomial_sum", to_string(weighted)}});
    }
    values.push_back(to_string(coefficient));
  }
  return ProofReport::pass(claim, {{"n_max", n_max}, {"c_over_54_from_n4", values}});
}

}  // namespace tracecert

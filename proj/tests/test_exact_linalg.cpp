#include <random>

#include "doctest.h"
#include "tracecert/block_matrix.hpp"
#include "tracecert/charpoly.hpp"
#include "tracecert/exact_matrix.hpp"
#include "tracecert/kernels.hpp"
#include "tracecert/quad_field.hpp"

using namespace tracecert;

namespace {

ExactMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int lo = -5, int hi = 5) {
  std::uniform_int_distribution<int> dist(lo, hi);
  ExactMatrix m(rows, cols);
  for (auto& x : m.entries()) x = Rational(dist(rng), 1 + (dist(rng) & 1));
  for (auto& x : m.entries()) x.canonicalize();
  return m;
}

// Faddeev-LeVerrier, written independently of the Hessenberg route:
// M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
std::vector<Rational> faddeev_leverrier(const ExactMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<Rational> desc(n + 1);
  desc[0] = 1;
  ExactMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = serial::multiply(a, m) + desc[k - 1] * ExactMatrix::identity(n);
    desc[k] = -serial::multiply(a, m).trace() / Rational(static_cast<long>(k));
  }
  return desc;
}

ExactMatrix permutation_matrix(const std::vector<int>& p) {
  ExactMatrix m(p.size(), p.size());
  for (std::size_t k = 0; k < p.size(); ++k) m(k, static_cast<std::size_t>(p[k])) = 1;
  return m;
}

}  // namespace

TEST_SUITE("exact-linalg") {

TEST_CASE("rationals stay canonical and round-trip through text") {
  const Rational x = parse_rational("-6/4");
  CHECK(to_string(x) == "-3/2");
  CHECK(to_string(Rational(3024) / 54) == "56");
  CHECK(parse_rational(to_string(Rational(-7, 9))) == Rational(-7, 9));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK(binomial(6, 4) == 15);
  CHECK(binomial(3, 4) == 0);
}

TEST_CASE("parallel product equals the serial triple loop") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    const ExactMatrix a = random_matrix(rng, 13, 9);
    const ExactMatrix b = random_matrix(rng, 9, 11);
    CHECK(kernels::multiply(a, b) == serial::multiply(a, b));
  }
  const ExactMatrix ia = ExactMatrix::from_rows({{1, 2}, {3, 4}});
  CHECK(kernels::multiply(ia, ia) == ExactMatrix::from_rows({{7, 10}, {15, 22}}));
  CHECK(kernels::power(ia, 3) == serial::multiply(ia, serial::multiply(ia, ia)));
  CHECK_THROWS(kernels::multiply(ia, ExactMatrix(3, 1)));
}

TEST_CASE("rank, determinant and kernel") {
  const ExactMatrix m = ExactMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(m) == 2);
  CHECK(determinant(m) == 0);
  const ExactMatrix k = kernel_basis(m);
  REQUIRE(k.cols() == 1);
  CHECK((m * k).is_zero());
  CHECK(determinant(ExactMatrix::from_rows({{2, 1}, {1, 3}})) == 5);
  CHECK(kernel_basis(ExactMatrix::identity(3)).cols() == 0);

  std::mt19937_64 rng(11);
  const ExactMatrix a = random_matrix(rng, 5, 5);
  const ExactMatrix b = random_matrix(rng, 5, 5);
  CHECK(determinant(a * b) == determinant(a) * determinant(b));
}

TEST_CASE("char poly agrees with Faddeev-LeVerrier, trace and determinant") {
  std::mt19937_64 rng(3);
  for (std::size_t n : {1u, 2u, 4u, 7u}) {
    const ExactMatrix a = random_matrix(rng, n, n);
    const CharPoly cp = char_poly(a);
    CHECK(cp.coeffs == faddeev_leverrier(a));
    CHECK(cp.coeffs[1] == -a.trace());
    CHECK(cp.coeffs[n] == ((n % 2) ? -determinant(a) : determinant(a)));
  }
  CHECK_THROWS_AS(char_poly(ExactMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("char poly is a similarity invariant") {
  std::mt19937_64 rng(5);
  const ExactMatrix a = random_matrix(rng, 6, 6);
  const ExactMatrix p = permutation_matrix({3, 0, 5, 1, 4, 2});
  CHECK(char_poly(p.transpose() * a * p) == char_poly(a));
  // Cayley-Hamilton.
  const CharPoly cp = char_poly(a);
  ExactMatrix acc(6, 6);
  for (const auto& c : cp.coeffs) acc = acc * a + c * ExactMatrix::identity(6);
  CHECK(acc.is_zero());
}

TEST_CASE("PSD decision on Q^T diag(lambda) Q") {
  // Q has integer entries and full rank, so Q^T D Q has the inertia of D.
  const ExactMatrix q = ExactMatrix::from_rows({{1, 2, 0, 1}, {0, 1, 3, 1}, {2, 0, 1, 0}, {1, 1, 1, 2}});
  REQUIRE(determinant(q) != 0);
  auto with_diagonal = [&](std::vector<long> d) {
    ExactMatrix dm(4, 4);
    for (std::size_t k = 0; k < 4; ++k) dm(k, k) = d[k];
    return q.transpose() * dm * q;
  };
  CHECK(is_psd_exact(with_diagonal({1, 2, 3, 4})).psd);
  CHECK(is_psd_exact(with_diagonal({0, 2, 0, 4})).psd);
  CHECK(is_psd_exact(with_diagonal({0, 0, 0, 0})).psd);
  const PsdDecision bad = is_psd_exact(with_diagonal({1, 2, -1, 4}));
  CHECK_FALSE(bad.psd);
  CHECK(bad.violation.has_value());
  CHECK_FALSE(is_psd_exact(with_diagonal({0, 0, 0, -1})).psd);
  CHECK_THROWS_AS(is_psd_exact(ExactMatrix::from_rows({{1, 2}, {0, 1}})), std::invalid_argument);
  CHECK(sign_pattern({Rational(1), Rational(-3), Rational(0)}) == "+-0");
}

TEST_CASE("block product matches the dense product") {
  const std::vector<std::size_t> rs{2, 0, 3};
  const std::vector<std::size_t> ks{1, 4};
  const std::vector<std::size_t> cs{3, 2};
  const BlockConstantMatrix a(rs, ks, {Rational(1), Rational(2), Rational(5), Rational(-1), Rational(1, 3), Rational(0)});
  const BlockConstantMatrix b(ks, cs, {Rational(2), Rational(7), Rational(-3), Rational(1, 2)});
  CHECK(block_product(a, b).expand() == a.expand() * b.expand());
  CHECK(a.transpose().expand() == a.expand().transpose());
  CHECK_THROWS_AS(block_product(a, a), std::invalid_argument);
}

TEST_CASE("pseudo-inverse satisfies the Penrose conditions") {
  for (std::size_t s : {1u, 3u, 5u}) {
    for (const Rational& c : {Rational(3), Rational(-2, 7), Rational(0)}) {
      const ConstantBlockPinv p = pinv_constant_block(s, c);
      const ExactMatrix m = ExactMatrix::constant(s, s, c);
      const ExactMatrix mp = p.matrix.expand();
      CHECK(m * mp * m == m);
      CHECK(mp * m * mp == mp);
      CHECK((m * mp).is_symmetric());
      CHECK((mp * m).is_symmetric());
      CHECK(p.zero_block == (c == 0));
    }
  }
  const BlockConstantMatrix d({2, 3}, {2, 3}, {Rational(4), Rational(0), Rational(0), Rational(6)});
  const ExactMatrix dp = pinv_block_diagonal(d).expand();
  CHECK(d.expand() * dp * d.expand() == d.expand());
  CHECK(d.is_psd_block_diagonal());
  CHECK_THROWS(pinv_constant_block(0, Rational(1)));
}

TEST_CASE("quadratic field arithmetic") {
  const Integer d = 85;
  const QuadExtScalar x(Rational(78), Rational(6), d);
  const QuadExtScalar y(Rational(1, 2), Rational(-3), d);
  const QuadExtScalar z(Rational(-4), Rational(1, 5), d);
  CHECK((x + y) + z == x + (y + z));
  CHECK((x * y) * z == x * (y * z));
  CHECK(x * (y + z) == x * y + x * z);
  CHECK(x * y == y * x);
  CHECK((x / y) * y == x);
  CHECK(x * x.conjugate() == QuadExtScalar(x.norm()));
  CHECK(x.norm() == 78 * 78 - 36 * 85);
  // 78 + 6 sqrt(85) is a root of x^2 - 156x + 3024.
  CHECK(x * x - Rational(156) * x + Rational(3024) == QuadExtScalar(Rational(0)));
  CHECK(x.to_string() == "78 + 6*sqrt(85)");
  CHECK_THROWS_AS(x / QuadExtScalar(Rational(0)), std::domain_error);
  CHECK_THROWS_AS(x + QuadExtScalar(Rational(1), Rational(1), Integer(2)), std::domain_error);

  const SquarefreeSplit s = squarefree_split(12240);
  CHECK(s.root == 12);
  CHECK(s.squarefree == 85);
  CHECK(squarefree_split(-18).squarefree == -2);
}

TEST_CASE("kernel over Q(sqrt D)") {
  // [[1, -sqrt2], [sqrt2, -2]] has kernel spanned by (sqrt2, 1).
  const Integer d = 2;
  QuadMatrix m = {{QuadExtScalar(Rational(1)), QuadExtScalar(Rational(0), Rational(-1), d)},
                  {QuadExtScalar(Rational(0), Rational(1), d), QuadExtScalar(Rational(-2))}};
  const auto basis = quad_kernel_basis(m, 2, d);
  REQUIRE(basis.size() == 1);
  for (const auto& row : m) CHECK(is_zero(row[0] * basis[0][0] + row[1] * basis[0][1]));
}

}  // TEST_SUITE

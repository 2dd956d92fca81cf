#include <random>

#include "doctest.h"
#include "tracecert/kernels.hpp"
#include "tracecert/trace_oracle.hpp"

using namespace tracecert;

namespace {

ExactMatrix random_symmetric(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> dist(-3, 3);
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = dist(rng);
  }
  return m;
}

// Sum over all words with r B's of trace(word), with plain serial products:
// no interpolation and no symbolic enumeration.
Rational word_sum(const ExactMatrix& a, const ExactMatrix& b, int m, int r) {
  Rational total = 0;
  for (const auto& w : WordSpec::make(m, r).words) {
    ExactMatrix acc = ExactMatrix::identity(a.rows());
    for (int letter : w) acc = serial::multiply(acc, letter ? b : a);
    total += acc.trace();
  }
  return total;
}

}  // namespace

TEST_SUITE("trace-oracle") {

TEST_CASE("words") {
  const WordSpec w = WordSpec::make(4, 2);
  CHECK(w.words.size() == 6);
  CHECK(w.words.front() == std::vector<int>{0, 0, 1, 1});
  CHECK(WordSpec::make(6, 0).words.size() == 1);
  CHECK_THROWS_AS(WordSpec::make(3, 4), std::invalid_argument);
}

TEST_CASE("small closed forms") {
  // n = 1: C(6,2) a^4 b^2.
  const Polynomial p1 = coefficient_polynomial(1, 6, 2);
  CHECK(p1.to_string() == "15 a{1,1}^4 b{1,1}^2");
  CHECK(coefficient_polynomial(3, 0, 0) == Polynomial::from_term(Monomial(), 3));
  // trace(AB + BA) = 2 sum_ij a_ij b_ij.
  const Polynomial p = coefficient_polynomial(2, 2, 1);
  CHECK(p.coefficient(Monomial::parse("a{1,1} b{1,1}")) == 2);
  CHECK(p.coefficient(Monomial::parse("a{1,2} b{1,2}")) == 4);
  CHECK(p.size() == 3);
}

TEST_CASE("parallel enumeration equals the serial reference") {
  for (int n : {2, 3, 4}) CHECK(coefficient_polynomial(n, 6, 2) == serial::coefficient_polynomial(n, 6, 2));
  CHECK(coefficient_polynomial(3, 5, 3) == serial::coefficient_polynomial(3, 5, 3));
}

TEST_CASE("degree law and symmetric-group invariance") {
  const int n = 4;
  const Polynomial p = coefficient_polynomial(n, 6, 2);
  for (const auto& [m, c] : p.terms()) {
    CHECK(m.degree(Family::a) == 4);
    CHECK(m.degree(Family::b) == 2);
    CHECK(c > 0);
  }
  for (const Permutation& sigma : {Permutation{2, 1, 3, 4}, Permutation{4, 3, 1, 2}, Permutation{2, 3, 4, 1}}) {
    CHECK(apply_permutation(p, sigma) == p);
  }
  CHECK(p.coefficient(Monomial::parse("a{1,2}^2 a{1,3}^2 b{1,1}^2")) == 18);
}

TEST_CASE("spot coefficient is 18 for n = 3..6") {
  for (int n = 3; n <= 6; ++n) {
    CHECK(coefficient_polynomial(n, 6, 2).coefficient(Monomial::parse("a{1,2}^2 a{1,3}^2 b{1,1}^2")) == 18);
  }
}

TEST_CASE("symbolic, interpolated and word-sum values agree") {
  std::mt19937_64 rng(41);
  for (int n : {2, 3}) {
    const Polynomial p = coefficient_polynomial(n, 6, 2);
    for (int trial = 0; trial < 4; ++trial) {
      const ExactMatrix a = random_symmetric(rng, static_cast<std::size_t>(n));
      const ExactMatrix b = random_symmetric(rng, static_cast<std::size_t>(n));
      const Rational direct = word_sum(a, b, 6, 2);
      CHECK(numeric_t_coefficient(a, b, 6, 2) == direct);
      CHECK(evaluate(p, assignment_from(a, b)) == direct);
    }
  }
  CHECK_THROWS_AS(numeric_t_coefficient(ExactMatrix::from_rows({{1, 2}, {0, 1}}), ExactMatrix(2, 2), 6, 2),
                  std::invalid_argument);
}

}  // TEST_SUITE

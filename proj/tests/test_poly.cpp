#include <random>
#include <set>

#include "doctest.h"
#include "tracecert/packed.hpp"
#include "tracecert/poly.hpp"
#include "tracecert/serialize.hpp"
#include "tracecert/trace_oracle.hpp"

using namespace tracecert;

namespace {

Monomial random_monomial(std::mt19937_64& rng, int n, int degree) {
  std::uniform_int_distribution<int> idx(1, n);
  std::uniform_int_distribution<int> fam(0, 1);
  std::vector<VarRef> f;
  for (int k = 0; k < degree; ++k) f.push_back(VarRef::make(static_cast<Family>(fam(rng)), idx(rng), idx(rng)));
  return Monomial(f);
}

Polynomial random_polynomial(std::mt19937_64& rng, int n, int terms) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> deg(0, 3);
  Polynomial p;
  for (int t = 0; t < terms; ++t) p.add_term(random_monomial(rng, n, deg(rng)), coeff(rng));
  return p;
}

}  // namespace

TEST_SUITE("poly-core") {

TEST_CASE("monomial text form") {
  const Monomial m = Monomial::parse("b{1,1} a{2,1}^2");
  CHECK(m.to_string() == "a{1,2}^2 b{1,1}");
  CHECK(m.degree() == 3);
  CHECK(m.degree(Family::a) == 2);
  CHECK(m.max_index() == 2);
  CHECK(Monomial().to_string() == "1");
  CHECK(Monomial::parse("1") == Monomial());
  CHECK_THROWS_AS(Monomial::parse("c{1,2}"), std::invalid_argument);
  CHECK_THROWS_AS(Monomial::parse("a{1,2"), std::invalid_argument);
}

TEST_CASE("polynomial ring axioms") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const Polynomial x = random_polynomial(rng, 3, 5);
    const Polynomial y = random_polynomial(rng, 3, 5);
    const Polynomial z = random_polynomial(rng, 3, 5);
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x - x).is_zero());
    CHECK(x * Polynomial::from_term(Monomial(), 1) == x);
  }
  Polynomial p;
  p.add_term(Monomial::parse("a{1,1}"), 3);
  p.add_term(Monomial::parse("a{1,1}"), -3);
  CHECK(p.is_zero());
  CHECK(p.size() == 0);
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(23);
  Assignment values;
  std::uniform_int_distribution<int> dist(-6, 6);
  for (int i = 1; i <= 3; ++i) {
    for (int j = i; j <= 3; ++j) {
      values[VarRef::make(Family::a, i, j)] = dist(rng);
      values[VarRef::make(Family::b, i, j)] = Rational(dist(rng), 5);
    }
  }
  for (auto& [k, v] : values) v.canonicalize();
  for (int trial = 0; trial < 20; ++trial) {
    const Polynomial x = random_polynomial(rng, 3, 4);
    const Polynomial y = random_polynomial(rng, 3, 4);
    CHECK(evaluate(x * y, values) == evaluate(x, values) * evaluate(y, values));
    CHECK(evaluate(x + y, values) == evaluate(x, values) + evaluate(y, values));
  }
  CHECK_THROWS_AS(evaluate(Polynomial::from_term(Monomial::parse("a{4,4}"), 1), values), std::out_of_range);
}

TEST_CASE("canonical type agrees with the n! search") {
  std::mt19937_64 rng(29);
  for (int n : {3, 5, 6}) {
    for (int trial = 0; trial < 40; ++trial) {
      const Monomial m = random_monomial(rng, n, 6);
      CHECK(canonical_type(m, n) == canonical_type_brute_force(m, n));
    }
  }
  CHECK(canonical_type(Monomial::parse("a{3,3}^2 b{2,3}"), 3).to_string() == "a{1,1}^2 b{1,2}");
  CHECK_THROWS(canonical_type(Monomial::parse("a{1,4}"), 3));
}

TEST_CASE("permutations act on polynomials") {
  std::mt19937_64 rng(31);
  const Polynomial p = random_polynomial(rng, 4, 6);
  const Polynomial q = random_polynomial(rng, 4, 6);
  const Permutation sigma{2, 4, 1, 3};
  CHECK(apply_permutation(p * q, sigma) == apply_permutation(p, sigma) * apply_permutation(q, sigma));
  int count = 0;
  for_each_permutation(4, [&](const Permutation&) { ++count; });
  CHECK(count == 24);
}

TEST_CASE("packed keys round-trip") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    const Monomial m = random_monomial(rng, packed::kMaxIndex, 1 + trial % 8);
    std::vector<std::uint8_t> codes;
    for (const auto& v : m.factors()) codes.push_back(packed::code(v.family, v.i, v.j));
    CHECK(packed::unpack(packed::pack(codes.data(), codes.size())) == m);
  }
  for (int i = 1; i <= packed::kMaxIndex; ++i) {
    for (int j = i; j <= packed::kMaxIndex; ++j) {
      const VarRef v = packed::decode(packed::code(Family::b, i, j));
      CHECK(v == VarRef::make(Family::b, i, j));
    }
  }
}

TEST_CASE("monomial type counts") {
  CHECK(count_types(coefficient_polynomial(3, 6, 2), 3) == 80);
  CHECK(count_types(coefficient_polynomial(6, 6, 2), 6) == 169);
}

TEST_CASE("the 169 listed types are exactly the types of p at n = 6") {
  const std::vector<Monomial> listed = io::read_monomials(std::filesystem::path(TRACECERT_GOLDEN_DIR) / "types169");
  REQUIRE(listed.size() == 169);
  std::set<Monomial> from_list;
  for (const auto& m : listed) from_list.insert(canonical_type(m, 6));
  CHECK(from_list.size() == 169);
  std::set<Monomial> from_p;
  const Polynomial p = coefficient_polynomial(6, 6, 2);
  for (const auto& [m, c] : p.terms()) from_p.insert(canonical_type(m, 6));
  CHECK(from_list == from_p);
}

}  // TEST_SUITE

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tracecert/exact.hpp"

namespace tracecert {

enum class Family : std::uint8_t { a = 0, b = 1 };

/// Entry variable a{i,j} or b{i,j} of a symmetric matrix; 1-based, i <= j.
struct VarRef {
  Family family = Family::a;
  int i = 1;
  int j = 1;

  /// Sorts the pair, so make(a, 3, 1) is a{1,3}.
  static VarRef make(Family family, int i, int j);
  std::string to_string() const;
  friend auto operator<=>(const VarRef&, const VarRef&) = default;
};

/// Commutative monomial: sorted multiset of variables. Ordering compares the
/// sorted factor sequences lexicographically (a before b, then pairs).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<VarRef> factors);

  const std::vector<VarRef>& factors() const { return factors_; }
  std::size_t degree() const { return factors_.size(); }
  std::size_t degree(Family family) const;
  /// Largest index mentioned, 0 for the empty monomial.
  int max_index() const;

  /// "a{1,2}^2 b{1,1}"; the empty monomial prints as "1".
  std::string to_string() const;
  /// Inverse of to_string. Throws std::invalid_argument on malformed text.
  static Monomial parse(std::string_view text);

  friend Monomial operator*(const Monomial& x, const Monomial& y);
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<VarRef> factors_;
};

/// Exact polynomial with integer coefficients; zero coefficients are never stored.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Integer>;

  Polynomial() = default;
  static Polynomial from_term(const Monomial& m, const Integer& coefficient);

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Integer& coefficient);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial x, const Polynomial& y) { return x += y; }
  friend Polynomial operator-(Polynomial x, const Polynomial& y) { return x -= y; }
  friend Polynomial operator*(const Polynomial& x, const Polynomial& y);
  friend Polynomial operator*(const Integer& s, const Polynomial& x);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string() const;

 private:
  Terms terms_;
};

/// sigma[k-1] is the image of index k (a permutation of 1..n).
using Permutation = std::vector<int>;

Monomial apply_permutation(const Monomial& m, std::span<const int> sigma);
Polynomial apply_permutation(const Polynomial& p, std::span<const int> sigma);

/// Lexicographically least monomial in the orbit of m under S_n.
///
/// Only bijections from the indices actually used onto {1..s} are tried:
/// composing any relabeling with the order-preserving map onto {1..s} lowers
/// every factor pointwise while keeping their relative order, so the global
/// minimum is always attained there. Throws if an index exceeds n.
Monomial canonical_type(const Monomial& m, int n);
/// Reference version: minimum over all n! permutations.
Monomial canonical_type_brute_force(const Monomial& m, int n);

/// Number of distinct canonical types among the terms of p.
std::size_t count_types(const Polynomial& p, int n);

using Assignment = std::map<VarRef, Rational>;
/// Exact substitution. Throws std::out_of_range if p uses a variable the
/// assignment does not cover.
Rational evaluate(const Polynomial& p, const Assignment& values);

/// Calls f(sigma) for every permutation of 1..n in lexicographic order.
template <class F>
void for_each_permutation(int n, F&& f) {
  Permutation sigma(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) sigma[static_cast<std::size_t>(k)] = k + 1;
  do {
    f(static_cast<const Permutation&>(sigma));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

}  // namespace tracecert

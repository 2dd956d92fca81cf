#include "tracecert/poly.hpp"

#include <charconv>
#include <stdexcept>

namespace tracecert {

VarRef VarRef::make(Family family, int i, int j) {
  if (i > j) std::swap(i, j);
  return VarRef{family, i, j};
}

std::string VarRef::to_string() const {
  return std::string(family == Family::a ? "a" : "b") + "{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

Monomial::Monomial(std::vector<VarRef> factors) : factors_(std::move(factors)) {
  for (auto& v : factors_) {
    if (v.i > v.j) std::swap(v.i, v.j);
  }
  std::sort(factors_.begin(), factors_.end());
}

std::size_t Monomial::degree(Family family) const {
  return static_cast<std::size_t>(
      std::count_if(factors_.begin(), factors_.end(), [family](const VarRef& v) { return v.family == family; }));
}

int Monomial::max_index() const {
  int out = 0;
  for (const auto& v : factors_) out = std::max(out, v.j);
  return out;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < factors_.size();) {
    std::size_t run = 1;
    while (k + run < factors_.size() && factors_[k + run] == factors_[k]) ++run;
    if (!out.empty()) out += ' ';
    out += factors_[k].to_string();
    if (run > 1) out += "^" + std::to_string(run);
    k += run;
  }
  return out;
}

namespace {

int read_int(std::string_view text, std::size_t& pos) {
  int value = 0;
  const auto* first = text.data() + pos;
  const auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), value);
  if (ec != std::errc() || ptr == first) throw std::invalid_argument("Monomial::parse: expected integer in '" + std::string(text) + "'");
  pos += static_cast<std::size_t>(ptr - first);
  return value;
}

void expect(std::string_view text, std::size_t& pos, char c) {
  if (pos >= text.size() || text[pos] != c) {
    throw std::invalid_argument(std::string("Monomial::parse: expected '") + c + "' in '" + std::string(text) + "'");
  }
  ++pos;
}

}  // namespace

Monomial Monomial::parse(std::string_view text) {
  std::vector<VarRef> factors;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '*')) ++pos;
  };
  skip_space();
  if (text.substr(pos) == "1") return Monomial();
  while (pos < text.size()) {
    Family family;
    if (text[pos] == 'a') {
      family = Family::a;
    } else if (text[pos] == 'b') {
      family = Family::b;
    } else {
      throw std::invalid_argument("Monomial::parse: unknown variable family in '" + std::string(text) + "'");
    }
    ++pos;
    expect(text, pos, '{');
    const int i = read_int(text, pos);
    expect(text, pos, ',');
    const int j = read_int(text, pos);
    expect(text, pos, '}');
    if (i < 1 || j < 1) throw std::invalid_argument("Monomial::parse: indices are 1-based");
    int power = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      power = read_int(text, pos);
      if (power < 1) throw std::invalid_argument("Monomial::parse: exponent must be positive");
    }
    for (int k = 0; k < power; ++k) factors.push_back(VarRef::make(family, i, j));
    skip_space();
  }
  return Monomial(std::move(factors));
}

Monomial operator*(const Monomial& x, const Monomial& y) {
  std::vector<VarRef> factors;
  factors.reserve(x.factors_.size() + y.factors_.size());
  std::merge(x.factors_.begin(), x.factors_.end(), y.factors_.begin(), y.factors_.end(), std::back_inserter(factors));
  Monomial out;
  out.factors_ = std::move(factors);
  return out;
}

Polynomial Polynomial::from_term(const Monomial& m, const Integer& coefficient) {
  Polynomial p;
  p.add_term(m, coefficient);
  return p;
}

Integer Polynomial::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Integer& coefficient) {
  if (sgn(coefficient) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& x, const Polynomial& y) {
  Polynomial out;
  for (const auto& [mx, cx] : x.terms_) {
    for (const auto& [my, cy] : y.terms_) out.add_term(mx * my, cx * cy);
  }
  return out;
}

Polynomial operator*(const Integer& s, const Polynomial& x) {
  Polynomial out;
  if (sgn(s) == 0) return out;
  out.terms_ = x.terms_;
  for (auto& [m, c] : out.terms_) c *= s;
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += sgn(c) < 0 ? " - " : " + ";
    else if (sgn(c) < 0) out += "-";
    const Integer magnitude = abs(c);
    if (magnitude != 1 || m.degree() == 0) {
      out += tracecert::to_string(magnitude);
      if (m.degree() != 0) out += " ";
    }
    if (m.degree() != 0) out += m.to_string();
  }
  return out;
}

Monomial apply_permutation(const Monomial& m, std::span<const int> sigma) {
  std::vector<VarRef> factors;
  factors.reserve(m.degree());
  for (const auto& v : m.factors()) {
    if (v.j > static_cast<int>(sigma.size())) throw std::out_of_range("apply_permutation: index exceeds permutation size");
    factors.push_back(VarRef::make(v.family, sigma[static_cast<std::size_t>(v.i - 1)],
                                   sigma[static_cast<std::size_t>(v.j - 1)]));
  }
  return Monomial(std::move(factors));
}

Polynomial apply_permutation(const Polynomial& p, std::span<const int> sigma) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) out.add_term(apply_permutation(m, sigma), c);
  return out;
}

Monomial canonical_type(const Monomial& m, int n) {
  if (m.max_index() > n) throw std::out_of_range("canonical_type: index exceeds n");
  std::vector<int> used;
  for (const auto& v : m.factors()) {
    used.push_back(v.i);
    used.push_back(v.j);
  }
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  const int s = static_cast<int>(used.size());

  Permutation sigma(static_cast<std::size_t>(m.max_index()), 0);
  Monomial best;
  bool first = true;
  for_each_permutation(s, [&](const Permutation& pi) {
    for (std::size_t k = 0; k < used.size(); ++k) sigma[static_cast<std::size_t>(used[k] - 1)] = pi[k];
    Monomial candidate = apply_permutation(m, sigma);
    if (first || candidate < best) {
      best = std::move(candidate);
      first = false;
    }
  });
  return best;
}

Monomial canonical_type_brute_force(const Monomial& m, int n) {
  if (m.max_index() > n) throw std::out_of_range("canonical_type_brute_force: index exceeds n");
  Monomial best = m;
  for_each_permutation(n, [&](const Permutation& sigma) {
    Monomial candidate = apply_permutation(m, sigma);
    if (candidate < best) best = std::move(candidate);
  });
  return best;
}

std::size_t count_types(const Polynomial& p, int n) {
  std::vector<const Monomial*> monomials;
  monomials.reserve(p.size());
  for (const auto& term : p.terms()) monomials.push_back(&term.first);
  std::vector<Monomial> types(monomials.size());
  const auto count = static_cast<std::ptrdiff_t>(monomials.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    types[static_cast<std::size_t>(k)] = canonical_type(*monomials[static_cast<std::size_t>(k)], n);
  }
  std::sort(types.begin(), types.end());
  return static_cast<std::size_t>(std::unique(types.begin(), types.end()) - types.begin());
}

Rational evaluate(const Polynomial& p, const Assignment& values) {
  Rational total = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational term(c);
    for (const auto& v : m.factors()) {
      const auto it = values.find(v);
      if (it == values.end()) throw std::out_of_range("evaluate: no value for " + v.to_string());
      term *= it->second;
    }
    total += term;
  }
  return total;
}

}  // namespace tracecert

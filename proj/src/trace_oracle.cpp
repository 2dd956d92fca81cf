#include "tracecert/trace_oracle.hpp"

#include <stdexcept>
#include <unordered_map>

#include "tracecert/charpoly.hpp"
#include "tracecert/kernels.hpp"
#include "tracecert/packed.hpp"

namespace tracecert {

WordSpec WordSpec::make(int m, int r) {
  if (m < 0 || r < 0 || r > m) throw std::invalid_argument("WordSpec: need 0 <= r <= m");
  WordSpec spec{m, r, {}};
  std::vector<int> word(static_cast<std::size_t>(m), 0);
  std::fill(word.end() - r, word.end(), 1);
  do {
    spec.words.push_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return spec;
}

namespace {

void require_args(int n, int m, int r) {
  if (n < 1) throw std::invalid_argument("coefficient_polynomial: n must be positive");
  if (m < 0 || r < 0 || r > m) throw std::invalid_argument("coefficient_polynomial: need 0 <= r <= m");
}

// Advances indices[from..] as an odometer over 1..n; false after the last tuple.
bool advance(std::vector<int>& indices, std::size_t from, int n) {
  for (std::size_t k = indices.size(); k-- > from;) {
    if (indices[k] < n) {
      ++indices[k];
      return true;
    }
    indices[k] = 1;
  }
  return false;
}

}  // namespace

Polynomial coefficient_polynomial(int n, int m, int r) {
  require_args(n, m, r);
  if (m == 0) return Polynomial::from_term(Monomial(), Integer(n));
  if (!packed::supports(n, static_cast<std::size_t>(m))) return serial::coefficient_polynomial(n, m, r);

  const WordSpec spec = WordSpec::make(m, r);
  const auto tasks = static_cast<std::ptrdiff_t>(spec.words.size() * static_cast<std::size_t>(n));
  const auto len = static_cast<std::size_t>(m);
  std::unordered_map<packed::Key, long long> merged;

#pragma omp parallel
  {
    std::unordered_map<packed::Key, long long> local;
    std::vector<int> idx(len);
    std::array<std::uint8_t, packed::kMaxDegree> codes{};
#pragma omp for schedule(dynamic, 1)
    for (std::ptrdiff_t task = 0; task < tasks; ++task) {
      const auto& word = spec.words[static_cast<std::size_t>(task) / static_cast<std::size_t>(n)];
      std::fill(idx.begin(), idx.end(), 1);
      idx[0] = static_cast<int>(task % n) + 1;
      do {
        for (std::size_t k = 0; k < len; ++k) {
          const int next = idx[(k + 1) % len];
          codes[k] = packed::code(word[k] == 0 ? Family::a : Family::b, idx[k], next);
        }
        ++local[packed::pack(codes.data(), len)];
      } while (advance(idx, 1, n));
    }
#pragma omp critical(tracecert_oracle_merge)
    for (const auto& [key, count] : local) merged[key] += count;
  }

  Polynomial out;
  for (const auto& [key, count] : merged) out.add_term(packed::unpack(key), Integer(static_cast<long>(count)));
  return out;
}

namespace serial {

Polynomial coefficient_polynomial(int n, int m, int r) {
  require_args(n, m, r);
  if (m == 0) return Polynomial::from_term(Monomial(), Integer(n));
  const WordSpec spec = WordSpec::make(m, r);
  const auto len = static_cast<std::size_t>(m);
  Polynomial out;
  for (const auto& word : spec.words) {
    std::vector<int> idx(len, 1);
    do {
      std::vector<VarRef> factors;
      for (std::size_t k = 0; k < len; ++k) {
        factors.push_back(VarRef::make(word[k] == 0 ? Family::a : Family::b, idx[k], idx[(k + 1) % len]));
      }
      out.add_term(Monomial(std::move(factors)), Integer(1));
    } while (advance(idx, 0, n));
  }
  return out;
}

}  // namespace serial

Rational numeric_t_coefficient(const ExactMatrix& a, const ExactMatrix& b, int m, int r) {
  if (!a.is_square() || a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("numeric_t_coefficient: A and B must be square and of equal size");
  }
  if (!a.is_symmetric() || !b.is_symmetric()) throw std::invalid_argument("numeric_t_coefficient: inputs must be symmetric");
  if (m < 0 || r < 0 || r > m) throw std::invalid_argument("numeric_t_coefficient: need 0 <= r <= m");
  if (m == 0) return Rational(static_cast<long>(a.rows()));

  // f(t) = trace((A + tB)^m) has degree <= m; sample at t = 0..m.
  std::vector<Rational> samples;
  for (int t = 0; t <= m; ++t) {
    const ExactMatrix x = a + Rational(t) * b;
    samples.push_back(kernels::power(x, static_cast<unsigned>(m)).trace());
  }
  UPoly interpolant;
  for (int k = 0; k <= m; ++k) {
    UPoly basis({Rational(1)});
    Rational denom = 1;
    for (int j = 0; j <= m; ++j) {
      if (j == k) continue;
      basis = basis * UPoly({Rational(-j), Rational(1)});
      denom *= Rational(k - j);
    }
    interpolant = interpolant + UPoly({samples[static_cast<std::size_t>(k)] / denom}) * basis;
  }
  return interpolant.coefficient(static_cast<std::size_t>(r));
}

Assignment assignment_from(const ExactMatrix& a, const ExactMatrix& b) {
  Assignment values;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i; j < a.cols(); ++j) {
      const int ii = static_cast<int>(i) + 1;
      const int jj = static_cast<int>(j) + 1;
      values[VarRef::make(Family::a, ii, jj)] = a(i, j);
      values[VarRef::make(Family::b, ii, jj)] = b(i, j);
    }
  }
  return values;
}

}  // namespace tracecert

#include "tracecert/kernels.hpp"

#include <omp.h>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace tracecert {

namespace {

void require_conformable(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matrix product: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

ExactMatrix multiply_integral(const ExactMatrix& a, const ExactMatrix& b) {
  const std::size_t rows = a.rows();
  const std::size_t inner = a.cols();
  const std::size_t cols = b.cols();
  std::vector<Integer> lhs(rows * inner);
  std::vector<Integer> rhs(inner * cols);
  for (std::size_t i = 0; i < lhs.size(); ++i) lhs[i] = a.entries()[i].get_num();
  for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] = b.entries()[i].get_num();

  std::vector<Rational> out(rows * cols);
  const auto n_rows = static_cast<std::ptrdiff_t>(rows);
#pragma omp parallel
  {
    std::vector<Integer> acc(cols);
#pragma omp for schedule(dynamic, 1)
    for (std::ptrdiff_t r = 0; r < n_rows; ++r) {
      for (auto& x : acc) x = 0;
      const std::size_t row = static_cast<std::size_t>(r);
      for (std::size_t k = 0; k < inner; ++k) {
        const Integer& lk = lhs[row * inner + k];
        if (sgn(lk) == 0) continue;
        const Integer* rk = &rhs[k * cols];
        for (std::size_t c = 0; c < cols; ++c) {
          mpz_addmul(acc[c].get_mpz_t(), lk.get_mpz_t(), rk[c].get_mpz_t());
        }
      }
      for (std::size_t c = 0; c < cols; ++c) out[row * cols + c] = Rational(acc[c]);
    }
  }
  return ExactMatrix(rows, cols, std::move(out));
}

ExactMatrix multiply_rational(const ExactMatrix& a, const ExactMatrix& b) {
  const std::size_t rows = a.rows();
  const std::size_t inner = a.cols();
  const std::size_t cols = b.cols();
  std::vector<Rational> out(rows * cols);
  const auto n_rows = static_cast<std::ptrdiff_t>(rows);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t r = 0; r < n_rows; ++r) {
    const std::size_t row = static_cast<std::size_t>(r);
    Rational* dst = &out[row * cols];
    for (std::size_t k = 0; k < inner; ++k) {
      const Rational& lk = a(row, k);
      if (sgn(lk) == 0) continue;
      for (std::size_t c = 0; c < cols; ++c) {
        if (sgn(b(k, c)) != 0) dst[c] += lk * b(k, c);
      }
    }
  }
  return ExactMatrix(rows, cols, std::move(out));
}

}  // namespace

namespace kernels {

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b) {
  require_conformable(a, b);
  ExactMatrix product = (a.is_integral() && b.is_integral()) ? multiply_integral(a, b) : multiply_rational(a, b);
  product.set_labels(a.row_labels(), b.col_labels());
  return product;
}

ExactMatrix power(const ExactMatrix& m, unsigned k) {
  if (!m.is_square()) throw std::invalid_argument("matrix power of a non-square matrix");
  if (k == 0) throw std::invalid_argument("matrix power: exponent must be positive");
  ExactMatrix result = m;
  for (unsigned i = 1; i < k; ++i) result = multiply(result, m);
  return result;
}

int worker_count() { return omp_get_max_threads(); }

void configure_from_environment() {
  if (const char* value = std::getenv("TRACECERT_THREADS")) {
    char* end = nullptr;
    const long threads = std::strtol(value, &end, 10);
    if (end != value && *end == '\0' && threads > 0) omp_set_num_threads(static_cast<int>(threads));
  }
}

}  // namespace kernels

namespace serial {

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b) {
  require_conformable(a, b);
  ExactMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) {
      Rational sum = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) sum += a(r, k) * b(k, c);
      out(r, c) = sum;
    }
  }
  return out;
}

}  // namespace serial

}  // namespace tracecert

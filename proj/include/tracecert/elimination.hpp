#pragma once

// Gauss-Jordan elimination over an exact field. Instantiated for Rational and
// for QuadExtScalar; the field type needs +, -, *, / and an is_zero() overload.

#include <cstddef>
#include <utility>
#include <vector>

#include "tracecert/exact.hpp"

namespace tracecert {

template <class Field>
using DenseRows = std::vector<std::vector<Field>>;

template <class Field>
struct RowEchelon {
  DenseRows<Field> rows;             // reduced rows, pivots normalised to one
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

/// Reduced row echelon form of `m` (each row must have `cols` entries).
template <class Field>
RowEchelon<Field> reduced_row_echelon(DenseRows<Field> m, std::size_t cols) {
  RowEchelon<Field> out;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < m.size(); ++c) {
    std::size_t pivot = lead;
    while (pivot < m.size() && is_zero(m[pivot][c])) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[lead]);
    const Field inv = Field(m[lead][c]);
    for (std::size_t k = c; k < cols; ++k) m[lead][k] = m[lead][k] / inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == lead || is_zero(m[r][c])) continue;
      const Field factor = m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] = m[r][k] - factor * m[lead][k];
    }
    out.pivots.push_back(c);
    ++lead;
  }
  m.resize(lead);
  out.rows = std::move(m);
  return out;
}

/// Basis of the right kernel; one vector per free column, with a one in that
/// column. `zero` and `one` supply the field constants (needed for field types
/// that carry a parameter, such as the radicand of a quadratic field).
template <class Field>
std::vector<std::vector<Field>> kernel_vectors(DenseRows<Field> m, std::size_t cols, const Field& zero,
                                               const Field& one) {
  const RowEchelon<Field> ech = reduced_row_echelon(std::move(m), cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : ech.pivots) is_pivot[p] = true;
  std::vector<std::vector<Field>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Field> v(cols, zero);
    v[free] = one;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = zero - ech.rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace tracecert

#pragma once

// Data-parallel kernels. Each kernel has a plain serial twin in
// tracecert::serial that shares no code with it; the test suite checks the two
// against each other and bench/ times them.
//
// All reductions are exact, so the parallel results are bit-identical to the
// serial ones regardless of thread count or scheduling.

#include <cstddef>

#include "tracecert/exact_matrix.hpp"

namespace tracecert {

namespace kernels {

/// Dense exact product. Uses an integer (mpz) path when both operands are
/// integral, otherwise rational accumulation. Rows are distributed over
/// OpenMP threads.
ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b);

/// m^k by repeated multiplication (k >= 1).
ExactMatrix power(const ExactMatrix& m, unsigned k);

/// Number of OpenMP worker threads currently in use.
int worker_count();
/// Honours TRACECERT_THREADS when set to a positive integer.
void configure_from_environment();

}  // namespace kernels

namespace serial {

/// Reference triple loop in rational arithmetic.
ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace serial

}  // namespace tracecert

#pragma once

namespace csr {

// Worker count for the OpenMP kernels. Reads CSR_THREADS on every call so
// tests and embedders can change it at runtime; 0, unset, or garbage means
// "let OpenMP decide". Values are clamped to [1, omp_get_max_threads()].
int worker_threads();

} // namespace csr

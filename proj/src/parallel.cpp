#include "csr/parallel.hpp"

#include <cstdlib>
#include <string>

#include <omp.h>

namespace csr {

int worker_threads() {
  const int hw = omp_get_max_threads();
  const char* env = std::getenv("CSR_THREADS");
  if (env == nullptr || *env == '\0') return hw;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v <= 0) return hw; // 0 or junk = auto
  return static_cast<int>(v < hw ? v : hw);
}

} // namespace csr

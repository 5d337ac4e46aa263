#pragma once

#include <stdexcept>
#include <string>

namespace csr {

// Base for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad inputs: malformed files, out-of-domain arguments, shape mismatches,
// non-finite data, degenerate grids. Maps to exit code 3 in the CLI.
struct DataError : Error {
  using Error::Error;
};

// Problems with the numerics of a request: underdetermined systems,
// collinear design columns, under-resolved quadrature or grids.
// Maps to exit code 4 in the CLI.
struct NumericalError : Error {
  using Error::Error;
};

} // namespace csr

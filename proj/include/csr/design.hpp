#pragma once

#include <memory>
#include <optional>

#include "csr/basis.hpp"
#include "csr/grid.hpp"
#include "csr/matrix.hpp"
#include "csr/qr.hpp"

namespace csr {

// n×m evaluation of a basis on a grid, with its QR factorization cached at
// construction so concurrent readers never race on lazy state. Immutable.
class DesignMatrix {
public:
  DesignMatrix(BasisSpec spec, SampleGrid grid);

  const Matrix& values() const { return values_; }
  const BasisSpec& spec() const { return spec_; }
  const SampleGrid& grid() const { return grid_; }
  int rows() const { return values_.rows(); }
  int cols() const { return values_.cols(); }

  bool orthonormalized() const { return orthonormalized_; }

  // Factorization is only available when n >= m; callers that need a fit
  // go through fit_single/fit_batch which check that first.
  const QrFactorization* factorization() const { return qr_.get(); }

  // Change of basis R with design = analytic_design · R⁻¹; only present on
  // orthonormalized designs. Maps coefficients both ways:
  //   c_ortho = R · c_analytic,   c_analytic = R⁻¹ · c_ortho.
  const Matrix* change_of_basis() const {
    return change_of_basis_ ? &*change_of_basis_ : nullptr;
  }

  friend DesignMatrix orthonormalize_design(const DesignMatrix& dm);

private:
  DesignMatrix() = default;

  BasisSpec spec_;
  SampleGrid grid_;
  Matrix values_;
  bool orthonormalized_ = false;
  std::optional<Matrix> change_of_basis_;
  std::shared_ptr<const QrFactorization> qr_;
};

DesignMatrix build_design(const BasisSpec& spec, const SampleGrid& grid);

// Replace the columns with an exactly orthonormal set spanning the same
// space (thin Q of the Householder factorization, diag(R) > 0), recording R
// as the change of basis. Idempotent. Throws NumericalError on n < m or
// collinear columns.
DesignMatrix orthonormalize_design(const DesignMatrix& dm);

} // namespace csr

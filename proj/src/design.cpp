#include "csr/design.hpp"

#include "csr/kernels.hpp"

namespace csr {

DesignMatrix::DesignMatrix(BasisSpec spec, SampleGrid grid)
    : spec_(spec), grid_(std::move(grid)) {
  const int n = grid_.size();
  const int m = spec_.function_count();
  values_ = Matrix(n, m);
  kernels::eval_design(spec_, grid_.points, values_);
  if (n >= m) qr_ = std::make_shared<const QrFactorization>(values_);
  // n < m: evaluation-only matrix, fits will refuse it.
}

DesignMatrix build_design(const BasisSpec& spec, const SampleGrid& grid) {
  return DesignMatrix(spec, grid);
}

DesignMatrix orthonormalize_design(const DesignMatrix& dm) {
  if (dm.orthonormalized()) return dm;
  const int n = dm.rows();
  const int m = dm.cols();
  if (n < m)
    throw NumericalError("orthonormalize_design needs n >= m (got n=" + std::to_string(n) +
                         ", m=" + std::to_string(m) + ")");
  const QrFactorization& qr = *dm.factorization();
  if (qr.rank_deficient())
    throw NumericalError("collinear design: column " + std::to_string(qr.weakest_column()) +
                         " is numerically dependent on the others");

  DesignMatrix out;
  out.spec_ = dm.spec();
  out.grid_ = dm.grid();
  out.values_ = qr.thin_q();
  out.orthonormalized_ = true;
  out.change_of_basis_ = qr.r();
  out.qr_ = std::make_shared<const QrFactorization>(out.values_);
  return out;
}

} // namespace csr

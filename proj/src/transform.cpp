#include "csr/transform.hpp"

#include "csr/kernels.hpp"

namespace csr {

std::vector<double> evaluate(const CoefficientSet& cs, double t) {
  if (!(t >= 0.0 && t <= 1.0))
    throw DataError("evaluation point " + std::to_string(t) + " outside [0,1]");
  const int m = cs.basis_count();
  const int p = cs.series();
  std::vector<double> psi(static_cast<std::size_t>(m));
  for (int l = 0; l < m; ++l) psi[static_cast<std::size_t>(l)] = eval_basis(cs.spec, l, t);
  std::vector<double> out(static_cast<std::size_t>(p), 0.0);
  for (int i = 0; i < p; ++i) {
    double s = 0.0;
    for (int l = 0; l < m; ++l) s += cs.coeffs(l, i) * psi[static_cast<std::size_t>(l)];
    out[static_cast<std::size_t>(i)] = s;
  }
  return out;
}

Reconstruction reconstruct(const CoefficientSet& cs, const SampleGrid& grid) {
  const int n = grid.size();
  const int m = cs.basis_count();
  Matrix psi(n, m);
  kernels::eval_design(cs.spec, grid.points, psi);

  Reconstruction rec;
  rec.values = Matrix(n, cs.series());
  kernels::matmul(psi, cs.coeffs, rec.values);
  rec.target_grid = grid;
  rec.source = family_name(cs.spec.family) + "(k=" + std::to_string(cs.spec.degree) + ") on " +
               cs.grid_id;
  return rec;
}

Matrix residuals(const DesignMatrix& dm, const SeriesBatch& batch, const CoefficientSet& cs) {
  if (batch.samples() != dm.rows() || cs.basis_count() != dm.cols() ||
      cs.series() != batch.series())
    throw DataError("residuals: inconsistent shapes between design, batch, and coefficients");
  Matrix out(batch.samples(), batch.series());
  kernels::residual(batch.values, dm.values(), cs.coeffs, out);
  return out;
}

Reconstruction denoise(const SeriesBatch& batch, const SampleGrid& grid, const BasisSpec& spec) {
  const DesignMatrix dm = build_design(spec, grid);
  const CoefficientSet cs = fit_batch(dm, batch);
  return reconstruct(cs, grid);
}

} // namespace csr

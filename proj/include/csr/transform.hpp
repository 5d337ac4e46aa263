#pragma once

#include "csr/fit.hpp"

namespace csr {

// Fitted series evaluated on a target grid: values = Ψ_target · C.
struct Reconstruction {
  Matrix values;
  SampleGrid target_grid;
  std::string source; // basis/grid provenance of the coefficients

  int samples() const { return values.rows(); }
  int series() const { return values.cols(); }
};

// Series sums for all p series at one point t in [0,1].
std::vector<double> evaluate(const CoefficientSet& cs, double t);

// Pointwise evaluation on a grid; the grid may differ from the fitting grid
// (e.g. upsampling), it only has to live in [0,1].
Reconstruction reconstruct(const CoefficientSet& cs, const SampleGrid& grid);

// Y − Ψ·C. Per-column sums of squares agree with cs.residual_norms.
Matrix residuals(const DesignMatrix& dm, const SeriesBatch& batch, const CoefficientSet& cs);

// build_design → fit_batch → reconstruct on the same grid.
Reconstruction denoise(const SeriesBatch& batch, const SampleGrid& grid, const BasisSpec& spec);

} // namespace csr

#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "csr/design.hpp"

namespace csr {

// Per-series affine preprocessing applied before a fit (z-scoring in the
// CLI); raw = stored * scale + offset.
struct SeriesPreprocess {
  double offset = 0.0;
  double scale = 1.0;
};

// n×p observation matrix Y: p series sharing one sample grid.
struct SeriesBatch {
  Matrix values;
  std::vector<std::string> labels;           // size p, or empty for defaults
  std::vector<SeriesPreprocess> preprocess;  // size p, or empty for identity

  int samples() const { return values.rows(); }
  int series() const { return values.cols(); }

  std::string label(int i) const;
};

// Fitted expansion coefficients C (m×p), tagged with the basis and grid
// that produced them. residual_norms[i] = ‖Ψ·c_i − y_i‖².
struct CoefficientSet {
  Matrix coeffs;
  BasisSpec spec;
  std::string grid_id;
  std::vector<double> residual_norms;
  std::vector<std::string> warnings;

  int basis_count() const { return coeffs.rows(); }
  int series() const { return coeffs.cols(); }
};

// QR is the production path; NormalEquations forms (ΨᵀΨ)⁻¹Ψᵀy literally and
// exists for comparison with that textbook route.
enum class FitMethod { Qr, NormalEquations };

// Least-squares coefficients for one series. Throws NumericalError when
// n < m (underdetermined) or the design is collinear; DataError on
// non-finite input. Warns (in the result) when n < 2m.
CoefficientSet fit_single(const DesignMatrix& dm, std::span<const double> y,
                          FitMethod method = FitMethod::Qr);

// Simultaneous fit of all columns of the batch against one shared
// factorization. Column i equals fit_single(dm, Y_i) bitwise.
CoefficientSet fit_batch(const DesignMatrix& dm, const SeriesBatch& batch,
                         FitMethod method = FitMethod::Qr);

// Continuous Fourier coefficients c_l = ∫ f·psi_l dt by quadrature; the
// oracle the discrete fits converge to. Rule of thumb for smooth f: at
// least 32·k intervals. residual_norms holds ∫f² − Σc² (clamped at 0).
CoefficientSet project_continuous(const std::function<double(double)>& f,
                                  const BasisSpec& spec, const QuadratureRule& rule);

} // namespace csr

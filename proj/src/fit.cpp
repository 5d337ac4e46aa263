#include "csr/fit.hpp"

#include <cmath>

#include "csr/kernels.hpp"

namespace csr {

std::string SeriesBatch::label(int i) const {
  if (i >= 0 && i < static_cast<int>(labels.size())) return labels[static_cast<std::size_t>(i)];
  return "series" + std::to_string(i + 1);
}

namespace {

void check_fit_preconditions(const DesignMatrix& dm, int rhs_rows) {
  const int n = dm.rows();
  const int m = dm.cols();
  if (rhs_rows != n)
    throw DataError("fit: series length " + std::to_string(rhs_rows) +
                    " does not match design rows " + std::to_string(n));
  if (n < m)
    throw NumericalError("underdetermined fit: n=" + std::to_string(n) + " samples for m=" +
                         std::to_string(m) + " basis functions (need n >= " +
                         std::to_string(m) + ")");
  if (dm.factorization()->rank_deficient())
    throw NumericalError("collinear design: column " +
                         std::to_string(dm.factorization()->weakest_column()) +
                         " is numerically dependent on the others");
}

void check_finite(const Matrix& y) {
  for (int i = 0; i < y.rows(); ++i)
    for (int j = 0; j < y.cols(); ++j)
      if (!std::isfinite(y(i, j)))
        throw DataError("non-finite value in batch at row " + std::to_string(i) +
                        ", series " + std::to_string(j));
}

CoefficientSet fit_matrix(const DesignMatrix& dm, const Matrix& y, FitMethod method) {
  check_finite(y);
  check_fit_preconditions(dm, y.rows());
  const int m = dm.cols();
  const int p = y.cols();

  CoefficientSet cs;
  cs.spec = dm.spec();
  cs.grid_id = dm.grid().id();
  cs.coeffs = Matrix(m, p);
  cs.residual_norms.assign(static_cast<std::size_t>(p), 0.0);
  if (dm.rows() < 2 * m)
    cs.warnings.push_back("n = " + std::to_string(dm.rows()) + " is below 2m = " +
                          std::to_string(2 * m) + "; coefficients may be noisy");

  if (method == FitMethod::Qr) {
    kernels::solve_batch(*dm.factorization(), dm.values(), y, cs.coeffs, cs.residual_norms);
  } else {
    for (int col = 0; col < p; ++col) {
      const std::vector<double> yc = y.column(col);
      const std::vector<double> x = solve_normal_equations(dm.values(), yc);
      cs.coeffs.set_column(col, x);
      double ss = 0.0;
      for (int i = 0; i < dm.rows(); ++i) {
        double fit = 0.0;
        for (int l = 0; l < m; ++l) fit += dm.values()(i, l) * x[static_cast<std::size_t>(l)];
        const double r = yc[static_cast<std::size_t>(i)] - fit;
        ss += r * r;
      }
      cs.residual_norms[static_cast<std::size_t>(col)] = ss;
    }
  }
  return cs;
}

} // namespace

CoefficientSet fit_single(const DesignMatrix& dm, std::span<const double> y, FitMethod method) {
  Matrix ym(static_cast<int>(y.size()), 1);
  for (int i = 0; i < ym.rows(); ++i) ym(i, 0) = y[static_cast<std::size_t>(i)];
  return fit_matrix(dm, ym, method);
}

CoefficientSet fit_batch(const DesignMatrix& dm, const SeriesBatch& batch, FitMethod method) {
  if (batch.samples() != dm.rows())
    throw DataError("fit_batch: batch has " + std::to_string(batch.samples()) +
                    " samples but design has " + std::to_string(dm.rows()) + " rows");
  return fit_matrix(dm, batch.values, method);
}

CoefficientSet project_continuous(const std::function<double(double)>& f, const BasisSpec& spec,
                                  const QuadratureRule& rule) {
  const int m = spec.function_count();
  CoefficientSet cs;
  cs.spec = spec;
  cs.grid_id = "continuous(" + std::to_string(rule.intervals) + " intervals)";
  cs.coeffs = Matrix(m, 1);

  auto safe_f = [&f](double t) {
    const double v = f(t);
    if (!std::isfinite(v))
      throw DataError("non-finite function value at t = " + std::to_string(t));
    return v;
  };

  double energy = integrate([&](double t) { const double v = safe_f(t); return v * v; }, rule);
  double coeff_energy = 0.0;
  for (int l = 0; l < m; ++l) {
    const double c =
        integrate([&](double t) { return safe_f(t) * eval_basis(spec, l, t); }, rule);
    cs.coeffs(l, 0) = c;
    coeff_energy += c * c;
  }
  cs.residual_norms.assign(1, std::max(0.0, energy - coeff_energy));
  return cs;
}

} // namespace csr

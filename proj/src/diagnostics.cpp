#include "csr/diagnostics.hpp"

#include <cmath>

#include "csr/transform.hpp"

namespace csr {

namespace {

FamilyGibbs fit_family(const BasisSpec& spec, const SeriesBatch& samples,
                       const SampleGrid& grid, double delta) {
  const Reconstruction rec = denoise(samples, grid, spec);
  FamilyGibbs fg;
  fg.family = spec.family;
  fg.function_count = spec.function_count();
  for (int j = 0; j < grid.size(); ++j) {
    const double t = grid.points[static_cast<std::size_t>(j)];
    const double err = std::abs(rec.values(j, 0) - samples.values(j, 0));
    if (t <= delta || t >= 1.0 - delta)
      fg.boundary_error = std::max(fg.boundary_error, err);
    else
      fg.interior_error = std::max(fg.interior_error, err);
  }
  return fg;
}

} // namespace

GibbsReport gibbs_compare(const std::function<double(double)>& signal, int k,
                          const SampleGrid& grid, double delta,
                          const std::string& signal_name) {
  if (!(delta > 0.0 && delta < 0.5))
    throw DataError("gibbs delta must lie in (0, 0.5)");
  if (k < 1) throw DataError("gibbs comparison needs degree k >= 1");
  if (grid.size() < 8 * k)
    throw NumericalError("grid under-resolved for gibbs comparison: n=" +
                         std::to_string(grid.size()) + " < 8k=" + std::to_string(8 * k));

  SeriesBatch samples;
  samples.values = Matrix(grid.size(), 1);
  for (int j = 0; j < grid.size(); ++j) {
    const double v = signal(grid.points[static_cast<std::size_t>(j)]);
    if (!std::isfinite(v))
      throw DataError("non-finite signal value at t = " +
                      std::to_string(grid.points[static_cast<std::size_t>(j)]));
    samples.values(j, 0) = v;
  }

  GibbsReport report;
  report.test_signal = signal_name;
  report.degree = k;
  report.delta = delta;
  report.cosine = fit_family({BasisFamily::Cosine, k}, samples, grid, delta);
  report.sine = fit_family({BasisFamily::Sine, k}, samples, grid, delta);
  report.fourier = fit_family({BasisFamily::FullFourier, k / 2}, samples, grid, delta);
  return report;
}

} // namespace csr

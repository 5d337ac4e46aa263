#include "csr/synth.hpp"

#include <cmath>

#include "csr/kernels.hpp"

namespace csr {

void NoiseModel::validate() const {
  const int m = spec.function_count();
  if (static_cast<int>(variances.size()) != m)
    throw DataError("noise model has " + std::to_string(variances.size()) +
                    " variances for " + std::to_string(m) + " basis functions");
  for (std::size_t l = 0; l < variances.size(); ++l)
    if (!(variances[l] >= 0.0) || !std::isfinite(variances[l]))
      throw DataError("negative or non-finite variance tau^2 at index " + std::to_string(l));
  if (!(residual_sigma >= 0.0) || !std::isfinite(residual_sigma))
    throw DataError("residual sigma must be non-negative and finite");
  if (correlation_factor) {
    if (correlation_factor->rows() != m || correlation_factor->cols() != m)
      throw DataError("correlation factor must be " + std::to_string(m) + "x" +
                      std::to_string(m));
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if ((*correlation_factor)(i, j) != 0.0)
          throw DataError("correlation factor must be lower triangular");
  }
}

SeriesBatch sample_noise(const NoiseModel& model, const SampleGrid& grid, int p) {
  model.validate();
  if (p < 1) throw DataError("sample_noise needs p >= 1 series");
  SeriesBatch batch;
  batch.values = Matrix(grid.size(), p);
  kernels::sample_noise(model, grid.points, batch.values);
  return batch;
}

SeriesBatch sample_observation(const std::function<double(double)>& mean,
                               const NoiseModel& model, const SampleGrid& grid, int p) {
  SeriesBatch batch = sample_noise(model, grid, p);
  const int n = grid.size();
  std::vector<double> mu(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double v = mean(grid.points[static_cast<std::size_t>(j)]);
    if (!std::isfinite(v))
      throw DataError("non-finite mean value at t = " +
                      std::to_string(grid.points[static_cast<std::size_t>(j)]));
    mu[static_cast<std::size_t>(j)] = v;
  }
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < p; ++i) batch.values(j, i) += mu[static_cast<std::size_t>(j)];
  return batch;
}

} // namespace csr

#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "csr/fit.hpp"
#include "csr/rng.hpp"

namespace csr {

// Forward noise model: eps(t) = Σ_l Z_l·psi_l(t) + e(t) with
// Z_l ~ N(0, tau_l²) and white e ~ N(0, residual_sigma²). Z are drawn
// independent unless a lower-triangular correlation factor L is supplied,
// in which case Z = diag(tau)·L·z with z standard normal (keep the rows of
// L unit-norm if tau should stay the marginal standard deviations).
struct NoiseModel {
  BasisSpec spec;
  std::vector<double> variances;   // tau_l², one per basis function
  double residual_sigma = 0.0;
  std::uint64_t seed = 0;
  std::optional<Matrix> correlation_factor;

  void validate() const; // throws DataError
};

// p independent series of the expansion noise on the grid. Deterministic
// given the seed; series i depends only on (seed, i), so any draw order
// gives identical values.
SeriesBatch sample_noise(const NoiseModel& model, const SampleGrid& grid, int p);

// mean(t_j) added to sample_noise output. Non-finite mean evaluations are
// DataErrors.
SeriesBatch sample_observation(const std::function<double(double)>& mean,
                               const NoiseModel& model, const SampleGrid& grid, int p);

} // namespace csr

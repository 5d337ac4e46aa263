#pragma once

#include <functional>
#include <string>

#include "csr/fit.hpp"

namespace csr {

struct FamilyGibbs {
  BasisFamily family = BasisFamily::Cosine;
  int function_count = 0;   // families are matched in size only within one
  double boundary_error = 0.0;
  double interior_error = 0.0;
};

// Boundary vs interior max-abs reconstruction error per family, quantifying
// the ringing a family shows on non-periodic signals.
struct GibbsReport {
  std::string test_signal;
  int degree = 0;
  double delta = 0.05;
  FamilyGibbs cosine, sine, fourier;
};

// Fit the signal with Cosine(k), Sine(k) and FullFourier(k/2) on the grid
// and report max-abs errors on [0,delta] ∪ [1-delta,1] vs (delta,1-delta).
// Requires delta in (0, 0.5) and a grid with at least 8k points.
GibbsReport gibbs_compare(const std::function<double(double)>& signal, int k,
                          const SampleGrid& grid, double delta,
                          const std::string& signal_name = "signal");

} // namespace csr

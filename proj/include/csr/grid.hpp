#pragma once

#include <string>
#include <vector>

namespace csr {

// Sample locations mapped affinely into [0,1]. points are strictly
// increasing with points.front() == 0 and points.back() == 1; the original
// timestamp range and the map that produced the points are retained so
// results can be reported in the caller's units.
struct SampleGrid {
  std::vector<double> points;
  double t_min = 0.0;
  double t_max = 1.0;
  double offset = 0.0; // point = timestamp * scale + offset
  double scale = 1.0;

  int size() const { return static_cast<int>(points.size()); }

  // Short provenance string used to tag coefficient sets.
  std::string id() const;
};

// Affine map t -> (t - t_min)/(t_max - t_min). Timestamps may arrive
// unsorted; duplicates or fewer than two points are DataErrors.
SampleGrid make_grid(std::vector<double> timestamps);

// n points at j/(n-1), j = 0..n-1; original range kept as [0, n-1] so the
// mapping reports sample indices.
SampleGrid uniform_grid(int n);

} // namespace csr

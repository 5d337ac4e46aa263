#include "csr/grid.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "csr/errors.hpp"

namespace csr {

std::string SampleGrid::id() const {
  std::ostringstream os;
  os << "grid(n=" << size() << ",range=[" << t_min << "," << t_max << "])";
  return os.str();
}

SampleGrid make_grid(std::vector<double> timestamps) {
  if (timestamps.size() < 2)
    throw DataError("grid needs at least 2 timestamps, got " +
                    std::to_string(timestamps.size()));
  for (double t : timestamps)
    if (!std::isfinite(t)) throw DataError("non-finite timestamp in grid");
  std::sort(timestamps.begin(), timestamps.end());
  for (std::size_t j = 1; j < timestamps.size(); ++j)
    if (timestamps[j] == timestamps[j - 1])
      throw DataError("degenerate grid: duplicate timestamp " +
                      std::to_string(timestamps[j]));

  SampleGrid grid;
  grid.t_min = timestamps.front();
  grid.t_max = timestamps.back();
  grid.scale = 1.0 / (grid.t_max - grid.t_min);
  grid.offset = -grid.t_min * grid.scale;
  grid.points.resize(timestamps.size());
  for (std::size_t j = 0; j < timestamps.size(); ++j)
    grid.points[j] = (timestamps[j] - grid.t_min) * grid.scale;
  grid.points.front() = 0.0; // pin endpoints against round-off
  grid.points.back() = 1.0;
  for (std::size_t j = 1; j < grid.points.size(); ++j)
    if (!(grid.points[j] > grid.points[j - 1]))
      throw DataError("degenerate grid: timestamps collapse under the affine map");
  return grid;
}

SampleGrid uniform_grid(int n) {
  if (n < 2) throw DataError("uniform grid needs n >= 2");
  std::vector<double> ts(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) ts[static_cast<std::size_t>(j)] = j;
  return make_grid(std::move(ts));
}

} // namespace csr

#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace csr {

// Splittable-stream scheme used by the synthesizer: stream i of a master
// seed gets its own engine seed via splitmix64, so streams can be drawn in
// any order (or in parallel) with identical results.
inline constexpr std::string_view kRngAlgorithm = "splitmix64+mt19937_64+box_muller";

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

inline std::uint64_t stream_seed(std::uint64_t master_seed, std::uint64_t stream) {
  return splitmix64(master_seed + 0x9E3779B97F4A7C15ull * (stream + 1));
}

// N(0,1) draws via Box–Muller on mt19937_64 uniforms. The transform is
// spelled out here (rather than std::normal_distribution) so the generated
// values are pinned to a named algorithm, not to a standard library.
class GaussianStream {
public:
  explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

  GaussianStream(std::uint64_t master_seed, std::uint64_t stream)
      : engine_(stream_seed(master_seed, stream)) {}

  double operator()() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    // u1 in (0,1], u2 in [0,1)
    const double u1 = 1.0 - uniform01();
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * 3.14159265358979323846 * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

private:
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

} // namespace csr

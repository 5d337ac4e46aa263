#include "csr/basis.hpp"

#include <cmath>
#include <numbers>

#include "csr/kernels.hpp"

namespace csr {

namespace {
constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);
} // namespace

std::string family_name(BasisFamily family) {
  switch (family) {
    case BasisFamily::Cosine: return "cosine";
    case BasisFamily::Sine: return "sine";
    case BasisFamily::FullFourier: return "fourier";
  }
  throw DataError("unknown basis family");
}

BasisFamily family_from_name(const std::string& name) {
  if (name == "cosine") return BasisFamily::Cosine;
  if (name == "sine") return BasisFamily::Sine;
  if (name == "fourier") return BasisFamily::FullFourier;
  throw DataError("unknown basis family '" + name + "' (expected cosine|sine|fourier)");
}

int BasisSpec::function_count() const {
  if (degree < 0) throw DataError("basis degree must be non-negative");
  switch (family) {
    case BasisFamily::Cosine: return degree + 1;
    case BasisFamily::Sine: return degree;
    case BasisFamily::FullFourier: return 2 * degree + 1;
  }
  throw DataError("unknown basis family");
}

int BasisSpec::frequency(int index) const {
  switch (family) {
    case BasisFamily::Cosine: return index;
    case BasisFamily::Sine: return index + 1;
    case BasisFamily::FullFourier: return 2 * ((index + 1) / 2);
  }
  throw DataError("unknown basis family");
}

double eval_basis(const BasisSpec& spec, int index, double t) {
  if (!(t >= 0.0 && t <= 1.0))
    throw DataError("basis evaluation point " + std::to_string(t) + " outside [0,1]");
  if (index < 0 || index >= spec.function_count())
    throw DataError("basis index " + std::to_string(index) + " out of range for " +
                    family_name(spec.family) + " degree " + std::to_string(spec.degree));
  switch (spec.family) {
    case BasisFamily::Cosine:
      return index == 0 ? 1.0 : kSqrt2 * std::cos(index * kPi * t);
    case BasisFamily::Sine:
      return kSqrt2 * std::sin((index + 1) * kPi * t);
    case BasisFamily::FullFourier: {
      if (index == 0) return 1.0;
      const int l = (index + 1) / 2;
      const double arg = 2.0 * l * kPi * t;
      return (index % 2 == 1) ? kSqrt2 * std::sin(arg) : kSqrt2 * std::cos(arg);
    }
  }
  throw DataError("unknown basis family");
}

double eigenvalue(int l) {
  if (l < 0) throw DataError("eigenvalue index must be non-negative");
  return static_cast<double>(l) * static_cast<double>(l) * kPi * kPi;
}

EigenPair eigenpair(const BasisSpec& spec, int index) {
  if (index < 0 || index >= spec.function_count())
    throw DataError("basis index " + std::to_string(index) + " out of range");
  int harmonic = 0;
  switch (spec.family) {
    case BasisFamily::Cosine: harmonic = index; break;
    case BasisFamily::Sine: harmonic = index + 1; break;
    case BasisFamily::FullFourier: harmonic = (index + 1) / 2; break;
  }
  const int freq = spec.frequency(index);
  return EigenPair{index, eigenvalue(freq), spec.family, harmonic};
}

double integrate(const std::function<double(double)>& f, const QuadratureRule& rule) {
  if (rule.intervals <= 0)
    throw DataError("quadrature needs a positive interval count");
  const int n = rule.intervals;
  const double h = 1.0 / n;
  switch (rule.kind) {
    case QuadratureRule::Kind::Simpson: {
      if (n % 2 != 0)
        throw DataError("composite Simpson needs an even interval count");
      double odd = 0.0, even = 0.0;
      for (int j = 1; j < n; j += 2) odd += f(j * h);
      for (int j = 2; j < n; j += 2) even += f(j * h);
      return (h / 3.0) * (f(0.0) + 4.0 * odd + 2.0 * even + f(1.0));
    }
    case QuadratureRule::Kind::Trapezoid: {
      double sum = 0.5 * (f(0.0) + f(1.0));
      for (int j = 1; j < n; ++j) sum += f(j * h);
      return h * sum;
    }
  }
  throw DataError("unknown quadrature kind");
}

Matrix gram_matrix(const BasisSpec& spec, const QuadratureRule& rule) {
  const int m = spec.function_count();
  int max_freq = 0;
  for (int i = 0; i < m; ++i) max_freq = std::max(max_freq, spec.frequency(i));
  if (rule.nodes() < 4 * max_freq)
    throw NumericalError("quadrature under-resolved: " + std::to_string(rule.nodes()) +
                         " nodes for max frequency " + std::to_string(max_freq) +
                         " (need at least " + std::to_string(4 * max_freq) + ")");
  Matrix out(m, m);
  kernels::gram(spec, rule, out);
  return out;
}

} // namespace csr

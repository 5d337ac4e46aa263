#pragma once

#include <functional>
#include <string>

#include "csr/matrix.hpp"

namespace csr {

// Orthonormal eigenfunction families of d²/dt² on [0,1].
//
//   Cosine:      psi_0 = 1, psi_l(t) = sqrt(2)·cos(l·pi·t), l = 1..k
//   Sine:        psi_l(t) = sqrt(2)·sin(l·pi·t), l = 1..k (no constant term)
//   FullFourier: slot 0 = 1, slot 2l-1 = sqrt(2)·sin(2l·pi·t),
//                slot 2l = sqrt(2)·cos(2l·pi·t), l = 1..k
//
// The full-Fourier family uses whole periods of [0,1] so that the combined
// set is orthonormal; half-period sines and cosines mixed together are not.
enum class BasisFamily { Cosine, Sine, FullFourier };

std::string family_name(BasisFamily family);
BasisFamily family_from_name(const std::string& name); // throws DataError

struct BasisSpec {
  BasisFamily family = BasisFamily::Cosine;
  int degree = 0; // k >= 0

  // Number of basis functions: k+1 (cosine), k (sine), 2k+1 (full Fourier).
  int function_count() const;

  // Frequency of a slot as an integer multiple of pi. Cosine/sine slot with
  // harmonic l has frequency l; full-Fourier harmonic l has frequency 2l.
  int frequency(int index) const;

  friend bool operator==(const BasisSpec&, const BasisSpec&) = default;
};

struct EigenPair {
  int index = 0;          // slot within the family
  double lambda = 0.0;    // eigenvalue of -d²/dt² for this slot
  BasisFamily family = BasisFamily::Cosine;
  int harmonic = 0;       // l in the closed forms above
};

// psi_index(t). Throws DataError for t outside [0,1] or index outside the
// spec's valid range.
double eval_basis(const BasisSpec& spec, int index, double t);

// lambda_l = l²·pi² for the half-period families.
double eigenvalue(int l);

// Eigenvalue and identity of one slot; lambda matches eval_basis, i.e.
// psi'' + lambda·psi = 0 holds for the closed form the slot evaluates.
EigenPair eigenpair(const BasisSpec& spec, int index);

struct QuadratureRule {
  enum class Kind { Simpson, Trapezoid };
  Kind kind = Kind::Simpson;
  int intervals = 4096;

  int nodes() const { return intervals + 1; }
};

// Composite quadrature of f over [0,1]. Simpson requires an even, positive
// interval count; trapezoid any positive count.
double integrate(const std::function<double(double)>& f, const QuadratureRule& rule);

// Matrix of pairwise inner products <psi_l, psi_m> under the given rule.
// Verification tool, not a fitting path. Throws NumericalError when the rule
// has fewer than 4·(max frequency) nodes (checked up front, not by value).
Matrix gram_matrix(const BasisSpec& spec, const QuadratureRule& rule = {});

} // namespace csr

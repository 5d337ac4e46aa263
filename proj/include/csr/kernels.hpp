#pragma once

#include <span>
#include <vector>

#include "csr/basis.hpp"
#include "csr/matrix.hpp"
#include "csr/qr.hpp"
#include "csr/synth.hpp"

namespace csr::kernels {

// Hot loops of the library in two flavors: the OpenMP versions below
// partition work across rows / columns / pairs / series while every unit of
// work runs the same sequential inner code as the serial reference, so the
// two flavors produce bitwise-identical results (asserted in the tests).
// The serial namespace is the reference implementation and the baseline of
// the benchmark target.

namespace serial {

// out(j, l) = psi_l(points[j]); out must be pre-sized n×m.
void eval_design(const BasisSpec& spec, std::span<const double> points, Matrix& out);

// out = a·b; shapes must agree, out pre-sized.
void matmul(const Matrix& a, const Matrix& b, Matrix& out);

// out = y − a·c (the residual matrix), shapes n×p, n×m, m×p.
void residual(const Matrix& y, const Matrix& a, const Matrix& c, Matrix& out);

// Per-column least squares against one shared factorization:
// coeffs(:,i) = argmin ‖a·x − y_i‖, rss[i] = ‖a·x − y_i‖².
void solve_batch(const QrFactorization& qr, const Matrix& a, const Matrix& y,
                 Matrix& coeffs, std::vector<double>& rss);

// Pairwise quadrature inner products of the basis under the rule.
void gram(const BasisSpec& spec, const QuadratureRule& rule, Matrix& out);

// Column i of out = one noise series drawn from stream (model.seed, i).
void sample_noise(const NoiseModel& model, std::span<const double> points, Matrix& out);

} // namespace serial

void eval_design(const BasisSpec& spec, std::span<const double> points, Matrix& out);
void matmul(const Matrix& a, const Matrix& b, Matrix& out);
void residual(const Matrix& y, const Matrix& a, const Matrix& c, Matrix& out);
void solve_batch(const QrFactorization& qr, const Matrix& a, const Matrix& y,
                 Matrix& coeffs, std::vector<double>& rss);
void gram(const BasisSpec& spec, const QuadratureRule& rule, Matrix& out);
void sample_noise(const NoiseModel& model, std::span<const double> points, Matrix& out);

} // namespace csr::kernels

#pragma once

#include <span>
#include <vector>

#include "csr/matrix.hpp"

namespace csr {

// Householder QR of a tall matrix A (n >= m), A = Q·R. Reflectors are kept
// in LAPACK-style packed form: R on and above the diagonal, Householder
// vectors below it, with the implicit leading 1 per reflector.
//
// This is the one factorization the library solves least squares through;
// it is computed once per design matrix and shared, read-only, by every
// column solve.
class QrFactorization {
public:
  QrFactorization() = default;
  explicit QrFactorization(const Matrix& a);

  int rows() const { return qr_.rows(); }
  int cols() const { return qr_.cols(); }

  // y := Qᵀ·y (length n), applying reflectors 0..m-1 in order.
  void apply_qt(std::span<double> y) const;

  // y := Q·y (length n), reflectors in reverse order.
  void apply_q(std::span<double> y) const;

  // Back-substitute R·x = z using the first m entries of z.
  // Throws NumericalError naming the offending column when R is singular.
  void solve_upper(std::span<const double> z, std::span<double> x) const;

  // Least-squares solve min ‖A·x − y‖ for one right-hand side.
  std::vector<double> solve(std::span<const double> y) const;

  // Thin Q (n×m) with the sign convention diag(R) > 0.
  Matrix thin_q() const;

  // R (m×m upper triangular), same sign convention as thin_q().
  Matrix r() const;

  // Column index with the relatively smallest |R_jj|, and rank status under
  // the tolerance min|R_jj| <= tol·max|R_jj|.
  bool rank_deficient(double rel_tol = 1e-10) const;
  int weakest_column() const { return weakest_column_; }

private:
  Matrix qr_;
  std::vector<double> tau_;
  std::vector<double> rdiag_;   // R diagonal before sign fixing
  int weakest_column_ = 0;
};

// Cholesky solve of the normal equations (AᵀA)·x = Aᵀy. Retained as the
// textbook route for comparison with the QR path; not used by default.
std::vector<double> solve_normal_equations(const Matrix& a, std::span<const double> y);

} // namespace csr

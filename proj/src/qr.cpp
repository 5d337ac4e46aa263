#include "csr/qr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace csr {

QrFactorization::QrFactorization(const Matrix& a) : qr_(a) {
  const int n = qr_.rows();
  const int m = qr_.cols();
  if (n < m) throw NumericalError("QR of a wide matrix is not supported");
  tau_.assign(static_cast<std::size_t>(m), 0.0);
  rdiag_.assign(static_cast<std::size_t>(m), 0.0);

  for (int j = 0; j < m; ++j) {
    // Householder vector for column j below the diagonal.
    double norm = 0.0;
    for (int i = j; i < n; ++i) norm = std::hypot(norm, qr_(i, j));
    if (norm == 0.0) {
      // Zero column: reflector is the identity, R_jj = 0.
      tau_[static_cast<std::size_t>(j)] = 0.0;
      rdiag_[static_cast<std::size_t>(j)] = 0.0;
      continue;
    }
    const double alpha = qr_(j, j) >= 0.0 ? -norm : norm;
    const double u0 = qr_(j, j) - alpha;
    for (int i = j + 1; i < n; ++i) qr_(i, j) /= u0;
    tau_[static_cast<std::size_t>(j)] = -u0 / alpha;
    qr_(j, j) = alpha;
    rdiag_[static_cast<std::size_t>(j)] = alpha;

    // Apply (I - tau·v·vᵀ) to the trailing columns.
    const double tau = tau_[static_cast<std::size_t>(j)];
    for (int c = j + 1; c < m; ++c) {
      double dot = qr_(j, c);
      for (int i = j + 1; i < n; ++i) dot += qr_(i, j) * qr_(i, c);
      dot *= tau;
      qr_(j, c) -= dot;
      for (int i = j + 1; i < n; ++i) qr_(i, c) -= qr_(i, j) * dot;
    }
  }

  double max_diag = 0.0;
  double min_ratio = std::numeric_limits<double>::infinity();
  for (int j = 0; j < m; ++j) max_diag = std::max(max_diag, std::abs(rdiag_[static_cast<std::size_t>(j)]));
  for (int j = 0; j < m; ++j) {
    const double r = max_diag == 0.0 ? 0.0 : std::abs(rdiag_[static_cast<std::size_t>(j)]) / max_diag;
    if (r < min_ratio) {
      min_ratio = r;
      weakest_column_ = j;
    }
  }
}

bool QrFactorization::rank_deficient(double rel_tol) const {
  const int m = cols();
  if (m == 0) return false;
  double max_diag = 0.0;
  for (double d : rdiag_) max_diag = std::max(max_diag, std::abs(d));
  if (max_diag == 0.0) return true;
  return std::abs(rdiag_[static_cast<std::size_t>(weakest_column_)]) <= rel_tol * max_diag;
}

void QrFactorization::apply_qt(std::span<double> y) const {
  const int n = rows();
  const int m = cols();
  for (int j = 0; j < m; ++j) {
    const double tau = tau_[static_cast<std::size_t>(j)];
    if (tau == 0.0) continue;
    double dot = y[static_cast<std::size_t>(j)];
    for (int i = j + 1; i < n; ++i) dot += qr_(i, j) * y[static_cast<std::size_t>(i)];
    dot *= tau;
    y[static_cast<std::size_t>(j)] -= dot;
    for (int i = j + 1; i < n; ++i) y[static_cast<std::size_t>(i)] -= qr_(i, j) * dot;
  }
}

void QrFactorization::apply_q(std::span<double> y) const {
  const int n = rows();
  const int m = cols();
  for (int j = m - 1; j >= 0; --j) {
    const double tau = tau_[static_cast<std::size_t>(j)];
    if (tau == 0.0) continue;
    double dot = y[static_cast<std::size_t>(j)];
    for (int i = j + 1; i < n; ++i) dot += qr_(i, j) * y[static_cast<std::size_t>(i)];
    dot *= tau;
    y[static_cast<std::size_t>(j)] -= dot;
    for (int i = j + 1; i < n; ++i) y[static_cast<std::size_t>(i)] -= qr_(i, j) * dot;
  }
}

void QrFactorization::solve_upper(std::span<const double> z, std::span<double> x) const {
  const int m = cols();
  if (rank_deficient())
    throw NumericalError("collinear design: column " + std::to_string(weakest_column_) +
                         " is numerically dependent on the others");
  for (int i = m - 1; i >= 0; --i) {
    double v = z[static_cast<std::size_t>(i)];
    for (int c = i + 1; c < m; ++c) v -= qr_(i, c) * x[static_cast<std::size_t>(c)];
    x[static_cast<std::size_t>(i)] = v / qr_(i, i);
  }
}

std::vector<double> QrFactorization::solve(std::span<const double> y) const {
  const int n = rows();
  const int m = cols();
  if (static_cast<int>(y.size()) != n) throw DataError("QR solve: right-hand side length mismatch");
  std::vector<double> z(y.begin(), y.end());
  apply_qt(z);
  std::vector<double> x(static_cast<std::size_t>(m));
  solve_upper(z, x);
  return x;
}

Matrix QrFactorization::thin_q() const {
  const int n = rows();
  const int m = cols();
  Matrix q(n, m);
  std::vector<double> e(static_cast<std::size_t>(n));
  for (int c = 0; c < m; ++c) {
    std::fill(e.begin(), e.end(), 0.0);
    e[static_cast<std::size_t>(c)] = 1.0;
    apply_q(e);
    // Flip so the corresponding R diagonal is positive.
    const double sign = rdiag_[static_cast<std::size_t>(c)] < 0.0 ? -1.0 : 1.0;
    for (int i = 0; i < n; ++i) q(i, c) = sign * e[static_cast<std::size_t>(i)];
  }
  return q;
}

Matrix QrFactorization::r() const {
  const int m = cols();
  Matrix r(m, m);
  for (int i = 0; i < m; ++i) {
    const double sign = rdiag_[static_cast<std::size_t>(i)] < 0.0 ? -1.0 : 1.0;
    for (int j = i; j < m; ++j) r(i, j) = sign * qr_(i, j);
  }
  return r;
}

std::vector<double> solve_normal_equations(const Matrix& a, std::span<const double> y) {
  const int n = a.rows();
  const int m = a.cols();
  if (static_cast<int>(y.size()) != n)
    throw DataError("normal equations: right-hand side length mismatch");

  // G = AᵀA, b = Aᵀy.
  Matrix g(m, m);
  std::vector<double> b(static_cast<std::size_t>(m), 0.0);
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      double s = 0.0;
      for (int r = 0; r < n; ++r) s += a(r, i) * a(r, j);
      g(i, j) = s;
      g(j, i) = s;
    }
    double s = 0.0;
    for (int r = 0; r < n; ++r) s += a(r, i) * y[static_cast<std::size_t>(r)];
    b[static_cast<std::size_t>(i)] = s;
  }

  // Cholesky G = L·Lᵀ.
  Matrix l(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = g(i, j);
      for (int c = 0; c < j; ++c) s -= l(i, c) * l(j, c);
      if (i == j) {
        if (s <= 0.0)
          throw NumericalError("normal equations not positive definite (collinear design, column " +
                               std::to_string(i) + ")");
        l(i, i) = std::sqrt(s);
      } else {
        l(i, j) = s / l(j, j);
      }
    }
  }

  // Forward then back substitution.
  std::vector<double> x(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    double s = b[static_cast<std::size_t>(i)];
    for (int c = 0; c < i; ++c) s -= l(i, c) * x[static_cast<std::size_t>(c)];
    x[static_cast<std::size_t>(i)] = s / l(i, i);
  }
  for (int i = m - 1; i >= 0; --i) {
    double s = x[static_cast<std::size_t>(i)];
    for (int c = i + 1; c < m; ++c) s -= l(c, i) * x[static_cast<std::size_t>(c)];
    x[static_cast<std::size_t>(i)] = s / l(i, i);
  }
  return x;
}

} // namespace csr

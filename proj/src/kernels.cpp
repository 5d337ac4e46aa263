#include "csr/kernels.hpp"

#include <cmath>

#include "csr/parallel.hpp"

namespace csr::kernels {

// Work units shared by both flavors. Each unit touches a disjoint slice of
// the output and accumulates in a fixed order, which is what makes the
// OpenMP loops bitwise-equal to the serial reference.
namespace {

void eval_design_row(const BasisSpec& spec, double t, double* row, int m) {
  for (int l = 0; l < m; ++l) row[l] = eval_basis(spec, l, t);
}

void matmul_row(const Matrix& a, const Matrix& b, Matrix& out, int i) {
  const int k = a.cols();
  const int p = b.cols();
  for (int j = 0; j < p; ++j) {
    double s = 0.0;
    for (int c = 0; c < k; ++c) s += a(i, c) * b(c, j);
    out(i, j) = s;
  }
}

void residual_row(const Matrix& y, const Matrix& a, const Matrix& c, Matrix& out, int i) {
  const int k = a.cols();
  const int p = c.cols();
  for (int j = 0; j < p; ++j) {
    double s = 0.0;
    for (int r = 0; r < k; ++r) s += a(i, r) * c(r, j);
    out(i, j) = y(i, j) - s;
  }
}

void solve_column(const QrFactorization& qr, const Matrix& a, const Matrix& y,
                  Matrix& coeffs, std::vector<double>& rss, int col) {
  const int n = qr.rows();
  const int m = qr.cols();
  std::vector<double> work(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) work[static_cast<std::size_t>(i)] = y(i, col);
  qr.apply_qt(work);
  std::vector<double> x(static_cast<std::size_t>(m));
  qr.solve_upper(work, x);
  for (int l = 0; l < m; ++l) coeffs(l, col) = x[static_cast<std::size_t>(l)];
  // Residual sum of squares recomputed against the actual design so the
  // identity with the residuals() matrix is exact, not up to Q's round-off.
  double ss = 0.0;
  for (int i = 0; i < n; ++i) {
    double fit = 0.0;
    for (int l = 0; l < m; ++l) fit += a(i, l) * x[static_cast<std::size_t>(l)];
    const double r = y(i, col) - fit;
    ss += r * r;
  }
  rss[static_cast<std::size_t>(col)] = ss;
}

double gram_entry(const BasisSpec& spec, const QuadratureRule& rule, int l, int m) {
  return integrate([&](double t) { return eval_basis(spec, l, t) * eval_basis(spec, m, t); },
                   rule);
}

void sample_series(const NoiseModel& model, std::span<const double> points, Matrix& out,
                   int series) {
  const int m = model.spec.function_count();
  const int n = static_cast<int>(points.size());
  GaussianStream gauss(model.seed, static_cast<std::uint64_t>(series));

  std::vector<double> z(static_cast<std::size_t>(m));
  for (int l = 0; l < m; ++l) z[static_cast<std::size_t>(l)] = gauss();
  std::vector<double> amp(static_cast<std::size_t>(m));
  if (model.correlation_factor) {
    const Matrix& lfac = *model.correlation_factor;
    for (int l = 0; l < m; ++l) {
      double s = 0.0;
      for (int c = 0; c <= l; ++c) s += lfac(l, c) * z[static_cast<std::size_t>(c)];
      amp[static_cast<std::size_t>(l)] =
          std::sqrt(model.variances[static_cast<std::size_t>(l)]) * s;
    }
  } else {
    for (int l = 0; l < m; ++l)
      amp[static_cast<std::size_t>(l)] =
          std::sqrt(model.variances[static_cast<std::size_t>(l)]) * z[static_cast<std::size_t>(l)];
  }

  for (int j = 0; j < n; ++j) {
    double v = 0.0;
    for (int l = 0; l < m; ++l)
      v += amp[static_cast<std::size_t>(l)] * eval_basis(model.spec, l, points[static_cast<std::size_t>(j)]);
    if (model.residual_sigma > 0.0) v += model.residual_sigma * gauss();
    out(j, series) = v;
  }
}

} // namespace

namespace serial {

void eval_design(const BasisSpec& spec, std::span<const double> points, Matrix& out) {
  const int m = spec.function_count();
  if (m == 0) return;
  for (int j = 0; j < static_cast<int>(points.size()); ++j)
    eval_design_row(spec, points[static_cast<std::size_t>(j)], &out(j, 0), m);
}

void matmul(const Matrix& a, const Matrix& b, Matrix& out) {
  for (int i = 0; i < a.rows(); ++i) matmul_row(a, b, out, i);
}

void residual(const Matrix& y, const Matrix& a, const Matrix& c, Matrix& out) {
  for (int i = 0; i < y.rows(); ++i) residual_row(y, a, c, out, i);
}

void solve_batch(const QrFactorization& qr, const Matrix& a, const Matrix& y,
                 Matrix& coeffs, std::vector<double>& rss) {
  for (int col = 0; col < y.cols(); ++col) solve_column(qr, a, y, coeffs, rss, col);
}

void gram(const BasisSpec& spec, const QuadratureRule& rule, Matrix& out) {
  const int m = spec.function_count();
  for (int l = 0; l < m; ++l)
    for (int c = l; c < m; ++c) {
      const double v = gram_entry(spec, rule, l, c);
      out(l, c) = v;
      out(c, l) = v;
    }
}

void sample_noise(const NoiseModel& model, std::span<const double> points, Matrix& out) {
  for (int i = 0; i < out.cols(); ++i) sample_series(model, points, out, i);
}

} // namespace serial

void eval_design(const BasisSpec& spec, std::span<const double> points, Matrix& out) {
  const int m = spec.function_count();
  if (m == 0) return;
  const int n = static_cast<int>(points.size());
  const int nt = worker_threads();
#pragma omp parallel for num_threads(nt) schedule(static)
  for (int j = 0; j < n; ++j)
    eval_design_row(spec, points[static_cast<std::size_t>(j)], &out(j, 0), m);
}

void matmul(const Matrix& a, const Matrix& b, Matrix& out) {
  const int n = a.rows();
  const int nt = worker_threads();
#pragma omp parallel for num_threads(nt) schedule(static)
  for (int i = 0; i < n; ++i) matmul_row(a, b, out, i);
}

void residual(const Matrix& y, const Matrix& a, const Matrix& c, Matrix& out) {
  const int n = y.rows();
  const int nt = worker_threads();
#pragma omp parallel for num_threads(nt) schedule(static)
  for (int i = 0; i < n; ++i) residual_row(y, a, c, out, i);
}

void solve_batch(const QrFactorization& qr, const Matrix& a, const Matrix& y,
                 Matrix& coeffs, std::vector<double>& rss) {
  const int p = y.cols();
  const int nt = worker_threads();
#pragma omp parallel for num_threads(nt) schedule(static)
  for (int col = 0; col < p; ++col) solve_column(qr, a, y, coeffs, rss, col);
}

void gram(const BasisSpec& spec, const QuadratureRule& rule, Matrix& out) {
  const int m = spec.function_count();
  // Flatten the upper triangle so the pair loop balances.
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(m) * (m + 1) / 2);
  for (int l = 0; l < m; ++l)
    for (int c = l; c < m; ++c) pairs.emplace_back(l, c);
  const int npairs = static_cast<int>(pairs.size());
  const int nt = worker_threads();
#pragma omp parallel for num_threads(nt) schedule(static)
  for (int i = 0; i < npairs; ++i) {
    const auto [l, c] = pairs[static_cast<std::size_t>(i)];
    const double v = gram_entry(spec, rule, l, c);
    out(l, c) = v;
    out(c, l) = v;
  }
}

void sample_noise(const NoiseModel& model, std::span<const double> points, Matrix& out) {
  const int p = out.cols();
  const int nt = worker_threads();
#pragma omp parallel for num_threads(nt) schedule(static)
  for (int i = 0; i < p; ++i) sample_series(model, points, out, i);
}

} // namespace csr::kernels

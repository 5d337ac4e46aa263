#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "csr/errors.hpp"

namespace csr {

// Dense row-major matrix of doubles. Value semantics, no views into
// foreign storage; this library only needs tall-skinny and small square
// matrices, so the container stays deliberately minimal.
class Matrix {
public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {
    if (rows < 0 || cols < 0) throw DataError("matrix dimensions must be non-negative");
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  double& operator()(int i, int j) { return data_[idx(i, j)]; }
  double operator()(int i, int j) const { return data_[idx(i, j)]; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  std::span<double> row(int i) { return {data_.data() + idx(i, 0), static_cast<std::size_t>(cols_)}; }
  std::span<const double> row(int i) const {
    return {data_.data() + idx(i, 0), static_cast<std::size_t>(cols_)};
  }

  std::vector<double> column(int j) const {
    std::vector<double> out(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) out[static_cast<std::size_t>(i)] = (*this)(i, j);
    return out;
  }

  void set_column(int j, std::span<const double> v) {
    for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[static_cast<std::size_t>(i)];
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

// Largest |a_ij - b_ij|; matrices must have equal shape.
double max_abs_diff(const Matrix& a, const Matrix& b);

// Largest |a_ij|.
double max_abs(const Matrix& a);

} // namespace csr

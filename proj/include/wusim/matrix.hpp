#pragma once

#include <cstddef>
#include <vector>

namespace wusim {

// Dense column-major matrix of doubles; column j is contiguous, which is the
// access pattern of every per-time-step loop in the project.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0.0) {}

  double& at(int r, int c) { return a[static_cast<std::size_t>(c) * rows + r]; }
  double at(int r, int c) const { return a[static_cast<std::size_t>(c) * rows + r]; }
  double* col(int c) { return a.data() + static_cast<std::size_t>(c) * rows; }
  const double* col(int c) const { return a.data() + static_cast<std::size_t>(c) * rows; }

  bool operator==(const Matrix& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

}  // namespace wusim

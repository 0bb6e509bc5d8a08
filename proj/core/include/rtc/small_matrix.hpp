#pragma once

#include <cstddef>
#include <vector>

#include "rtc/errors.hpp"

namespace rtc {

/// Dense row-major matrix for the small (<= 8x8) moment systems.
class SmallMatrix {
public:
  SmallMatrix() = default;
  SmallMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, 0.0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  double at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  /// Copy with row r and column c removed.
  SmallMatrix minor_matrix(int r, int c) const;

  /// Largest absolute entry (0 for an empty matrix).
  double max_abs() const;

private:
  int rows_ = 0, cols_ = 0;
  std::vector<double> a_;
};

/// Determinant by LU with partial pivoting. If min_pivot is given it receives the
/// smallest absolute pivot encountered (0 for a singular factorization).
double lu_determinant(SmallMatrix m, double* min_pivot = nullptr);

/// (-1)^{row+col} * det(minor): the algebraic complement of entry (row, col).
double cofactor(const SmallMatrix& m, int row, int col);

/// Solve A x = b by LU with partial pivoting; throws SingularSystem on zero pivot.
std::vector<double> lu_solve(SmallMatrix a, std::vector<double> b);

}  // namespace rtc

#include "rtc/small_matrix.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace rtc {

SmallMatrix SmallMatrix::minor_matrix(int r, int c) const {
  SmallMatrix m(rows_ - 1, cols_ - 1);
  for (int i = 0, mi = 0; i < rows_; ++i) {
    if (i == r) continue;
    for (int j = 0, mj = 0; j < cols_; ++j) {
      if (j == c) continue;
      m.at(mi, mj++) = at(i, j);
    }
    ++mi;
  }
  return m;
}

double SmallMatrix::max_abs() const {
  double m = 0.0;
  for (double v : a_) m = std::max(m, std::abs(v));
  return m;
}

double lu_determinant(SmallMatrix m, double* min_pivot) {
  const int n = m.rows();
  if (n != m.cols()) throw DomainError("lu_determinant: matrix must be square");
  if (min_pivot) *min_pivot = std::numeric_limits<double>::infinity();
  if (n == 0) {
    if (min_pivot) *min_pivot = 0.0;
    return 1.0;  // empty minor convention
  }
  double det = 1.0;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(m.at(i, k)) > std::abs(m.at(piv, k))) piv = i;
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
      det = -det;
    }
    const double p = m.at(k, k);
    if (min_pivot) *min_pivot = std::min(*min_pivot, std::abs(p));
    if (p == 0.0) return 0.0;
    det *= p;
    for (int i = k + 1; i < n; ++i) {
      const double f = m.at(i, k) / p;
      for (int j = k + 1; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
    }
  }
  return det;
}

double cofactor(const SmallMatrix& m, int row, int col) {
  if (m.rows() != m.cols()) throw DomainError("cofactor: matrix must be square");
  if (row < 0 || row >= m.rows() || col < 0 || col >= m.cols())
    throw DomainError("cofactor: index out of range");
  const double sign = ((row + col) % 2 == 0) ? 1.0 : -1.0;
  return sign * lu_determinant(m.minor_matrix(row, col));
}

std::vector<double> lu_solve(SmallMatrix a, std::vector<double> b) {
  const int n = a.rows();
  if (n != a.cols() || static_cast<int>(b.size()) != n)
    throw DomainError("lu_solve: shape mismatch");
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(a.at(i, k)) > std::abs(a.at(piv, k))) piv = i;
    if (a.at(piv, k) == 0.0) throw SingularSystem("lu_solve: singular matrix");
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
      std::swap(b[k], b[piv]);
    }
    for (int i = k + 1; i < n; ++i) {
      const double f = a.at(i, k) / a.at(k, k);
      for (int j = k + 1; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
      b[i] -= f * b[k];
    }
  }
  for (int i = n - 1; i >= 0; --i) {
    double s = b[i];
    for (int j = i + 1; j < n; ++j) s -= a.at(i, j) * b[j];
    b[i] = s / a.at(i, i);
  }
  return b;
}

}  // namespace rtc

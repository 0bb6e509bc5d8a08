#pragma once

// Test-only reference implementations, kept deliberately independent of the
// library's evaluation paths.

#include <cmath>
#include <functional>
#include <vector>

namespace testoracle {

// plain adaptive Simpson with interval halving
inline double simpson_step(const std::function<double(double)>& f, double a, double b, double fa,
                           double fm, double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return simpson_step(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

inline double integrate_simpson(const std::function<double(double)>& f, double a, double b,
                                double tol = 1e-13, int depth = 28) {
  // fixed 16-panel start so narrow features are seen, then adaptive within panels;
  // absolute tolerance taken from a coarse magnitude scan
  double scale = 0.0;
  for (int i = 0; i <= 64; ++i) scale += std::abs(f(a + (b - a) * i / 64.0));
  scale *= (b - a) / 64.0;
  const double tol_abs = tol * std::max(scale, 1e-300) / 16.0;
  double total = 0.0;
  for (int p = 0; p < 16; ++p) {
    const double pa = a + (b - a) * p / 16.0;
    const double pb = a + (b - a) * (p + 1) / 16.0;
    const double m = 0.5 * (pa + pb);
    const double fa = f(pa), fm = f(m), fb = f(pb);
    const double whole = (pb - pa) / 6.0 * (fa + 4.0 * fm + fb);
    total += simpson_step(f, pa, pb, fa, fm, fb, whole, tol_abs, depth);
  }
  return total;
}

// determinant by cofactor (Laplace) expansion along the first row
inline double laplace_det(const std::vector<std::vector<double>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  double det = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<double>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<double> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    det += sign * m[0][j] * laplace_det(minor);
  }
  return det;
}

}  // namespace testoracle

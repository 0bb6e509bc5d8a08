#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "rtc/errors.hpp"

namespace rtc {

/// Knobs for the adaptive Gauss-Kronrod integrator and the integral truncation rules.
struct QuadratureConfig {
  double rel_tol = 1e-10;       // target relative error
  double abs_floor = 1e-300;    // underflow guard / absolute floor for near-zero results
  double s_cut_decades = 40.0;  // truncate once the integrand has decayed this many decades
  int max_subdivisions = 400;

  void validate() const {
    if (!(rel_tol > 0.0) || rel_tol > 1e-3)
      throw DomainError("QuadratureConfig: rel_tol must be in (0, 1e-3]");
    if (!(abs_floor > 0.0))
      throw DomainError("QuadratureConfig: abs_floor must be positive");
    if (!(s_cut_decades > 0.0))
      throw DomainError("QuadratureConfig: s_cut_decades must be positive");
    if (max_subdivisions < 8)
      throw DomainError("QuadratureConfig: max_subdivisions must be >= 8");
  }
};

struct QuadResult {
  double value = 0.0;
  double est_error = 0.0;
};

namespace detail {

// 7-point Gauss / 15-point Kronrod pair on [-1, 1].
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.0,
    0.2077849550078985,
    0.4058451513773972,
    0.5860872354676911,
    0.7415311855993944,
    0.8648644233597691,
    0.9491079123427585,
    0.9914553711208126,
};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.2094821410847278,
    0.2044329400752989,
    0.1903505780647854,
    0.1690047266392679,
    0.1406532597155259,
    0.1047900103222502,
    0.0630920926299786,
    0.0229353220105292,
};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.4179591836734694,  // node 0
    0.3818300505051189,  // node +-kKronrodNodes[2]
    0.2797053914892767,  // node +-kKronrodNodes[4]
    0.1294849661688697,  // node +-kKronrodNodes[6]
};

template <class F>
QuadResult gauss_kronrod_15(F&& f, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  const double f0 = f(mid);
  double kronrod = kKronrodWeights[0] * f0;
  double gauss = kGaussWeights[0] * f0;
  for (int i = 1; i < 8; ++i) {
    const double dx = half * kKronrodNodes[i];
    const double s = f(mid + dx) + f(mid - dx);
    kronrod += kKronrodWeights[i] * s;
    if ((i & 1) == 0) gauss += kGaussWeights[i / 2] * s;
  }
  QuadResult r;
  r.value = kronrod * half;
  r.est_error = std::abs((kronrod - gauss) * half);
  return r;
}

struct Interval {
  double value, err, a, b;
  bool operator<(const Interval& o) const { return err < o.err; }
};

}  // namespace detail

/// Adaptive Gauss-Kronrod on [a, b]: bisects the worst interval until the summed
/// error estimate meets max(rel_tol * |integral|, abs_floor).
template <class F>
QuadResult integrate_adaptive(F&& f, double a, double b, double rel_tol, double abs_floor,
                              int max_subdivisions) {
  if (!(b > a)) return {0.0, 0.0};
  std::vector<detail::Interval> heap;
  heap.reserve(static_cast<std::size_t>(max_subdivisions) + 2);
  auto first = detail::gauss_kronrod_15(f, a, b);
  heap.push_back({first.value, first.est_error, a, b});

  double total = first.value;
  double total_err = first.est_error;
  for (int iter = 0; iter < max_subdivisions; ++iter) {
    if (total_err <= std::max(rel_tol * std::abs(total), abs_floor)) break;
    std::pop_heap(heap.begin(), heap.end());
    const detail::Interval worst = heap.back();
    heap.pop_back();
    const double m = 0.5 * (worst.a + worst.b);
    auto left = detail::gauss_kronrod_15(f, worst.a, m);
    auto right = detail::gauss_kronrod_15(f, m, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.est_error + right.est_error - worst.err;
    heap.push_back({left.value, left.est_error, worst.a, m});
    std::push_heap(heap.begin(), heap.end());
    heap.push_back({right.value, right.est_error, m, worst.b});
    std::push_heap(heap.begin(), heap.end());
  }
  if (total_err > std::max(rel_tol * std::abs(total), abs_floor))
    throw NonConvergence("integrate_adaptive: subdivision budget exhausted");
  return {total, total_err};
}

template <class F>
QuadResult integrate_adaptive(F&& f, double a, double b, const QuadratureConfig& cfg) {
  return integrate_adaptive(std::forward<F>(f), a, b, cfg.rel_tol, cfg.abs_floor,
                            cfg.max_subdivisions);
}

}  // namespace rtc

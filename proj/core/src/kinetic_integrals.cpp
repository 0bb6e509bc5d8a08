#include "rtc/kinetic_integrals.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace rtc {

namespace {

constexpr double kTwoSqrtTwoPi = 5.013256549262001;  // 2 sqrt(2 pi)
constexpr double kShiftedRouteFrom = 50.0;
constexpr double kLn10 = 2.302585092994046;

double powi(double x, int k) {
  if (k < 0) return 1.0 / powi(x, -k);
  double r = 1.0;
  while (k) {
    if (k & 1) r *= x;
    x *= x;
    k >>= 1;
  }
  return r;
}

void check_indices(int m, int n, double g) {
  if (!(g > 0.0)) throw DomainError("j_mn: gamma must be positive");
  if (m < 0) throw DomainError("j_mn: m must be non-negative");
  if (n < -1) throw DomainError("j_mn: n must be >= -1");
  if (m + n < -1) throw DomainError("j_mn: m + n must be >= -1");
  if (n == -1 && m < 2) throw DomainError("j_mn: n = -1 requires m >= 2");
}

// log of exp(g) * exp(-g cosh s) sinh^m cosh^n, finite for s > 0
double log_integrand_s(int m, int n, double g, double s) {
  const double sh = std::sinh(0.5 * s);
  const double coshm1 = 2.0 * sh * sh;  // cosh s - 1, stable near 0
  return -g * coshm1 + m * std::log(std::sinh(s)) + n * std::log(std::cosh(s));
}

double find_s_max(int m, int n, double g, double decades) {
  const double drop = decades * kLn10;
  // point where the pure exponential factor alone has decayed `decades`
  double s = std::acosh(1.0 + drop / g);
  double peak = -std::numeric_limits<double>::infinity();
  for (int k = 0; k <= 40; ++k)
    peak = std::max(peak, log_integrand_s(m, n, g, s * std::pow(2.0, -0.25 * k)));
  int guard = 0;
  while (log_integrand_s(m, n, g, s) > peak - drop && guard++ < 400) {
    s *= 1.2;
    peak = std::max(peak, log_integrand_s(m, n, g, s));
  }
  return s;
}

}  // namespace

double j_mn_scaled_hyperbolic(int m, int n, double g, const QuadratureConfig& cfg) {
  check_indices(m, n, g);
  cfg.validate();
  const double s_max = find_s_max(m, n, g, cfg.s_cut_decades);
  auto f = [m, n, g](double s) {
    if (s <= 0.0) return m == 0 ? 1.0 : 0.0;
    const double sh2 = std::sinh(0.5 * s);
    const double e = std::exp(-g * 2.0 * sh2 * sh2);
    if (e == 0.0) return 0.0;
    return e * powi(std::sinh(s), m) * powi(std::cosh(s), n);
  };
  return integrate_adaptive(f, 0.0, s_max, cfg).value;
}

double j_mn_scaled_shifted(int m, int n, double g, const QuadratureConfig& cfg) {
  check_indices(m, n, g);
  cfg.validate();
  const double q2 = m - 1;  // twice the half-power q = (m-1)/2
  double x_max = cfg.s_cut_decades * kLn10 + 10.0;
  for (int i = 0; i < 4; ++i)
    x_max = cfg.s_cut_decades * kLn10 + 0.5 * q2 * std::log(x_max) +
            std::max(n, 0) * std::log1p(x_max / g) + 5.0;

  if (m % 2 == 1) {
    const int q = (m - 1) / 2;
    auto f = [n, g, q](double x) {
      const double y = x / g;
      return std::exp(-x) * powi(1.0 + y, n) * powi(y * (2.0 + y), q);
    };
    return integrate_adaptive(f, 0.0, x_max, cfg).value / g;
  }
  // even m: x = v^2 removes the half-power endpoint behaviour
  const int q = (m - 2) / 2;
  auto f = [n, g, q](double v) {
    const double x = v * v;
    const double y = x / g;
    return 2.0 * v * v * std::exp(-x) * powi(1.0 + y, n) * powi(y * (2.0 + y), q) *
           std::sqrt((2.0 + y) / g);
  };
  return integrate_adaptive(f, 0.0, std::sqrt(x_max), cfg).value / g;
}

double j_mn_scaled(int m, int n, double g, const QuadratureConfig& cfg) {
  check_indices(m, n, g);
  return g < kShiftedRouteFrom ? j_mn_scaled_hyperbolic(m, n, g, cfg)
                               : j_mn_scaled_shifted(m, n, g, cfg);
}

WeightedMoment weighted_j(int m, int n, int p_power, double gamma, const GasParameters& gas,
                          const QuadratureConfig& cfg) {
  check_indices(m, n, gamma);
  gas.validate();
  cfg.validate();
  if (p_power < 0) throw DomainError("weighted_j: p_power must be non-negative");

  QuadratureConfig inner = cfg;
  inner.rel_tol = std::max(cfg.rel_tol / 10.0, 1e-14);
  QuadratureConfig outer_cfg = cfg;
  outer_cfg.rel_tol = std::max(cfg.rel_tol / 2.0, 2e-14);
  const double a = gas.a_poly;

  auto outer = [&](double x) {
    return std::exp(-x) * std::pow(x, a) * powi(1.0 + x / gamma, p_power) *
           j_mn_scaled(m, n, gamma + x, inner);
  };

  double x_max = cfg.s_cut_decades * kLn10 + 10.0;
  for (int i = 0; i < 3; ++i)
    x_max = cfg.s_cut_decades * kLn10 + std::max(a + p_power, 0.0) * std::log(x_max) + 5.0;

  QuadResult total{0.0, 0.0};
  const bool integral_exponent = a == std::floor(a) && a >= 0.0;
  if (integral_exponent) {
    total = integrate_adaptive(outer, 0.0, x_max, outer_cfg);
  } else {
    // peel off the x^a endpoint with x = u^k so the integrand vanishes smoothly at 0
    const int k = std::max(2, static_cast<int>(std::ceil(2.0 / (1.0 + a))));
    auto head = [&](double u) { return outer(std::pow(u, k)) * k * std::pow(u, k - 1); };
    auto h = integrate_adaptive(head, 0.0, 1.0, outer_cfg);
    auto t = integrate_adaptive(outer, 1.0, x_max, outer_cfg);
    total = {h.value + t.value, h.est_error + t.est_error};
  }

  WeightedMoment w;
  w.m = m;
  w.n = n;
  w.p_power = p_power;
  const double scale = std::pow(gamma, -a - 1.0);
  w.value = scale * total.value;
  w.est_error = scale * total.est_error + std::abs(w.value) * inner.rel_tol * 3.0;
  if (!(w.value > 0.0) || !std::isfinite(w.value))
    throw NonConvergence("weighted_j: non-positive or non-finite result");
  if (w.est_error > cfg.rel_tol * w.value)
    throw NonConvergence("weighted_j: error estimate above rel_tol");
  return w;
}

double j21_series_scaled(double g, int order) {
  if (!(g >= 5.0)) throw DomainError("j21_series: gamma must be >= 5");
  if (order < 1 || order > 4) throw DomainError("j21_series: order must be in 1..4");
  static constexpr double c[4] = {1.0 / 4.0, 15.0 / 32.0, 105.0 / 512.0, -315.0 / 4096.0};
  double bracket = 0.0;
  for (int k = order - 1; k >= 0; --k) bracket = bracket / g + c[k];
  return kTwoSqrtTwoPi / std::sqrt(g) * bracket / g;
}

double j4m1_series_scaled(double g, int order) {
  if (!(g >= 5.0)) throw DomainError("j4m1_series: gamma must be >= 5");
  if (order < 1 || order > 2) throw DomainError("j4m1_series: order must be in 1..2");
  double bracket = 3.0 / 4.0;
  if (order == 2) bracket -= 15.0 / 32.0 / g;
  return kTwoSqrtTwoPi * std::pow(g, -2.5) * bracket;
}

double j21_series_next_coefficient() { return 10395.0 / 131072.0; }

}  // namespace rtc

#include "rtc/limits.hpp"

#include <cmath>

#include "rtc/chapman_enskog.hpp"
#include "rtc/moment_systems.hpp"

namespace rtc {

double internal_energy_moment(const ThermoState& state, const GasParameters& gas,
                              const QuadratureConfig& cfg) {
  (void)state;
  gas.validate();
  cfg.validate();
  const double a = gas.a_poly;
  const double x_max = cfg.s_cut_decades * 2.302585092994046 +
                       std::max(a + 1.0, 1.0) * 8.0 + 10.0;
  auto piece = [&](double extra_power) {
    if (a == std::floor(a) && a >= 0.0) {
      return integrate_adaptive(
                 [&](double x) { return std::exp(-x) * std::pow(x, a + extra_power); }, 0.0,
                 x_max, cfg)
          .value;
    }
    const double ap = a + extra_power;
    const int k = std::max(2, static_cast<int>(std::ceil(2.0 / (1.0 + a))));
    auto head = integrate_adaptive(
        [&](double u) {
          const double x = std::pow(u, k);
          return std::exp(-x) * std::pow(x, ap) * k * std::pow(u, k - 1);
        },
        0.0, 1.0, cfg);
    auto tail = integrate_adaptive(
        [&](double x) { return std::exp(-x) * std::pow(x, ap); }, 1.0, x_max, cfg);
    return head.value + tail.value;
  };
  return piece(1.0) / piece(0.0);
}

double theta11_star_expansion(const ThermoState& state, const GasParameters& gas,
                              const QuadratureConfig& cfg, int order) {
  if (!(state.gamma >= 10.0))
    throw DomainError("theta11_star_expansion: gamma must be >= 10");
  if (order < 1 || order > 2)
    throw DomainError("theta11_star_expansion: order must be 1 or 2");
  const double g = state.gamma;
  double v = 1.0 / g;
  if (order == 2) v += (-internal_energy_moment(state, gas, cfg) - 2.5) / (g * g);
  return v;
}

Extrapolated richardson_limit(const std::vector<double>& gammas, const std::vector<double>& f) {
  if (gammas.size() < 2 || gammas.size() != f.size())
    throw DomainError("richardson_limit: need at least two grid points");
  auto pair_limit = [&](std::size_t i) {
    const double g0 = gammas[i], g1 = gammas[i + 1];
    return (g1 * f[i + 1] - g0 * f[i]) / (g1 - g0);
  };
  Extrapolated e;
  const std::size_t last = gammas.size() - 2;
  e.limit = pair_limit(last);
  e.est_error = (gammas.size() >= 3) ? std::abs(e.limit - pair_limit(last - 1))
                                     : std::abs(e.limit - f.back());
  return e;
}

LimitReport convergence_sweep(const std::vector<double>& gamma_grid, double n_density,
                              const GasParameters& gas, const QuadratureConfig& cfg) {
  if (gamma_grid.size() < 2) throw DomainError("convergence_sweep: need >= 2 grid points");
  for (std::size_t i = 0; i < gamma_grid.size(); ++i) {
    if (gamma_grid[i] < 10.0 || gamma_grid[i] > 1e4)
      throw DomainError("convergence_sweep: grid must lie in [10, 1e4]");
    if (i > 0 && !(gamma_grid[i] > gamma_grid[i - 1]))
      throw DomainError("convergence_sweep: grid must be strictly increasing");
  }

  LimitReport rep;
  rep.gamma_grid = gamma_grid;
  for (double g : gamma_grid) {
    LimitPoint p;
    p.gamma = g;
    try {
      const ThermoState st = make_state(g, n_density, gas, cfg);
      const ThetaTable tab = build_theta_table(st, gas, cfg, 6);
      const TransportResult m2 = mi_transport(st, tab, 2, gas, cfg);
      const TransportResult m3 = mi_transport(st, tab, 3, gas, cfg);
      const TransportResult ce = cem_transport(st, tab, gas);
      p.mu_hat_mi2 = m2.mu_hat;
      p.mu_hat_mi3 = m3.mu_hat;
      p.mu_hat_cem = ce.mu_hat;
      p.chi_hat_mi2 = m2.chi_hat;
      p.chi_hat_mi3 = m3.chi_hat;
      p.chi_hat_cem = ce.chi_hat;
      p.nu_hat_mi2 = m2.nu_hat;
      p.nu_hat_mi3 = m3.nu_hat;
      p.nu_hat_cem = ce.nu_hat;
      p.ctheta = tab.theta_star(2, 3) * g * g / 3.0;
      p.energy_gap = g * (st.omega - 1.0);
      p.ok = true;
    } catch (const std::exception& e) {
      p.ok = false;
      p.error = e.what();
    }
    rep.points.push_back(p);
  }

  std::vector<double> gs, mu, ct, ch, chs;
  for (const auto& p : rep.points) {
    if (!p.ok) continue;
    gs.push_back(p.gamma);
    mu.push_back(p.mu_hat_cem);
    ct.push_back(p.ctheta);
    ch.push_back(p.chi_hat_cem);
    chs.push_back(p.gamma * p.chi_hat_cem);
  }
  if (gs.size() >= 2) {
    rep.mu_hat_cem = richardson_limit(gs, mu);
    rep.ctheta = richardson_limit(gs, ct);
    rep.chi_hat_cem = richardson_limit(gs, ch);
    rep.chi_scale_cem = richardson_limit(gs, chs);
  }
  return rep;
}

}  // namespace rtc

#include "rtc/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rtc/chapman_enskog.hpp"
#include "rtc/equilibrium.hpp"
#include "rtc/kinetic_integrals.hpp"
#include "rtc/limits.hpp"
#include "rtc/moment_systems.hpp"

namespace rtc {

namespace {

double rel_gap(double x, double ref) { return std::abs(x - ref) / std::abs(ref); }

CheckResult check_series(const QuadratureConfig& cfg) {
  CheckResult c{"series_agreement", false, 0.0, 0.0, ""};
  const double c1 = 0.25;
  const double c5 = j21_series_next_coefficient();
  double worst_ratio = 0.0;
  std::ostringstream detail;
  for (double g : {20.0, 50.0, 100.0}) {
    const double q = j_mn_scaled(2, 1, g, cfg);
    const double s = j21_series_scaled(g, 4);
    const double gap = rel_gap(s, q);
    // remainder bounded by the first omitted bracket term (x3 margin)
    const double bound = std::max(3.0 * (c5 / c1) / std::pow(g, 4.0), 1e-8);
    worst_ratio = std::max(worst_ratio, gap / bound);
    detail << "g=" << g << " gap=" << gap << " bound=" << bound << "; ";
  }
  c.measured = worst_ratio;
  c.bound = 1.0;
  c.pass = worst_ratio < 1.0;
  c.detail = detail.str();
  return c;
}

CheckResult check_dual_path(const QuadratureConfig& cfg, bool corrupt) {
  CheckResult c{"dual_path_theta", false, 0.0, 1e-6, ""};
  double worst = 0.0;
  std::string worst_at;
  for (double g : {0.1, 1.0, 10.0, 100.0}) {
    for (double a : {0.0, 1.0}) {
      GasParameters gas;
      gas.a_poly = a;
      const ThermoState st = make_state(g, 1.0, gas, cfg);
      ThetaTable tab = build_theta_table(st, gas, cfg, 6);
      if (corrupt) tab.corrupt(1, 2, tab.theta(1, 2) * 1.001);
      for (int j = 0; j <= 6; ++j) {
        for (int k = 0; 2 * k <= j + 1 && k <= 2; ++k) {
          const double direct = theta_direct(k, j, st, gas, cfg);
          const double gap = rel_gap(tab.theta(k, j), direct);
          if (gap > worst) {
            worst = gap;
            std::ostringstream os;
            os << "theta(" << k << "," << j << ") at gamma=" << g << " a=" << a;
            worst_at = os.str();
          }
        }
      }
    }
  }
  c.measured = worst;
  c.pass = worst < c.bound;
  c.detail = "worst at " + worst_at;
  return c;
}

CheckResult check_star_relation(const QuadratureConfig& cfg, bool corrupt) {
  CheckResult c{"star_index_shift", false, 0.0, 1e-8, ""};
  double worst = 0.0;
  for (double g : {0.5, 1.0, 10.0}) {
    for (double a : {0.0, 1.0}) {
      GasParameters gas;
      gas.a_poly = a;
      const ThermoState st = make_state(g, 1.0, gas, cfg);
      ThetaTable tab = build_theta_table(st, gas, cfg, 6);
      if (corrupt) tab.corrupt(1, 1, tab.theta(1, 1) * 1.001);
      const double denom = weighted_j(2, 1, 0, g, gas, cfg).value;
      // left side from the star-family integral, right side from the plain table
      for (auto [k, n] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 4}}) {
        double b = 1.0;  // binom(n+1, 2k)
        for (int i = 1; i <= 2 * k; ++i) b *= static_cast<double>(n + 1 - 2 * k + i) / i;
        const double left = b / (2.0 * k + 1.0) *
                            weighted_j(2 * k + 2, n - 2 * k, n - 1, g, gas, cfg).value / denom;
        const double right = (n + 1.0) / (n + 1.0 - 2.0 * k) * tab.theta(k, n - 1);
        worst = std::max(worst, rel_gap(left, right));
      }
      // the two star entries every closed form consumes
      worst = std::max(worst, rel_gap(tab.theta_star(1, 2), 3.0 * tab.theta(1, 1)));
      worst = std::max(worst, rel_gap(tab.theta_star(1, 3), 2.0 * tab.theta(1, 2)));
    }
  }
  c.measured = worst;
  c.pass = worst < c.bound;
  return c;
}

CheckResult check_log_derivative_identity(const QuadratureConfig& cfg) {
  CheckResult c{"star_log_derivative_identity", false, 0.0, 1e-6, ""};
  double worst = 0.0;
  for (double g : {1.0, 100.0}) {
    for (double a : {0.0, 1.0}) {
      GasParameters gas;
      gas.a_poly = a;
      const ThermoState st = make_state(g, 1.0, gas, cfg);
      worst = std::max(worst, check_a7_identity(st, gas, cfg));
    }
  }
  c.measured = worst;
  c.pass = worst < c.bound;
  return c;
}

CheckResult check_submatrix(const QuadratureConfig& cfg) {
  CheckResult c{"n2_submatrix_identity", false, 0.0, 0.0, "entrywise exact"};
  GasParameters gas;
  const ThermoState st = make_state(1.0, 1.0, gas, cfg);
  const ThetaTable tab = build_theta_table(st, gas, cfg, 6);
  double worst = 0.0;
  for (MiKind kind : {MiKind::bulk, MiKind::heat, MiKind::shear}) {
    const MiSystem n3 = assemble(kind, 3, st, tab);
    const MiSystem n2 = assemble(kind, 2, st, tab);
    const auto rows = n2_kept_rows(kind);
    const auto cols = n2_kept_cols(kind);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j)
        worst = std::max(worst, std::abs(n2.coeff.at(static_cast<int>(i), static_cast<int>(j)) -
                                         n3.coeff.at(rows[i], cols[j])));
  }
  c.measured = worst;
  c.pass = worst == 0.0;
  return c;
}

CheckResult check_limit_sweep(const QuadratureConfig& cfg) {
  CheckResult c{"nonrelativistic_limits", false, 0.0, 1e-3, ""};
  GasParameters gas;
  const LimitReport rep = convergence_sweep({100.0, 300.0, 1000.0, 3000.0}, 1.0, gas, cfg);
  const double mu_gap = std::abs(rep.mu_hat_cem.limit - 1.0);
  const double ct_gap = std::abs(rep.ctheta.limit - 1.0);
  std::ostringstream os;
  os << "mu_hat extrapolates to " << rep.mu_hat_cem.limit << " +- " << rep.mu_hat_cem.est_error
     << "; c4*theta23*g^2/3 extrapolates to " << rep.ctheta.limit << " +- "
     << rep.ctheta.est_error;
  c.detail = os.str();
  c.measured = std::max(mu_gap, ct_gap);
  c.pass = c.measured < c.bound;
  return c;
}

CheckResult check_cross_method(const QuadratureConfig& cfg) {
  CheckResult c{"cross_method_convergence", false, 0.0, 0.05, ""};
  GasParameters gas;
  double prev_mu = 1e300, prev_chi = 1e300;
  bool monotone = true;
  double final_gap = 0.0;
  for (double g : {10.0, 100.0, 1000.0}) {
    const ThermoState st = make_state(g, 1.0, gas, cfg);
    const ThetaTable tab = build_theta_table(st, gas, cfg, 6);
    const TransportResult m2 = mi_transport(st, tab, 2, gas, cfg);
    const TransportResult m3 = mi_transport(st, tab, 3, gas, cfg);
    const TransportResult ce = cem_transport(st, tab, gas);
    const double mu_gap = std::max({rel_gap(m2.mu_hat, ce.mu_hat), rel_gap(m3.mu_hat, ce.mu_hat),
                                    rel_gap(m2.mu_hat, m3.mu_hat)});
    const double chi_gap =
        std::max({rel_gap(m2.chi_hat, ce.chi_hat), rel_gap(m3.chi_hat, ce.chi_hat),
                  rel_gap(m2.chi_hat, m3.chi_hat)});
    if (mu_gap >= prev_mu || chi_gap >= prev_chi) monotone = false;
    prev_mu = mu_gap;
    prev_chi = chi_gap;
    final_gap = std::max(mu_gap, chi_gap);
  }
  c.measured = final_gap;
  c.pass = monotone && final_gap < c.bound;
  c.detail = monotone ? "gaps decrease monotonically" : "gap sequence not monotone";
  return c;
}

}  // namespace

std::vector<CheckResult> run_selftest(const SelftestOptions& opt) {
  QuadratureConfig cfg;
  cfg.rel_tol = opt.rel_tol;
  std::vector<CheckResult> out;
  out.push_back(check_series(cfg));
  out.push_back(check_dual_path(cfg, opt.corrupt_theta));
  out.push_back(check_star_relation(cfg, opt.corrupt_theta));
  out.push_back(check_log_derivative_identity(cfg));
  out.push_back(check_submatrix(cfg));
  if (opt.full) {
    out.push_back(check_limit_sweep(cfg));
    out.push_back(check_cross_method(cfg));
  }
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& c) { return c.pass; });
}

}  // namespace rtc

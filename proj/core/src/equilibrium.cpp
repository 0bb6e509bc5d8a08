#include "rtc/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>

namespace rtc {

namespace {

constexpr double kGammaMin = 0.05;
constexpr double kGammaMax = 1e4;
constexpr double kFdStepRel = 1e-6;      // central-difference step, relative to gamma
constexpr double kRecurrenceTol = 1e-6;  // recurrence vs direct quadrature

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r *= static_cast<double>(n - k + i) / i;
  return r;
}

double denominator_moment(double gamma, const GasParameters& gas, const QuadratureConfig& cfg) {
  return weighted_j(2, 1, 0, gamma, gas, cfg).value;
}

double theta_direct_impl(int k, int j, double gamma, double denom, const GasParameters& gas,
                         const QuadratureConfig& cfg) {
  return binom(j + 1, 2 * k) / (2.0 * k + 1.0) *
         weighted_j(2 * k + 2, j + 1 - 2 * k, j, gamma, gas, cfg).value / denom;
}

double star_quadrature_impl(int k, double gamma, const GasParameters& gas,
                            const QuadratureConfig& cfg) {
  const double denom = denominator_moment(gamma, gas, cfg);
  return weighted_j(2 * k + 2, -1, 2 * k - 2, gamma, gas, cfg).value / (2.0 * k + 1.0) / denom;
}

// central difference with one Richardson stage: f evaluated at gamma*(1 +- d), (1 +- d/2)
template <class F>
double fd_derivative(F&& f, double gamma, double step_rel) {
  const double h = gamma * step_rel;
  const double d1 = (f(gamma + h) - f(gamma - h)) / (2.0 * h);
  const double d2 = (f(gamma + 0.5 * h) - f(gamma - 0.5 * h)) / h;
  return (4.0 * d2 - d1) / 3.0;
}

}  // namespace

ThermoState make_state(double gamma, double n_density, const GasParameters& gas,
                       const QuadratureConfig& cfg) {
  gas.validate();
  cfg.validate();
  if (!(gamma >= kGammaMin && gamma <= kGammaMax))
    throw DomainError("make_state: gamma must lie in [0.05, 1e4]");
  if (!(n_density > 0.0)) throw DomainError("make_state: n_density must be positive");

  ThermoState s;
  s.gamma = gamma;
  s.n_density = n_density;
  s.omega = weighted_j(2, 2, 1, gamma, gas, cfg).value / denominator_moment(gamma, gas, cfg);
  s.pressure = n_density / gamma;
  s.g1 = (s.omega - 1.0) + 1.0 / gamma;
  return s;
}

double theta_direct(int k, int j, const ThermoState& state, const GasParameters& gas,
                    const QuadratureConfig& cfg) {
  if (k < 0 || j < 0 || 2 * k > j + 1)
    throw DomainError("theta_direct: need 0 <= 2k <= j+1");
  const double denom = denominator_moment(state.gamma, gas, cfg);
  return theta_direct_impl(k, j, state.gamma, denom, gas, cfg);
}

double theta_star_quadrature(int k, const ThermoState& state, const GasParameters& gas,
                             const QuadratureConfig& cfg) {
  if (k != 1 && k != 2) throw DomainError("theta_star_quadrature: k must be 1 or 2");
  return star_quadrature_impl(k, state.gamma, gas, cfg);
}

double ThetaTable::theta(int k, int j) const {
  auto it = theta_.find({k, j});
  if (it == theta_.end()) {
    std::ostringstream os;
    os << "ThetaTable: theta(" << k << "," << j << ") not built";
    throw MissingTheta(os.str());
  }
  return it->second;
}

double ThetaTable::theta_star(int k, int n) const {
  auto it = theta_star_.find({k, n});
  if (it == theta_star_.end()) {
    std::ostringstream os;
    os << "ThetaTable: theta_star(" << k << "," << n << ") not built";
    throw MissingTheta(os.str());
  }
  return it->second;
}

bool ThetaTable::has_theta(int k, int j) const { return theta_.count({k, j}) != 0; }
bool ThetaTable::has_theta_star(int k, int n) const { return theta_star_.count({k, n}) != 0; }

ThetaSource ThetaTable::theta_star_source(int k, int n) const {
  auto it = star_source_.find({k, n});
  if (it == star_source_.end()) throw MissingTheta("ThetaTable: star source not recorded");
  return it->second;
}

void ThetaTable::corrupt(int k, int j, double value) { theta_[{k, j}] = value; }

ThetaTable build_theta_table(const ThermoState& state, const GasParameters& gas,
                             const QuadratureConfig& cfg, int j_max, bool validate_all) {
  gas.validate();
  cfg.validate();
  if (j_max < 2) throw DomainError("build_theta_table: j_max must be >= 2");

  ThetaTable t;
  t.state_ = state;
  t.j_max_ = j_max;
  const double gamma = state.gamma;
  const double omega = state.omega;

  // direct theta_{0,j} at a shifted gamma, one denominator per stencil point
  auto theta0_row = [&](double g) {
    std::vector<double> row(static_cast<std::size_t>(j_max), 0.0);  // row[j-1] = theta_{0,j}
    const double denom = denominator_moment(g, gas, cfg);
    for (int j = 1; j < j_max; ++j) row[j - 1] = theta_direct_impl(0, j, g, denom, gas, cfg);
    return row;
  };
  const double h = gamma * kFdStepRel;
  const auto rp = theta0_row(gamma + h);
  const auto rm = theta0_row(gamma - h);
  const auto rp2 = theta0_row(gamma + 0.5 * h);
  const auto rm2 = theta0_row(gamma - 0.5 * h);

  t.theta_[{0, 0}] = 1.0;
  t.theta_[{0, 1}] = omega;  // d(theta_{0,0})/d(gamma) = 0
  for (int j = 1; j < j_max; ++j) {
    const double d1 = (rp[j - 1] - rm[j - 1]) / (2.0 * h);
    const double d2 = (rp2[j - 1] - rm2[j - 1]) / h;
    const double deriv = (4.0 * d2 - d1) / 3.0;
    if (j == 1) t.omega_prime_ = deriv;
    t.theta_[{0, j + 1}] = omega * t.theta_[{0, j}] - deriv;
  }

  // algebraic branches for k >= 1, ascending j
  for (int j = 0; j < j_max; ++j) {
    for (int hh = 1; hh <= (j + 1) / 2; ++hh) {
      const double lead = (j + 2.0) / gamma;
      t.theta_[{hh, j + 1}] =
          lead * (t.theta_[{hh, j}] + (j + 3.0 - 2.0 * hh) / (2.0 * hh) * t.theta_[{hh - 1, j}]);
    }
    if (j % 2 == 0) t.theta_[{(j + 2) / 2, j + 1}] = t.theta_[{j / 2, j}] / gamma;
  }

  // star entries: index-shift relation where n+1 > 2k, quadrature for (1,1) and (2,3)
  for (int n = 1; n <= j_max; ++n) {
    for (int k = 0; 2 * k < n + 1; ++k) {
      if (!t.theta_.count({k, n - 1})) continue;
      t.theta_star_[{k, n}] = (n + 1.0) / (n + 1.0 - 2.0 * k) * t.theta_[{k, n - 1}];
      t.star_source_[{k, n}] = ThetaSource::recurrence;
    }
  }
  t.theta_star_[{1, 1}] = star_quadrature_impl(1, gamma, gas, cfg);
  t.star_source_[{1, 1}] = ThetaSource::quadrature;
  t.theta_star_[{2, 3}] = star_quadrature_impl(2, gamma, gas, cfg);
  t.star_source_[{2, 3}] = ThetaSource::quadrature;

  // cross-validation against the defining integral
  std::vector<std::pair<int, int>> entries;
  for (const auto& kv : t.theta_)
    if (kv.first.second >= 2) entries.push_back(kv.first);
  if (!validate_all) {
    std::mt19937 rng(static_cast<std::uint32_t>(
        std::hash<double>{}(gamma) ^ (std::hash<double>{}(gas.a_poly) << 1)));
    std::shuffle(entries.begin(), entries.end(), rng);
    entries.resize(std::min<std::size_t>(2, entries.size()));
  }
  const double denom = denominator_moment(gamma, gas, cfg);
  for (const auto& [k, j] : entries) {
    const double direct = theta_direct_impl(k, j, gamma, denom, gas, cfg);
    const double rec = t.theta_.at({k, j});
    if (std::abs(rec - direct) > kRecurrenceTol * std::abs(direct)) {
      std::ostringstream os;
      os << "build_theta_table: theta(" << k << "," << j << ") recurrence " << rec
         << " vs quadrature " << direct << " at gamma=" << gamma << ", a=" << gas.a_poly;
      throw RecurrenceMismatch(os.str());
    }
  }
  return t;
}

GradientRatios gradient_ratios(const ThermoState& state, const ThetaTable& table) {
  const double omega = state.omega;
  const double theta11 = table.theta(1, 1);
  const double theta12 = table.theta(1, 2);
  const double gram_hat = table.gram_hat();  // theta_{0,2} - omega^2
  const double T = state.temperature();

  GradientRatios r;
  r.gram = state.rho() * state.rho() * gram_hat;
  if (!(r.gram > 0.0)) throw SingularSystem("gradient_ratios: moment Gram determinant <= 0");
  // (p/rho) theta_{0,2} - omega theta_{1,2}/3 = T (gram_hat - omega theta_{1,1})
  const double d1_hat = T * (gram_hat - omega * theta11);
  const double d2_hat = theta12 / 3.0 - T * omega;
  r.r_time_lambda = -d1_hat / gram_hat;
  r.r_time_lambda_u = -d2_hat / gram_hat;
  r.r_space_lambda = -(2.0 / 3.0) * state.gamma * theta12;
  return r;
}

double check_a7_identity(const ThermoState& state, const GasParameters& gas,
                         const QuadratureConfig& cfg) {
  const double gamma = state.gamma;
  const double ts11 = star_quadrature_impl(1, gamma, gas, cfg);
  const double dlog = fd_derivative(
      [&](double g) { return std::log(star_quadrature_impl(1, g, gas, cfg)); }, gamma, 1e-4);
  return std::abs(state.omega - 1.0 / (gamma * ts11) - dlog);
}

}  // namespace rtc

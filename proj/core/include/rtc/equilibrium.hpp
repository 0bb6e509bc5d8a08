#pragma once

#include <map>
#include <utility>
#include <vector>

#include "rtc/gas.hpp"
#include "rtc/kinetic_integrals.hpp"
#include "rtc/quadrature.hpp"

namespace rtc {

/// One equilibrium point. Natural units: rho = n, T = 1/gamma, p = n/gamma.
struct ThermoState {
  double gamma = 0.0;
  double n_density = 0.0;
  double omega = 0.0;     // e / (rho c^2)
  double pressure = 0.0;  // n k_B T
  double g1 = 0.0;        // (e - rho c^2 + p) / rho

  double rho() const { return n_density; }
  double temperature() const { return 1.0 / gamma; }
};

ThermoState make_state(double gamma, double n_density, const GasParameters& gas,
                       const QuadratureConfig& cfg);

/// theta_{k,j} straight from its defining double integral.
double theta_direct(int k, int j, const ThermoState& state, const GasParameters& gas,
                    const QuadratureConfig& cfg);

/// theta*_{k,2k-1} (k = 1 or 2) by quadrature; the only star entries that do not
/// reduce to plain theta values.
double theta_star_quadrature(int k, const ThermoState& state, const GasParameters& gas,
                             const QuadratureConfig& cfg);

enum class ThetaSource { quadrature, recurrence };

/// Memoized theta_{k,j} / theta*_{k,n} values for one state.
///
/// theta_{0,j} advance by the derivative recurrence (central differences with
/// Richardson extrapolation on directly integrated stencil values); the k >= 1
/// entries follow by pure algebra. Star entries come from the index-shift relation
/// where it applies and by quadrature for (1,1) and (2,3).
class ThetaTable {
public:
  const ThermoState& state() const { return state_; }
  int j_max() const { return j_max_; }

  double theta(int k, int j) const;
  double theta_star(int k, int n) const;
  bool has_theta(int k, int j) const;
  bool has_theta_star(int k, int n) const;
  ThetaSource theta_star_source(int k, int n) const;

  /// d(theta_{0,1})/d(gamma), the finite-difference derivative used at build time.
  double omega_prime() const { return omega_prime_; }
  /// theta_{0,2} - omega^2, formed without cancellation (equals -omega_prime()).
  double gram_hat() const { return -omega_prime_; }

  /// Test hook: overwrite one entry (selftest negative control).
  void corrupt(int k, int j, double value);

private:
  friend ThetaTable build_theta_table(const ThermoState&, const GasParameters&,
                                      const QuadratureConfig&, int, bool);
  ThermoState state_;
  int j_max_ = 0;
  double omega_prime_ = 0.0;
  std::map<std::pair<int, int>, double> theta_;
  std::map<std::pair<int, int>, double> theta_star_;
  std::map<std::pair<int, int>, ThetaSource> star_source_;
};

/// Build the table up to column j_max (>= 2; the N = 3 moment systems need 6).
/// validate_all = false spot-checks two entries against direct quadrature,
/// true checks every entry; disagreement beyond 1e-6 throws RecurrenceMismatch.
ThetaTable build_theta_table(const ThermoState& state, const GasParameters& gas,
                             const QuadratureConfig& cfg, int j_max,
                             bool validate_all = false);

/// Coefficients eliminating the time-like gradient combinations in favour of the
/// spatial one, via the equilibrium 2x2 system, plus the spatial-gradient ratio.
struct GradientRatios {
  double r_time_lambda = 0.0;    // U^a d_a lambda  per unit  h^{ad} d_a lambda_d
  double r_time_lambda_u = 0.0;  // U^a U^b d_a lambda_b  per unit  h^{ad} d_a lambda_d
  double r_space_lambda = 0.0;   // -(2/3) (rho/p) c^2 theta_{1,2}
  double gram = 0.0;             // rho^2 theta_{0,2} - (e/c^2)^2, must be positive
};

GradientRatios gradient_ratios(const ThermoState& state, const ThetaTable& table);

/// Residual of the identity  omega = 1/(gamma theta*_{1,1}) + d ln theta*_{1,1} / d gamma.
double check_a7_identity(const ThermoState& state, const GasParameters& gas,
                         const QuadratureConfig& cfg);

}  // namespace rtc

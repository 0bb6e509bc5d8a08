#pragma once

#include <string>
#include <vector>

#include "rtc/equilibrium.hpp"
#include "rtc/gas.hpp"

namespace rtc {

/// <I/(k_B T)> under the weight exp(-I/k_B T) phi(I); equals a_poly + 1 for the
/// power-law phi. gamma drops out, the state argument is kept for interface parity.
double internal_energy_moment(const ThermoState& state, const GasParameters& gas,
                              const QuadratureConfig& cfg);

/// Large-gamma expansion of theta*_{1,1}: 1/g at order 1, plus
/// (-<I/T> - 5/2)/g^2 at order 2. Requires gamma >= 10.
double theta11_star_expansion(const ThermoState& state, const GasParameters& gas,
                              const QuadratureConfig& cfg, int order);

struct LimitPoint {
  double gamma = 0.0;
  bool ok = false;
  std::string error;
  double mu_hat_mi2 = 0.0, mu_hat_mi3 = 0.0, mu_hat_cem = 0.0;
  double chi_hat_mi2 = 0.0, chi_hat_mi3 = 0.0, chi_hat_cem = 0.0;
  double nu_hat_mi2 = 0.0, nu_hat_mi3 = 0.0, nu_hat_cem = 0.0;
  double ctheta = 0.0;      // c^4 theta*_{2,3} gamma^2 / 3, tends to 1
  double energy_gap = 0.0;  // gamma (omega - 1), tends to a + 5/2
};

struct Extrapolated {
  double limit = 0.0;
  double est_error = 0.0;
};

/// Per-point nondimensional coefficients on an increasing grid in [10, 1e4] plus
/// first-order Richardson extrapolations in 1/gamma.
struct LimitReport {
  std::vector<double> gamma_grid;
  std::vector<LimitPoint> points;
  Extrapolated mu_hat_cem;     // tends to 1
  Extrapolated ctheta;         // tends to 1
  Extrapolated chi_hat_cem;    // chi T/(tau p c^2) combination
  Extrapolated chi_scale_cem;  // chi m/(tau p k_B) = gamma * chi_hat, the combination
                               // with a finite non-zero limit
};

LimitReport convergence_sweep(const std::vector<double>& gamma_grid, double n_density,
                              const GasParameters& gas, const QuadratureConfig& cfg);

/// One-stage Richardson extrapolation in 1/gamma (model f = L + K/gamma), using the
/// last grid pair; est_error is the change against the previous pair.
Extrapolated richardson_limit(const std::vector<double>& gammas, const std::vector<double>& f);

}  // namespace rtc

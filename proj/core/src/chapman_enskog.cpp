#include "rtc/chapman_enskog.hpp"

#include <algorithm>
#include <cmath>

namespace rtc {

namespace {

// same elimination arithmetic as gradient_ratios, fed from the reduced inputs
// (theta_{1,1} = 1/gamma identically in natural units)
GradientRatios ratios_from_inputs(const CemInputs& in) {
  GradientRatios r;
  const ThermoState& s = in.state;
  const double T = s.temperature();
  const double theta11 = 1.0 / s.gamma;
  r.gram = s.rho() * s.rho() * in.gram_hat;
  if (!(r.gram > 0.0)) throw SingularSystem("cem: moment Gram determinant <= 0");
  r.r_time_lambda = -(T * (in.gram_hat - s.omega * theta11)) / in.gram_hat;
  r.r_time_lambda_u = -(in.theta12 / 3.0 - T * s.omega) / in.gram_hat;
  r.r_space_lambda = -(2.0 / 3.0) * s.gamma * in.theta12;
  return r;
}

}  // namespace

CemInputs make_cem_inputs(const ThermoState& state, const ThetaTable& table) {
  CemInputs in;
  in.state = state;
  in.theta02 = table.theta(0, 2);
  in.theta12 = table.theta(1, 2);
  in.theta11_star = table.theta_star(1, 1);
  in.theta12_star = table.theta_star(1, 2);
  in.theta13_star = table.theta_star(1, 3);
  in.theta23_star = table.theta_star(2, 3);
  in.gram_hat = table.gram_hat();
  return in;
}

double cem_heat_conductivity(const CemInputs& in, const GasParameters& gas) {
  gas.validate();
  const ThermoState& s = in.state;
  const double g = s.gamma;
  // chi = -(m tau c^8 / 9 k_B T^2) (rho^2/p) theta_{1,2} (theta*_{1,2} - (rho c^2/p) theta_{1,2} theta*_{1,1})
  return -gas.tau * g * g / 9.0 * (s.rho() * s.rho() / s.pressure) * in.theta12 *
         (in.theta12_star - g * in.theta12 * in.theta11_star);
}

double cem_bulk_viscosity(const CemInputs& in, const GasParameters& gas) {
  gas.validate();
  const GradientRatios r = ratios_from_inputs(in);
  const ThermoState& s = in.state;
  return gas.tau * s.gamma * s.rho() *
         (in.theta12_star / 3.0 * r.r_time_lambda + in.theta13_star / 6.0 * r.r_time_lambda_u +
          5.0 / 9.0 * in.theta23_star);
}

double cem_shear_viscosity(const CemInputs& in, const GasParameters& gas) {
  gas.validate();
  return gas.tau / 3.0 * in.state.gamma * in.state.rho() * in.theta23_star;
}

CemIdentityReport cem_identity_checks(const CemInputs& in, const GradientRatios& ratios) {
  const ThermoState& s = in.state;
  CemIdentityReport rep;

  const double t_space1 = s.pressure * ratios.r_space_lambda;
  const double t_space2 = (2.0 / 3.0) * s.rho() * in.theta12;
  rep.residual_space =
      std::abs(t_space1 + t_space2) / std::max(std::abs(t_space1), std::abs(t_space2));

  const double m1 = s.rho() * ratios.r_time_lambda;
  const double m2 = s.omega * s.rho() * ratios.r_time_lambda_u;
  const double m3 = s.pressure;
  rep.residual_mass_row =
      std::abs(m1 + m2 + m3) / std::max({std::abs(m1), std::abs(m2), std::abs(m3)});

  const double e1 = s.omega * s.rho() * ratios.r_time_lambda;
  const double e2 = s.rho() * in.theta02 * ratios.r_time_lambda_u;
  const double e3 = s.rho() * in.theta12 / 3.0;
  rep.residual_energy_row =
      std::abs(e1 + e2 + e3) / std::max({std::abs(e1), std::abs(e2), std::abs(e3)});

  const double worst =
      std::max({rep.residual_space, rep.residual_mass_row, rep.residual_energy_row});
  if (worst > 1e-8) throw IdentityViolation("cem_identity_checks: residual above 1e-8");
  return rep;
}

TransportResult cem_transport(const ThermoState& state, const ThetaTable& table,
                              const GasParameters& gas) {
  const CemInputs in = make_cem_inputs(state, table);
  const GradientRatios ratios = gradient_ratios(state, table);
  const CemIdentityReport rep = cem_identity_checks(in, ratios);

  GasParameters unit = gas;
  unit.tau = 1.0;
  const double nu_unit = cem_bulk_viscosity(in, unit);
  const double chi_unit = cem_heat_conductivity(in, unit);
  const double mu_unit = cem_shear_viscosity(in, unit);

  TransportResult r;
  r.method = Method::cem;
  r.nu = gas.tau * nu_unit;
  r.chi = gas.tau * chi_unit;
  r.mu = gas.tau * mu_unit;
  r.nu_hat = nu_unit / state.pressure;
  r.chi_hat = chi_unit * state.temperature() / state.pressure;
  r.mu_hat = mu_unit / state.pressure;
  r.diag.min_pivot = in.gram_hat / std::max(in.theta02, state.omega * state.omega);
  r.diag.rc_residual =
      std::max({rep.residual_space, rep.residual_mass_row, rep.residual_energy_row});
  return r;
}

}  // namespace rtc

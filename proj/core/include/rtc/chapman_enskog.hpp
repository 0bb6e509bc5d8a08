#pragma once

#include "rtc/equilibrium.hpp"
#include "rtc/gas.hpp"
#include "rtc/transport.hpp"

namespace rtc {

/// Exactly the scalar inputs the closed-form coefficients consume. Taking no
/// moment-number parameter anywhere in this module is deliberate: the method is
/// N-independent by construction.
struct CemInputs {
  ThermoState state;
  double theta02 = 0.0;
  double theta12 = 0.0;
  double theta11_star = 0.0;  // quadrature
  double theta12_star = 0.0;  // = 3 theta_{1,1}
  double theta13_star = 0.0;  // = 2 theta_{1,2}
  double theta23_star = 0.0;  // quadrature
  double gram_hat = 0.0;      // theta_{0,2} - omega^2
};

CemInputs make_cem_inputs(const ThermoState& state, const ThetaTable& table);

double cem_heat_conductivity(const CemInputs& in, const GasParameters& gas);
double cem_bulk_viscosity(const CemInputs& in, const GasParameters& gas);
double cem_shear_viscosity(const CemInputs& in, const GasParameters& gas);

/// Residuals of the combinations that vanish identically once the gradient
/// eliminations are inserted: the spatial-gradient cancellation and the two rows
/// of the equilibrium 2x2 system. Reported relative to the largest term.
struct CemIdentityReport {
  double residual_space = 0.0;
  double residual_mass_row = 0.0;
  double residual_energy_row = 0.0;
};

/// Throws IdentityViolation if any residual exceeds 1e-8.
CemIdentityReport cem_identity_checks(const CemInputs& in, const GradientRatios& ratios);

TransportResult cem_transport(const ThermoState& state, const ThetaTable& table,
                              const GasParameters& gas);

}  // namespace rtc

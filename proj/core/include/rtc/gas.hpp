#pragma once

#include "rtc/errors.hpp"

namespace rtc {

/// Unit system marker. Everything internal runs in natural units m = c = k_B = 1,
/// so gamma = 1/T, p = n/gamma and rho = n.
enum class UnitSystem { natural };

/// Gas model: phi(I) = I^a_poly weights the internal energy levels, tau is the
/// relaxation time. a_poly must exceed -1 or the I-integrals diverge.
struct GasParameters {
  double a_poly = 0.0;
  double tau = 1.0;
  UnitSystem units = UnitSystem::natural;

  void validate() const {
    if (!(a_poly > -1.0))
      throw DomainError("GasParameters: a_poly must be > -1");
    if (!(tau >= 0.0))
      throw DomainError("GasParameters: tau must be non-negative");
  }
};

}  // namespace rtc

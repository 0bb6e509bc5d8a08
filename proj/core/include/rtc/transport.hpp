#pragma once

#include <string>

namespace rtc {

enum class Method { mi2, mi3, cem };

inline const char* to_string(Method m) {
  switch (m) {
    case Method::mi2: return "mi2";
    case Method::mi3: return "mi3";
    case Method::cem: return "cem";
  }
  return "?";
}

struct TransportDiagnostics {
  double min_pivot = 0.0;    // smallest scaled LU pivot among the solve denominators
  double rc_residual = 0.0;  // worst augmented-determinant consistency residual
};

/// Bulk viscosity nu, heat conductivity chi, shear viscosity mu, plus the
/// nondimensional forms nu/(tau p), chi T/(tau p c^2), mu/(tau p).
struct TransportResult {
  Method method = Method::cem;
  double nu = 0.0;
  double chi = 0.0;
  double mu = 0.0;
  double nu_hat = 0.0;
  double chi_hat = 0.0;
  double mu_hat = 0.0;
  TransportDiagnostics diag;
};

}  // namespace rtc

#pragma once

#include "rtc/gas.hpp"
#include "rtc/quadrature.hpp"

namespace rtc {

// Relativistic kinetic integrals
//
//   J_{m,n}(g) = int_0^inf exp(-g cosh s) cosh^n(s) sinh^m(s) ds
//
// All *_scaled functions return exp(g) * J_{m,n}(g): the exponential factor is kept
// symbolic (same idiom as exp-scaled Bessel evaluations) so that values stay
// representable up to g ~ 1e4 and ratios taken at equal g are exact.

/// exp(g)*J_{m,n}(g), route chosen by g. Preconditions: g > 0, m >= 0, n >= -1,
/// m + n >= -1, and n = -1 only with m >= 2.
double j_mn_scaled(int m, int n, double g, const QuadratureConfig& cfg);

/// Same integral evaluated on the hyperbolic-angle axis s in [0, s_max].
double j_mn_scaled_hyperbolic(int m, int n, double g, const QuadratureConfig& cfg);

/// Same integral after the change of variable cosh s = 1 + x/g (exp(-x) weight).
double j_mn_scaled_shifted(int m, int n, double g, const QuadratureConfig& cfg);

/// phi(I)-weighted moment of J*: value = exp(gamma) * int_0^inf J_{m,n}(gamma(1+I))
/// (1+I)^p_power I^a dI, computed through x = gamma*I. est_error/value <= rel_tol
/// on success.
struct WeightedMoment {
  int m = 0;
  int n = 0;
  int p_power = 0;
  double value = 0.0;
  double est_error = 0.0;
};

WeightedMoment weighted_j(int m, int n, int p_power, double gamma, const GasParameters& gas,
                          const QuadratureConfig& cfg);

/// Truncated large-g series for exp(g)*J_{2,1}(g):
///   2 sqrt(2 pi) g^{-1/2} [ 1/(4g) + 15/(32 g^2) + 105/(512 g^3) - 315/(4096 g^4) ]
/// order in 1..4 selects how many bracket terms are kept; requires g >= 5.
double j21_series_scaled(double g, int order);

/// Truncated large-g series for exp(g)*J_{4,-1}(g):
///   2 sqrt(2 pi) g^{-5/2} [ 3/4 - (15/32)/g ]
/// order in 1..2; requires g >= 5.
double j4m1_series_scaled(double g, int order);

/// Leading coefficient of the first omitted J_{2,1} bracket term (order-5), used to
/// bound the order-4 truncation remainder.
double j21_series_next_coefficient();

}  // namespace rtc

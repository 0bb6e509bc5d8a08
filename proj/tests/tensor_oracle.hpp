#pragma once

// Brute-force construction of the first-iterate moment systems straight from the
// equilibrium moment tensors, with every contraction done by explicit index loops.
// Slow and simple on purpose: this is the reference the fast assembly is tested
// against.

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "rtc/equilibrium.hpp"
#include "rtc/gas.hpp"
#include "rtc/small_matrix.hpp"

namespace oracle {

// Dense rank-R tensor over a 4d index (all indices contravariant unless noted).
class Tensor {
public:
  explicit Tensor(int rank) : rank_(rank), a_(std::size_t(1) << (2 * rank), 0.0) {}
  int rank() const { return rank_; }
  double& at(const std::vector<int>& idx) { return a_[flat(idx)]; }
  double at(const std::vector<int>& idx) const { return a_[flat(idx)]; }

private:
  std::size_t flat(const std::vector<int>& idx) const {
    std::size_t f = 0;
    for (int i : idx) f = f * 4 + static_cast<std::size_t>(i);
    return f;
  }
  int rank_;
  std::vector<double> a_;
};

// Metric signature (+,-,-,-); rest frame U^a = (1,0,0,0), natural units.
inline double metric(int a, int b) { return a != b ? 0.0 : (a == 0 ? 1.0 : -1.0); }

struct MomentContext {
  double gamma;
  rtc::GasParameters gas;
  rtc::QuadratureConfig cfg;
  double denom;  // normalizing moment, so that rho = 1

  MomentContext(double g, const rtc::GasParameters& gp, const rtc::QuadratureConfig& qc);

  /// < cosh^a sinh^b (1+I)^n >, normalized by the particle-density moment.
  double moment(int cosh_pow, int sinh_pow, int poly_pow) const;

  /// Equilibrium moment tensor of the given rank (n = rank-1 internal-energy power),
  /// normalized so the rank-1 tensor is U^a.
  const Tensor& equilibrium_tensor(int rank) const;

private:
  mutable std::map<std::array<int, 3>, double> moment_cache_;
  mutable std::map<int, Tensor> tensor_cache_;
};

/// One assembled subsystem in oracle form.
struct OracleSystem {
  rtc::SmallMatrix coeff;
  std::vector<std::array<double, 3>> rhs;  // same basis layout as rtc::MiSystem
  int t_row = 0;
};

/// kind: 0 bulk, 1 heat, 2 shear. n_moments in {2,3}.
OracleSystem build_system(const MomentContext& ctx, int kind, int n_moments);

/// Transport coefficients per unit tau from the oracle systems (direct solve).
struct OracleTransport {
  double nu_hat, chi_hat, mu_hat;
};
OracleTransport transport(const MomentContext& ctx, int n_moments);

}  // namespace oracle

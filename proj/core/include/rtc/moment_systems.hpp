#pragma once

#include <array>
#include <string>
#include <vector>

#include "rtc/equilibrium.hpp"
#include "rtc/small_matrix.hpp"
#include "rtc/transport.hpp"

namespace rtc {

enum class MiKind { bulk, heat, shear };

/// as_printed keeps every published entry verbatim. pattern_consistent replaces
/// the entries that a brute-force reconstruction from the defining moment tensors
/// shows to be misprints (bulk rows 3, 4 and the stress row, one bulk source
/// coefficient, the first heat column, one heat entry and source coefficient, one
/// shear entry). Only the corrected system reproduces the shared nonrelativistic
/// limit of the two methods, so it is the default.
enum class EntryVariant { as_printed, pattern_consistent };

inline const char* to_string(MiKind k) {
  switch (k) {
    case MiKind::bulk: return "bulk";
    case MiKind::heat: return "heat";
    case MiKind::shear: return "shear";
  }
  return "?";
}

/// One first-iterate linear subsystem: coefficient matrix, per-row gradient
/// decomposition of the right-hand side, and the row fed by the stress deviation.
///
/// rhs_decomp meaning per kind (tau and the basis gradient factored out):
///   bulk:  rhs_i = -tau * (g[0] U dlam + g[1] UU dlam + g[2] h dlam)
///   heat:  rhs_i = +tau * (g[0] h dlamE + g[1] hU dlam),  g[2] unused
///   shear: rhs_i = -tau *  g[0] * shear gradient,         g[1], g[2] unused
struct MiSystem {
  MiKind kind = MiKind::bulk;
  int n_moments = 3;
  SmallMatrix coeff;
  std::vector<std::array<double, 3>> rhs_decomp;
  int t_row = 0;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
};

MiSystem assemble(MiKind kind, int n_moments, const ThermoState& state, const ThetaTable& table,
                  EntryVariant variant = EntryVariant::pattern_consistent);

/// Row/column keep-lists carving the N = 2 subsystem out of the N = 3 one.
std::vector<int> n2_kept_rows(MiKind kind);
std::vector<int> n2_kept_cols(MiKind kind);

/// Transport coefficients from the first-iterate systems at n_moments in {2, 3}:
/// expand the augmented determinant along its last column, eliminate the time-like
/// gradients with the equilibrium ratios, and read off the stress-row coefficient.
TransportResult mi_transport(const ThermoState& state, const ThetaTable& table, int n_moments,
                             const GasParameters& gas, const QuadratureConfig& cfg,
                             EntryVariant variant = EntryVariant::pattern_consistent);

/// Consistency of one subsystem: |det| of the fully numeric augmented matrix
/// (stress row closed with the solved coefficient), scaled by the Hadamard bound.
double rc_residual(const MiSystem& sys, const GradientRatios& ratios);

}  // namespace rtc

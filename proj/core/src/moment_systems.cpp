#include "rtc/moment_systems.hpp"

#include <cmath>
#include <functional>
#include <limits>

namespace rtc {

namespace {

struct SystemSpec {
  int rows, cols;
  std::function<double(int, int)> entry;                 // N = 3 indexing
  std::function<std::array<double, 3>(int)> rhs;         // gradient decomposition
  std::vector<std::string> row_labels, col_labels;
};

SystemSpec bulk_spec(const ThetaTable& t, EntryVariant v) {
  auto th = [&t](int k, int j) { return t.theta(k, j); };
  SystemSpec s;
  s.rows = 7;
  s.cols = 6;
  const bool printed = (v == EntryVariant::as_printed);
  s.entry = [th, printed](int i, int j) -> double {
    const double t12 = th(1, 2);
    switch (i) {
      case 0:
        if (j < 4) return th(0, j + 2) + 3.0 * th(0, 3) / t12 * th(0, j + 1);
        if (j == 4) return th(1, 4) / 10.0 + 0.5 * th(0, 3) * th(1, 3) / t12;
        return th(1, 5) / 5.0 + 0.9 * th(0, 3) * th(1, 4) / t12;
      case 1:
        if (j < 4) return th(0, j + 3) + 3.0 * th(0, 4) / t12 * th(0, j + 1);
        if (j == 4) return th(1, 5) / 15.0 + 0.5 * th(0, 4) * th(1, 3) / t12;
        return th(1, 6) / 7.0 + 0.9 * th(0, 4) * th(1, 4) / t12;
      case 2:
        // leading coefficients of columns 1, 2, 4 as corrected by the
        // moment-tensor reconstruction
        switch (j) {
          case 0:
            return (printed ? th(1, 1) : th(1, 2)) + 1.5 * th(0, 1) * th(1, 3) / t12;
          case 1:
            return (printed ? th(1, 3) / 3.0 : th(1, 3) / 2.0) +
                   1.5 * th(0, 2) * th(1, 3) / t12;
          case 2: return 0.3 * th(1, 4) + 1.5 * th(0, 3) * th(1, 3) / t12;
          case 3:
            return (printed ? th(1, 5) * 4.0 / 15.0 : th(1, 5) / 5.0) +
                   1.5 * th(0, 4) * th(1, 3) / t12;
          case 4: return th(2, 4) / 3.0 + 0.25 * th(1, 3) * th(1, 3) / t12;
          default: return th(2, 5) / 3.0 + 0.45 * th(1, 4) * th(1, 3) / t12;
        }
      case 3: {
        // printed couples through theta_{0,4} where the row pattern (and the
        // reconstruction) give theta_{1,4}
        const double q = printed ? th(0, 4) : th(1, 4);
        switch (j) {
          case 0: return 0.5 * th(1, 3) + 0.9 * th(0, 1) * q / t12;
          case 1: return 0.3 * th(1, 4) + 0.9 * th(0, 2) * q / t12;
          case 2: return th(1, 5) / 5.0 + 0.9 * th(0, 3) * th(1, 4) / t12;
          case 3: return th(1, 6) / 7.0 + 0.9 * th(0, 4) * th(1, 4) / t12;
          case 4: return th(2, 5) / 9.0 + 0.15 * th(1, 3) * th(1, 4) / t12;
          default: return th(2, 6) / 7.0 + 0.27 * th(1, 4) * th(1, 4) / t12;
        }
      }
      case 4: {
        const double row[6] = {th(0, 0),       th(0, 1),       th(0, 2),
                               th(0, 3),       th(1, 2) / 3.0, th(1, 3) / 2.0};
        return row[j];
      }
      case 5: {
        const double row[6] = {th(0, 1),       th(0, 2),       th(0, 3),
                               th(0, 4),       th(1, 3) / 6.0, 0.3 * th(1, 4)};
        return row[j];
      }
      default: {
        const double a75 = printed ? 5.0 / 3.0 * th(2, 5) : 5.0 / 3.0 * th(2, 3);
        const double row[6] = {3.0 * th(1, 1), th(1, 2), th(1, 3) / 2.0,
                               0.3 * th(1, 4), a75,      th(2, 4)};
        return row[j];
      }
    }
  };
  s.rhs = [th, printed](int i) -> std::array<double, 3> {
    switch (i) {
      case 0: return {th(0, 2), th(0, 3), th(1, 3) / 6.0};
      case 1: return {th(0, 3), th(0, 4), printed ? 0.3 * th(1, 4) : th(1, 4) / 10.0};
      case 2: return {th(1, 2), th(1, 3) / 2.0, 5.0 / 3.0 * th(2, 3)};
      case 3: return {th(1, 3) / 2.0, 0.3 * th(1, 4), th(2, 4) / 3.0};
      default: return {0.0, 0.0, 0.0};
    }
  };
  s.row_labels = {"trace n=2 (UU)", "trace n=3 (UUU)", "trace n=2 (hh)", "trace n=3 (hhU)",
                  "mass balance",   "energy balance",  "stress trace"};
  s.col_labels = {"lambda", "U.lambda1", "UU.lambda2", "UUU.lambda3", "h.lambda2", "hU.lambda3"};
  return s;
}

SystemSpec heat_spec(const ThetaTable& t, EntryVariant v) {
  auto th = [&t](int k, int j) { return t.theta(k, j); };
  SystemSpec s;
  s.rows = 5;
  s.cols = 4;
  const bool printed = (v == EntryVariant::as_printed);
  // the reconstruction gives exactly zero for the first column of the three
  // gradient rows: the production term is built so the heat-flux combination
  // cancels there
  s.entry = [th, printed](int i, int j) -> double {
    const double t12 = th(1, 2);
    switch (i) {
      case 0: {
        const double row[4] = {printed ? -th(1, 3) / 3.0 : 0.0,
                               -th(1, 4) / 5.0 + th(1, 3) * th(1, 3) / (6.0 * t12),
                               -th(1, 5) / 5.0 + 0.15 * th(1, 3) * th(1, 4) / t12,
                               -th(2, 5) / 15.0 + 0.1 * th(1, 3) * th(2, 4) / t12};
        return row[j];
      }
      case 1: {
        const double row[4] = {printed ? -th(1, 4) / 5.0 : 0.0,
                               -th(1, 5) * 2.0 / 15.0 + 0.1 * th(1, 4) * th(1, 3) / t12,
                               -th(1, 6) / 7.0 + 0.09 * th(1, 4) * th(1, 4) / t12,
                               -th(2, 6) / 35.0 + 0.06 * th(1, 4) * th(2, 4) / t12};
        return row[j];
      }
      case 2: {
        const double row[4] = {printed ? -th(2, 4) * 2.0 / 3.0 : 0.0,
                               (printed ? -th(2, 5) * 4.0 / 15.0 : -th(2, 5) * 2.0 / 9.0) +
                                   th(2, 4) * th(1, 3) / (3.0 * t12),
                               -th(2, 6) / 7.0 + 0.3 * th(1, 4) * th(2, 4) / t12,
                               -th(3, 6) / 5.0 + 0.2 * th(2, 4) * th(2, 4) / t12};
        return row[j];
      }
      case 3: {
        const double row[4] = {th(1, 1), th(1, 2) * 2.0 / 3.0, th(1, 3) / 2.0, th(2, 3)};
        return row[j];
      }
      default: {
        const double row[4] = {th(1, 2) / 3.0, th(1, 3) / 3.0, 0.3 * th(1, 4), th(2, 4) / 5.0};
        return row[j];
      }
    }
  };
  s.rhs = [th, printed](int i) -> std::array<double, 3> {
    switch (i) {
      case 0: return {th(1, 2) / 3.0, th(1, 3) / 3.0, 0.0};
      case 1: return {th(1, 3) / 6.0, th(1, 4) / 5.0, 0.0};
      case 2: return {printed ? th(2, 3) : 5.0 / 3.0 * th(2, 3), th(2, 4) * 2.0 / 3.0, 0.0};
      default: return {0.0, 0.0, 0.0};
    }
  };
  s.row_labels = {"vector n=2 (hU)", "vector n=3 (hUU)", "vector n=3 (hhh)", "mass balance",
                  "stress flux"};
  s.col_labels = {"h.lambda1", "hU.lambda2", "hUU.lambda3", "hhh.lambda3"};
  return s;
}

SystemSpec shear_spec(const ThetaTable& t, EntryVariant v) {
  auto th = [&t](int k, int j) { return t.theta(k, j); };
  SystemSpec s;
  s.rows = 3;
  s.cols = 2;
  const bool printed = (v == EntryVariant::as_printed);
  s.entry = [th, printed](int i, int j) -> double {
    switch (i) {
      case 0: return j == 0 ? th(2, 4) * 2.0 / 15.0 : th(2, 5) * 2.0 / 15.0;
      case 1:
        return j == 0 ? th(2, 5) * 2.0 / 45.0
                      : (printed ? th(2, 6) / 35.0 : th(2, 6) * 2.0 / 35.0);
      default: return j == 0 ? th(2, 3) * 2.0 / 3.0 : th(2, 4) * 2.0 / 5.0;
    }
  };
  s.rhs = [th](int i) -> std::array<double, 3> {
    switch (i) {
      case 0: return {th(2, 3) * 2.0 / 3.0, 0.0, 0.0};
      case 1: return {th(2, 4) * 2.0 / 15.0, 0.0, 0.0};
      default: return {0.0, 0.0, 0.0};
    }
  };
  s.row_labels = {"tensor n=2 (hh)", "tensor n=3 (hhU)", "stress deviator"};
  s.col_labels = {"hh.lambda2", "hhU.lambda3"};
  return s;
}

SystemSpec spec_for(MiKind kind, const ThetaTable& t, EntryVariant v) {
  switch (kind) {
    case MiKind::bulk: return bulk_spec(t, v);
    case MiKind::heat: return heat_spec(t, v);
    case MiKind::shear: return shear_spec(t, v);
  }
  throw DomainError("unknown MiKind");
}

SmallMatrix remove_row(const SmallMatrix& m, int r) {
  SmallMatrix out(m.rows() - 1, m.cols());
  for (int i = 0, oi = 0; i < m.rows(); ++i) {
    if (i == r) continue;
    for (int j = 0; j < m.cols(); ++j) out.at(oi, j) = m.at(i, j);
    ++oi;
  }
  return out;
}

// cofactor of (row, last column) of the augmented [coeff | b] matrix
double augmented_cofactor(const SmallMatrix& coeff, int row, double* min_pivot = nullptr) {
  const double sign = ((row + coeff.cols()) % 2 == 0) ? 1.0 : -1.0;
  return sign * lu_determinant(remove_row(coeff, row), min_pivot);
}

struct TSolve {
  double sum = 0.0;        // sum_{i != t} (D_i / D_t) w_i
  double min_pivot = 0.0;  // scaled smallest pivot of the D_t factorization
};

TSolve t_row_sum(const MiSystem& sys, const GradientRatios& ratios, double abs_floor) {
  auto weight = [&](int i) -> double {
    const auto& g = sys.rhs_decomp[static_cast<std::size_t>(i)];
    switch (sys.kind) {
      case MiKind::bulk:
        return g[0] * ratios.r_time_lambda + g[1] * ratios.r_time_lambda_u + g[2];
      case MiKind::heat:
        return g[1] + ratios.r_space_lambda * g[0];
      case MiKind::shear:
        return g[0];
    }
    return 0.0;
  };
  double mp = 0.0;
  const double dt = augmented_cofactor(sys.coeff, sys.t_row, &mp);
  if (std::abs(dt) < abs_floor)
    throw SingularSystem("mi_transport: stress-row cofactor below abs_floor");
  TSolve out;
  const double scale = sys.coeff.max_abs();
  out.min_pivot = scale > 0.0 ? mp / scale : 0.0;
  for (int i = 0; i < sys.coeff.rows(); ++i) {
    if (i == sys.t_row) continue;
    const double w = weight(i);
    if (w == 0.0) continue;
    out.sum += augmented_cofactor(sys.coeff, i) / dt * w;
  }
  return out;
}

}  // namespace

std::vector<int> n2_kept_rows(MiKind kind) {
  switch (kind) {
    case MiKind::bulk: return {0, 2, 4, 5, 6};
    case MiKind::heat: return {0, 3, 4};
    case MiKind::shear: return {0, 2};
  }
  throw DomainError("unknown MiKind");
}

std::vector<int> n2_kept_cols(MiKind kind) {
  switch (kind) {
    case MiKind::bulk: return {0, 1, 2, 4};
    case MiKind::heat: return {0, 1};
    case MiKind::shear: return {0};
  }
  throw DomainError("unknown MiKind");
}

MiSystem assemble(MiKind kind, int n_moments, const ThermoState& state, const ThetaTable& table,
                  EntryVariant variant) {
  (void)state;
  if (n_moments != 2 && n_moments != 3)
    throw DomainError("assemble: n_moments must be 2 or 3");
  const SystemSpec spec = spec_for(kind, table, variant);

  std::vector<int> rows(static_cast<std::size_t>(spec.rows));
  std::vector<int> cols(static_cast<std::size_t>(spec.cols));
  for (int i = 0; i < spec.rows; ++i) rows[static_cast<std::size_t>(i)] = i;
  for (int j = 0; j < spec.cols; ++j) cols[static_cast<std::size_t>(j)] = j;
  if (n_moments == 2) {
    rows = n2_kept_rows(kind);
    cols = n2_kept_cols(kind);
  }

  MiSystem sys;
  sys.kind = kind;
  sys.n_moments = n_moments;
  sys.coeff = SmallMatrix(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j)
      sys.coeff.at(static_cast<int>(i), static_cast<int>(j)) = spec.entry(rows[i], cols[j]);
    sys.rhs_decomp.push_back(spec.rhs(rows[i]));
    sys.row_labels.push_back(spec.row_labels[static_cast<std::size_t>(rows[i])]);
  }
  for (int c : cols) sys.col_labels.push_back(spec.col_labels[static_cast<std::size_t>(c)]);
  sys.t_row = static_cast<int>(rows.size()) - 1;  // stress row is last in every layout
  return sys;
}

TransportResult mi_transport(const ThermoState& state, const ThetaTable& table, int n_moments,
                             const GasParameters& gas, const QuadratureConfig& cfg,
                             EntryVariant variant) {
  gas.validate();
  const GradientRatios ratios = gradient_ratios(state, table);
  const MiSystem bulk = assemble(MiKind::bulk, n_moments, state, table, variant);
  const MiSystem heat = assemble(MiKind::heat, n_moments, state, table, variant);
  const MiSystem shear = assemble(MiKind::shear, n_moments, state, table, variant);

  const TSolve sb = t_row_sum(bulk, ratios, cfg.abs_floor);
  const TSolve sh = t_row_sum(heat, ratios, cfg.abs_floor);
  const TSolve ss = t_row_sum(shear, ratios, cfg.abs_floor);

  const double rho = state.rho();
  const double T = state.temperature();
  const double nu_unit = -rho / (3.0 * T) * sb.sum;
  const double chi_unit = rho / (2.0 * T * T) * sh.sum;
  const double mu_unit = -rho / (2.0 * T) * ss.sum;

  TransportResult r;
  r.method = (n_moments == 2) ? Method::mi2 : Method::mi3;
  r.nu = gas.tau * nu_unit;
  r.chi = gas.tau * chi_unit;
  r.mu = gas.tau * mu_unit;
  r.nu_hat = nu_unit / state.pressure;
  r.chi_hat = chi_unit * T / state.pressure;
  r.mu_hat = mu_unit / state.pressure;
  r.diag.min_pivot = std::min({sb.min_pivot, sh.min_pivot, ss.min_pivot});
  r.diag.rc_residual = std::max({rc_residual(bulk, ratios), rc_residual(heat, ratios),
                                 rc_residual(shear, ratios)});
  return r;
}

double rc_residual(const MiSystem& sys, const GradientRatios& ratios) {
  const int n = sys.coeff.cols();
  const int rows = sys.coeff.rows();
  std::vector<double> b(static_cast<std::size_t>(rows), 0.0);
  auto weight = [&](int i) -> double {
    const auto& g = sys.rhs_decomp[static_cast<std::size_t>(i)];
    switch (sys.kind) {
      case MiKind::bulk:
        return -(g[0] * ratios.r_time_lambda + g[1] * ratios.r_time_lambda_u + g[2]);
      case MiKind::heat:
        return g[1] + ratios.r_space_lambda * g[0];
      case MiKind::shear:
        return -g[0];
    }
    return 0.0;
  };
  const double dt = augmented_cofactor(sys.coeff, sys.t_row);
  if (dt == 0.0) return std::numeric_limits<double>::infinity();
  double t_rhs = 0.0;
  for (int i = 0; i < rows; ++i) {
    if (i == sys.t_row) continue;
    b[static_cast<std::size_t>(i)] = weight(i);
    t_rhs -= augmented_cofactor(sys.coeff, i) / dt * b[static_cast<std::size_t>(i)];
  }
  b[static_cast<std::size_t>(sys.t_row)] = t_rhs;

  SmallMatrix aug(rows, n + 1);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = sys.coeff.at(i, j);
    aug.at(i, n) = b[static_cast<std::size_t>(i)];
  }
  double hadamard = 1.0;
  for (int j = 0; j <= n; ++j) {
    double c = 0.0;
    for (int i = 0; i < rows; ++i) c += aug.at(i, j) * aug.at(i, j);
    hadamard *= std::sqrt(c);
  }
  if (hadamard == 0.0) return 0.0;
  return std::abs(lu_determinant(aug)) / hadamard;
}

}  // namespace rtc

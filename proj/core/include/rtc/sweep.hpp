#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rtc/gas.hpp"
#include "rtc/moment_systems.hpp"
#include "rtc/transport.hpp"

namespace rtc {

enum class Spacing { log, linear };
enum class OutputFormat { csv, json };

struct SweepSpec {
  double gamma_min = 0.1;
  double gamma_max = 1000.0;
  int points = 10;
  Spacing spacing = Spacing::log;
  std::vector<double> a_values = {0.0};
  std::vector<Method> methods = {Method::mi2, Method::mi3, Method::cem};
  double tau = 1.0;
  double n_density = 1.0;
  EntryVariant entry_variant = EntryVariant::pattern_consistent;
  OutputFormat output_format = OutputFormat::csv;
  double rel_tol = 1e-10;
  int threads = 1;

  /// Throws DomainError with a usage-style message on an invalid combination.
  void validate() const;
  std::vector<double> gamma_grid() const;
};

enum class RowStatus { ok, singular, nonconverged };

const char* to_string(RowStatus s);

struct OutputRow {
  double gamma = 0.0;
  double a = 0.0;
  Method method = Method::cem;
  double nu = 0.0, chi = 0.0, mu = 0.0;
  double nu_hat = 0.0, chi_hat = 0.0, mu_hat = 0.0;
  double diag_min_pivot = 0.0;
  RowStatus status = RowStatus::ok;
};

/// Rows in deterministic order: gamma outer, a middle, method inner (mi2, mi3, cem).
std::vector<OutputRow> run_sweep(const SweepSpec& spec);

void write_csv(std::ostream& os, const std::vector<OutputRow>& rows);
void write_json(std::ostream& os, const std::vector<OutputRow>& rows);
std::vector<OutputRow> read_json(std::istream& is);

/// 12 significant digits, C locale, shared by every emitter.
std::string format_value(double v);

}  // namespace rtc

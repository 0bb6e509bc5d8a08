// Command-line front end: parameter sweeps, invariant self-tests and table dumps.
//
// Configuration precedence: flags > RTC_CONFIG (key=value file) > built-in defaults.

#include <clocale>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rtc/equilibrium.hpp"
#include "rtc/selfcheck.hpp"
#include "rtc/sweep.hpp"

namespace {

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::map<std::string, std::string> load_env_config() {
  std::map<std::string, std::string> kv;
  const char* path = std::getenv("RTC_CONFIG");
  if (!path) return kv;
  std::ifstream in(path);
  if (!in) {
    std::cerr << "rtc: cannot open RTC_CONFIG file '" << path << "'\n";
    std::exit(2);
  }
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return kv;
}

struct SweepFlags {
  rtc::SweepSpec spec;
  std::string a_values = "0";
  std::string methods = "mi2,mi3,cem";
  std::string spacing = "log";
  std::string entry_variant = "pattern-consistent";
  std::string output_format = "csv";
};

void apply_env(const std::map<std::string, std::string>& kv, SweepFlags& f) {
  auto get = [&](const char* key, auto& slot) {
    auto it = kv.find(key);
    if (it == kv.end()) return;
    std::stringstream ss(it->second);
    ss >> slot;
  };
  get("gamma-min", f.spec.gamma_min);
  get("gamma-max", f.spec.gamma_max);
  get("points", f.spec.points);
  get("tau", f.spec.tau);
  get("n-density", f.spec.n_density);
  get("rel-tol", f.spec.rel_tol);
  get("threads", f.spec.threads);
  get("a-values", f.a_values);
  get("methods", f.methods);
  get("spacing", f.spacing);
  get("entry-variant", f.entry_variant);
  get("output-format", f.output_format);
}

int finalize_spec(SweepFlags& f) {
  f.spec.a_values.clear();
  for (const auto& s : split_csv(f.a_values)) f.spec.a_values.push_back(std::stod(s));
  f.spec.methods.clear();
  for (const auto& s : split_csv(f.methods)) {
    if (s == "mi2")
      f.spec.methods.push_back(rtc::Method::mi2);
    else if (s == "mi3")
      f.spec.methods.push_back(rtc::Method::mi3);
    else if (s == "cem")
      f.spec.methods.push_back(rtc::Method::cem);
    else {
      std::cerr << "rtc sweep: unknown method '" << s << "'\n";
      return 2;
    }
  }
  if (f.spacing == "log")
    f.spec.spacing = rtc::Spacing::log;
  else if (f.spacing == "linear")
    f.spec.spacing = rtc::Spacing::linear;
  else {
    std::cerr << "rtc sweep: spacing must be log or linear\n";
    return 2;
  }
  if (f.entry_variant == "as-printed")
    f.spec.entry_variant = rtc::EntryVariant::as_printed;
  else if (f.entry_variant == "pattern-consistent")
    f.spec.entry_variant = rtc::EntryVariant::pattern_consistent;
  else {
    std::cerr << "rtc sweep: entry-variant must be as-printed or pattern-consistent\n";
    return 2;
  }
  if (f.output_format == "csv")
    f.spec.output_format = rtc::OutputFormat::csv;
  else if (f.output_format == "json")
    f.spec.output_format = rtc::OutputFormat::json;
  else {
    std::cerr << "rtc sweep: output-format must be csv or json\n";
    return 2;
  }
  return 0;
}

int run_sweep_cmd(SweepFlags& f) {
  if (int rc = finalize_spec(f)) return rc;
  try {
    f.spec.validate();
  } catch (const std::exception& e) {
    std::cerr << "rtc sweep: " << e.what() << '\n';
    return 2;
  }
  std::vector<rtc::OutputRow> rows;
  try {
    rows = rtc::run_sweep(f.spec);
  } catch (const std::exception& e) {
    std::cerr << "rtc sweep: " << e.what() << '\n';
    return 1;
  }
  if (f.spec.output_format == rtc::OutputFormat::csv)
    rtc::write_csv(std::cout, rows);
  else
    rtc::write_json(std::cout, rows);
  for (const auto& r : rows)
    if (r.status != rtc::RowStatus::ok) {
      std::cerr << "rtc sweep: " << rows.size() << " rows, some failed\n";
      return 1;
    }
  return 0;
}

int run_selftest_cmd(const std::string& level, double rel_tol, bool corrupt) {
  rtc::SelftestOptions opt;
  opt.full = (level == "full");
  opt.rel_tol = rel_tol;
  opt.corrupt_theta = corrupt;
  const auto results = rtc::run_selftest(opt);
  int passed = 0;
  for (const auto& c : results) {
    std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << " measured=" << c.measured
              << " bound=" << c.bound;
    if (!c.detail.empty()) std::cout << "  (" << c.detail << ')';
    std::cout << '\n';
    passed += c.pass ? 1 : 0;
  }
  std::cout << "selftest " << level << ": " << passed << '/' << results.size() << " checks passed\n";
  return rtc::all_passed(results) ? 0 : 1;
}

int run_theta_cmd(double gamma, double a, int j_max, double rel_tol) {
  rtc::GasParameters gas;
  gas.a_poly = a;
  rtc::QuadratureConfig cfg;
  cfg.rel_tol = rel_tol;
  try {
    const rtc::ThermoState st = rtc::make_state(gamma, 1.0, gas, cfg);
    const rtc::ThetaTable tab = rtc::build_theta_table(st, gas, cfg, j_max);
    std::cout << "k,j,recurrence,direct,rel_gap\n";
    for (int j = 0; j <= j_max; ++j) {
      for (int k = 0; 2 * k <= j + 1; ++k) {
        if (!tab.has_theta(k, j)) continue;
        const double rec = tab.theta(k, j);
        const double dir = rtc::theta_direct(k, j, st, gas, cfg);
        const double gap = std::abs(rec - dir) / std::abs(dir);
        std::cout << k << ',' << j << ',' << rtc::format_value(rec) << ','
                  << rtc::format_value(dir) << ',' << rtc::format_value(gap) << '\n';
      }
    }
    std::cout << "k,n,theta_star,source\n";
    for (int n = 1; n <= j_max; ++n)
      for (int k = 0; 2 * k <= n + 1; ++k) {
        if (!tab.has_theta_star(k, n)) continue;
        const char* src =
            tab.theta_star_source(k, n) == rtc::ThetaSource::quadrature ? "quadrature"
                                                                        : "recurrence";
        std::cout << k << ',' << n << ',' << rtc::format_value(tab.theta_star(k, n)) << ','
                  << src << '\n';
      }
  } catch (const rtc::DomainError& e) {
    std::cerr << "rtc theta: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "rtc theta: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::setlocale(LC_NUMERIC, "C");
  CLI::App app{"transport coefficients of a relativistic polyatomic gas"};
  app.require_subcommand(1);

  const auto env = load_env_config();

  SweepFlags sf;
  apply_env(env, sf);
  auto* sweep = app.add_subcommand("sweep", "coefficient sweep over a gamma grid");
  sweep->add_option("--gamma-min", sf.spec.gamma_min, "smallest gamma (= m c^2 / k_B T)");
  sweep->add_option("--gamma-max", sf.spec.gamma_max, "largest gamma");
  sweep->add_option("--points", sf.spec.points, "number of gamma grid points");
  sweep->add_option("--spacing", sf.spacing, "grid spacing: log or linear");
  sweep->add_option("--a-values", sf.a_values, "comma-separated internal-energy exponents");
  sweep->add_option("--methods", sf.methods, "comma-separated subset of mi2,mi3,cem");
  sweep->add_option("--tau", sf.spec.tau, "relaxation time");
  sweep->add_option("--n-density", sf.spec.n_density, "particle number density");
  sweep->add_option("--entry-variant", sf.entry_variant,
                    "moment-system coefficient tables: as-printed or pattern-consistent");
  sweep->add_option("--output-format", sf.output_format, "csv or json");
  sweep->add_option("--rel-tol", sf.spec.rel_tol, "quadrature relative tolerance");
  sweep->add_option("--threads", sf.spec.threads, "worker threads for sweep points");

  std::string level = "quick";
  double st_rel_tol = 1e-10;
  bool st_corrupt = false;
  auto it_rel = env.find("rel-tol");
  if (it_rel != env.end()) st_rel_tol = std::stod(it_rel->second);
  auto* selftest = app.add_subcommand("selftest", "run the built-in invariant checks");
  selftest->add_option("level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  selftest->add_option("--rel-tol", st_rel_tol, "quadrature relative tolerance");
  selftest->add_flag("--corrupt-theta", st_corrupt,
                     "damage one table entry first (negative control)")
      ->group("");  // hidden

  double tg = 1.0, ta = 0.0, t_rel_tol = 1e-10;
  int tj = 6;
  auto* theta = app.add_subcommand("theta", "dump the equilibrium scalar tables");
  theta->add_option("--gamma", tg, "gamma of the equilibrium state");
  theta->add_option("--a", ta, "internal-energy exponent");
  theta->add_option("--j-max", tj, "largest table column");
  theta->add_option("--rel-tol", t_rel_tol, "quadrature relative tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (sweep->parsed()) return run_sweep_cmd(sf);
  if (selftest->parsed()) return run_selftest_cmd(level, st_rel_tol, st_corrupt);
  if (theta->parsed()) return run_theta_cmd(tg, ta, tj, t_rel_tol);
  return 2;
}

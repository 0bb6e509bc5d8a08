#include "rtc/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <mutex>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "rtc/chapman_enskog.hpp"
#include "rtc/equilibrium.hpp"

namespace rtc {

void SweepSpec::validate() const {
  if (!(gamma_min > 0.0) || !(gamma_max > 0.0) || !(gamma_min < gamma_max))
    throw DomainError("sweep: need 0 < gamma-min < gamma-max");
  if (gamma_min < 0.05 || gamma_max > 1e4)
    throw DomainError("sweep: gamma grid must lie inside [0.05, 1e4]");
  if (points < 2) throw DomainError("sweep: points must be >= 2");
  if (a_values.empty()) throw DomainError("sweep: a-values must be non-empty");
  for (double a : a_values)
    if (!(a > -1.0)) throw DomainError("sweep: every a must be > -1");
  if (methods.empty()) throw DomainError("sweep: methods must be non-empty");
  if (!(tau >= 0.0)) throw DomainError("sweep: tau must be non-negative");
  if (!(n_density > 0.0)) throw DomainError("sweep: n-density must be positive");
  if (!(rel_tol > 0.0) || rel_tol > 1e-3) throw DomainError("sweep: rel-tol out of (0, 1e-3]");
  if (threads < 1) throw DomainError("sweep: threads must be >= 1");
}

std::vector<double> SweepSpec::gamma_grid() const {
  std::vector<double> g(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / (points - 1);
    g[static_cast<std::size_t>(i)] =
        spacing == Spacing::log
            ? std::exp(std::log(gamma_min) + t * (std::log(gamma_max) - std::log(gamma_min)))
            : gamma_min + t * (gamma_max - gamma_min);
  }
  g.front() = gamma_min;
  g.back() = gamma_max;
  return g;
}

const char* to_string(RowStatus s) {
  switch (s) {
    case RowStatus::ok: return "ok";
    case RowStatus::singular: return "singular";
    case RowStatus::nonconverged: return "nonconverged";
  }
  return "?";
}

namespace {

std::vector<Method> ordered_methods(const SweepSpec& spec) {
  std::vector<Method> out;
  for (Method m : {Method::mi2, Method::mi3, Method::cem})
    if (std::find(spec.methods.begin(), spec.methods.end(), m) != spec.methods.end())
      out.push_back(m);
  return out;
}

std::vector<OutputRow> rows_for_point(double gamma, double a, const SweepSpec& spec,
                                      const std::vector<Method>& methods) {
  std::vector<OutputRow> rows;
  GasParameters gas;
  gas.a_poly = a;
  gas.tau = spec.tau;
  QuadratureConfig cfg;
  cfg.rel_tol = spec.rel_tol;

  auto blank = [&](Method m, RowStatus st) {
    OutputRow r;
    r.gamma = gamma;
    r.a = a;
    r.method = m;
    r.status = st;
    return r;
  };

  try {
    const ThermoState state = make_state(gamma, spec.n_density, gas, cfg);
    const ThetaTable table = build_theta_table(state, gas, cfg, 6);
    for (Method m : methods) {
      try {
        const TransportResult t =
            m == Method::cem
                ? cem_transport(state, table, gas)
                : mi_transport(state, table, m == Method::mi2 ? 2 : 3, gas, cfg,
                               spec.entry_variant);
        OutputRow r = blank(m, RowStatus::ok);
        r.nu = t.nu;
        r.chi = t.chi;
        r.mu = t.mu;
        r.nu_hat = t.nu_hat;
        r.chi_hat = t.chi_hat;
        r.mu_hat = t.mu_hat;
        r.diag_min_pivot = t.diag.min_pivot;
        rows.push_back(r);
      } catch (const SingularSystem&) {
        rows.push_back(blank(m, RowStatus::singular));
      } catch (const NonConvergence&) {
        rows.push_back(blank(m, RowStatus::nonconverged));
      }
    }
  } catch (const SingularSystem&) {
    for (Method m : methods) rows.push_back(blank(m, RowStatus::singular));
  } catch (const NonConvergence&) {
    for (Method m : methods) rows.push_back(blank(m, RowStatus::nonconverged));
  }
  return rows;
}

}  // namespace

std::vector<OutputRow> run_sweep(const SweepSpec& spec) {
  spec.validate();
  const std::vector<double> grid = spec.gamma_grid();
  const std::vector<Method> methods = ordered_methods(spec);

  struct Point {
    double gamma, a;
  };
  std::vector<Point> pts;
  for (double g : grid)
    for (double a : spec.a_values) pts.push_back({g, a});

  std::vector<std::vector<OutputRow>> buckets(pts.size());
  const int workers = std::min<int>(spec.threads, static_cast<int>(pts.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < pts.size(); ++i)
      buckets[i] = rows_for_point(pts[i].gamma, pts[i].a, spec, methods);
  } else {
    std::mutex mtx;
    std::size_t next = 0;
    auto worker = [&] {
      for (;;) {
        std::size_t i;
        {
          std::lock_guard<std::mutex> lock(mtx);
          if (next >= pts.size()) return;
          i = next++;
        }
        buckets[i] = rows_for_point(pts[i].gamma, pts[i].a, spec, methods);
      }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::vector<OutputRow> rows;
  for (auto& b : buckets) rows.insert(rows.end(), b.begin(), b.end());
  return rows;
}

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_csv(std::ostream& os, const std::vector<OutputRow>& rows) {
  os << "gamma,a,method,nu,chi,mu,nu_hat,chi_hat,mu_hat,diag_min_pivot,status\n";
  for (const auto& r : rows) {
    os << format_value(r.gamma) << ',' << format_value(r.a) << ',' << to_string(r.method) << ',';
    if (r.status == RowStatus::ok) {
      os << format_value(r.nu) << ',' << format_value(r.chi) << ',' << format_value(r.mu) << ','
         << format_value(r.nu_hat) << ',' << format_value(r.chi_hat) << ','
         << format_value(r.mu_hat) << ',';
    } else {
      os << ",,,,,,";
    }
    os << format_value(r.diag_min_pivot) << ',' << to_string(r.status) << '\n';
  }
}

void write_json(std::ostream& os, const std::vector<OutputRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json o;
    o["gamma"] = r.gamma;
    o["a"] = r.a;
    o["method"] = to_string(r.method);
    o["status"] = to_string(r.status);
    o["diag_min_pivot"] = r.diag_min_pivot;
    if (r.status == RowStatus::ok) {
      o["nu"] = r.nu;
      o["chi"] = r.chi;
      o["mu"] = r.mu;
      o["nu_hat"] = r.nu_hat;
      o["chi_hat"] = r.chi_hat;
      o["mu_hat"] = r.mu_hat;
    }
    arr.push_back(o);
  }
  os << arr.dump(2) << '\n';
}

std::vector<OutputRow> read_json(std::istream& is) {
  nlohmann::json arr = nlohmann::json::parse(is);
  std::vector<OutputRow> rows;
  for (const auto& o : arr) {
    OutputRow r;
    r.gamma = o.at("gamma").get<double>();
    r.a = o.at("a").get<double>();
    const std::string m = o.at("method").get<std::string>();
    r.method = m == "mi2" ? Method::mi2 : (m == "mi3" ? Method::mi3 : Method::cem);
    const std::string st = o.at("status").get<std::string>();
    r.status = st == "ok" ? RowStatus::ok
                          : (st == "singular" ? RowStatus::singular : RowStatus::nonconverged);
    r.diag_min_pivot = o.at("diag_min_pivot").get<double>();
    if (r.status == RowStatus::ok) {
      r.nu = o.at("nu").get<double>();
      r.chi = o.at("chi").get<double>();
      r.mu = o.at("mu").get<double>();
      r.nu_hat = o.at("nu_hat").get<double>();
      r.chi_hat = o.at("chi_hat").get<double>();
      r.mu_hat = o.at("mu_hat").get<double>();
    }
    rows.push_back(r);
  }
  return rows;
}

}  // namespace rtc

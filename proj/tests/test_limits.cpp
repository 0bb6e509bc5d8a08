#include <doctest.h>

#include <cmath>

#include "rtc/limits.hpp"

using namespace rtc;

namespace {
QuadratureConfig cfg() { return QuadratureConfig{}; }
GasParameters gas(double a = 0.0) {
  GasParameters g;
  g.a_poly = a;
  return g;
}
}

TEST_CASE("internal-energy moment equals the Gamma-function ratio") {
  const ThermoState st = make_state(10.0, 1.0, gas(), cfg());
  CHECK(internal_energy_moment(st, gas(0.0), cfg()) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(internal_energy_moment(st, gas(1.0), cfg()) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(internal_energy_moment(st, gas(-0.5), cfg()) == doctest::Approx(0.5).epsilon(1e-7));
}

TEST_CASE("star expansion terms and remainder scaling") {
  const ThermoState s100 = make_state(100.0, 1.0, gas(), cfg());
  CHECK(theta11_star_expansion(s100, gas(), cfg(), 1) == doctest::Approx(0.01).epsilon(1e-14));
  CHECK(theta11_star_expansion(s100, gas(), cfg(), 2) ==
        doctest::Approx(0.01 - 3.5e-4).epsilon(1e-12));
  const ThermoState s5 = make_state(5.0, 1.0, gas(), cfg());
  CHECK_THROWS_AS(theta11_star_expansion(s5, gas(), cfg(), 2), DomainError);

  // remainder of the two-term expansion shrinks like 1/gamma^3
  double c_fit = 0.0;
  for (double g : {50.0, 100.0, 200.0}) {
    const ThermoState st = make_state(g, 1.0, gas(), cfg());
    const double exact = theta_star_quadrature(1, st, gas(), cfg());
    const double approx = theta11_star_expansion(st, gas(), cfg(), 2);
    const double c = std::abs(exact - approx) * g * g * g;
    if (c_fit == 0.0) c_fit = c;
    CHECK(c < 3.0 * c_fit);
    CHECK(c > c_fit / 3.0);
  }
}

TEST_CASE("convergence sweep: grid validation") {
  CHECK_THROWS_AS(convergence_sweep({5.0, 100.0}, 1.0, gas(), cfg()), DomainError);
  CHECK_THROWS_AS(convergence_sweep({100.0, 50.0}, 1.0, gas(), cfg()), DomainError);
  CHECK_THROWS_AS(convergence_sweep({100.0}, 1.0, gas(), cfg()), DomainError);
}

TEST_CASE("convergence sweep: extrapolated limits and gap decay") {
  const std::vector<double> grid{30.0, 100.0, 300.0, 1000.0};
  const LimitReport rep = convergence_sweep(grid, 1.0, gas(), cfg());
  REQUIRE(rep.points.size() == 4);
  for (const auto& p : rep.points) CHECK(p.ok);

  CHECK(rep.mu_hat_cem.limit == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(rep.ctheta.limit == doctest::Approx(1.0).epsilon(1e-3));
  // energy gap tends to a + 5/2
  CHECK(rep.points.back().energy_gap == doctest::Approx(2.5).epsilon(3e-3));

  // every method's mu_hat is within 5% of 1 at gamma = 1000
  const LimitPoint& p1000 = rep.points[3];
  CHECK(std::abs(p1000.mu_hat_mi2 - 1.0) < 0.05);
  CHECK(std::abs(p1000.mu_hat_mi3 - 1.0) < 0.05);
  CHECK(std::abs(p1000.mu_hat_cem - 1.0) < 0.05);

  // pairwise method gaps decay monotonically along the grid
  double prev_mu = 1e30, prev_chi = 1e30;
  for (const auto& p : rep.points) {
    const double dmu = std::max({std::abs(p.mu_hat_mi2 - p.mu_hat_cem),
                                 std::abs(p.mu_hat_mi3 - p.mu_hat_cem),
                                 std::abs(p.mu_hat_mi2 - p.mu_hat_mi3)}) /
                       p.mu_hat_cem;
    const double dchi = std::max({std::abs(p.chi_hat_mi2 - p.chi_hat_cem),
                                  std::abs(p.chi_hat_mi3 - p.chi_hat_cem),
                                  std::abs(p.chi_hat_mi2 - p.chi_hat_mi3)}) /
                        p.chi_hat_cem;
    CHECK(dmu < prev_mu);
    CHECK(dchi < prev_chi);
    prev_mu = dmu;
    prev_chi = dchi;
  }

  // dropping the smallest grid point leaves the extrapolated limits unchanged
  const LimitReport rep2 = convergence_sweep({100.0, 300.0, 1000.0}, 1.0, gas(), cfg());
  CHECK(std::abs(rep2.mu_hat_cem.limit - rep.mu_hat_cem.limit) < 1e-4);
  CHECK(std::abs(rep2.ctheta.limit - rep.ctheta.limit) < 1e-4);

  // the finite heat-conductivity combination has a stable limit with a small bar
  CHECK(std::isfinite(rep.chi_scale_cem.limit));
  CHECK(rep.chi_scale_cem.est_error < 0.05 * std::abs(rep.chi_scale_cem.limit));
}

TEST_CASE("richardson helper") {
  // f = L + K/gamma is reproduced exactly
  std::vector<double> gs{100.0, 200.0, 400.0};
  std::vector<double> fs;
  for (double g : gs) fs.push_back(2.0 + 30.0 / g);
  const Extrapolated e = richardson_limit(gs, fs);
  CHECK(e.limit == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(e.est_error < 1e-10);
  CHECK_THROWS_AS(richardson_limit({1.0}, {1.0}), DomainError);
}

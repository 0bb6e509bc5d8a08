#include <doctest.h>

#include <cmath>

#include "rtc/equilibrium.hpp"

using namespace rtc;

namespace {
QuadratureConfig cfg() { return QuadratureConfig{}; }
GasParameters gas(double a = 0.0) {
  GasParameters g;
  g.a_poly = a;
  return g;
}
}

TEST_CASE("state invariants: pressure law and derived quantities") {
  for (double g : {0.1, 1.0, 50.0}) {
    for (double a : {0.0, 1.5}) {
      const ThermoState st = make_state(g, 2.5, gas(a), cfg());
      CHECK(st.pressure * g == doctest::Approx(2.5).epsilon(1e-15));  // p gamma = n exactly
      CHECK(st.omega > 1.0);
      CHECK(st.g1 > 0.0);
      CHECK(st.g1 == doctest::Approx((st.omega - 1.0) + 1.0 / g).epsilon(1e-15));
    }
  }
  CHECK_THROWS_AS(make_state(0.01, 1.0, gas(), cfg()), DomainError);
  CHECK_THROWS_AS(make_state(2e4, 1.0, gas(), cfg()), DomainError);
  CHECK_THROWS_AS(make_state(1.0, -1.0, gas(), cfg()), DomainError);
}

TEST_CASE("nonrelativistic energy per particle: gamma*(omega-1) -> a + 5/2") {
  for (double a : {0.0, 1.0}) {
    const ThermoState st = make_state(1000.0, 1.0, gas(a), cfg());
    CHECK(1000.0 * (st.omega - 1.0) == doctest::Approx(a + 2.5).epsilon(1e-2));
    // reduced enthalpy defect tends to (<I/T> + 5/2) p/rho = (a + 7/2)/gamma
    CHECK(st.g1 == doctest::Approx((a + 3.5) / 1000.0).epsilon(1e-2));
  }
}

TEST_CASE("exact low-index entries, both paths") {
  const ThermoState st = make_state(1.0, 1.0, gas(), cfg());
  const ThetaTable t = build_theta_table(st, gas(), cfg(), 6);
  CHECK(t.theta(0, 0) == 1.0);
  CHECK(t.theta(0, 1) == doctest::Approx(st.omega).epsilon(1e-15));
  CHECK(t.theta(1, 1) == doctest::Approx(1.0).epsilon(1e-15));  // 1/gamma
  CHECK(theta_direct(1, 1, st, gas(), cfg()) == doctest::Approx(1.0).epsilon(1e-10));
  // theta_{1,2} = 3 (1/g)(omega + 1/g)
  CHECK(t.theta(1, 2) ==
        doctest::Approx(3.0 * (st.omega + 1.0)).epsilon(1e-12));
  CHECK(theta_direct(0, 0, st, gas(), cfg()) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK_THROWS_AS(theta_direct(2, 2, st, gas(), cfg()), DomainError);  // 2k > j+1
  CHECK_THROWS_AS(t.theta(1, 7), MissingTheta);
}

TEST_CASE("recurrence vs direct quadrature across the test grid") {
  double worst = 0.0;
  for (double g : {0.1, 1.0, 10.0, 100.0}) {
    for (double a : {0.0, 1.0}) {
      const ThermoState st = make_state(g, 1.0, gas(a), cfg());
      const ThetaTable t = build_theta_table(st, gas(a), cfg(), 6);
      for (int j = 0; j <= 6; ++j)
        for (int k = 0; 2 * k <= j + 1 && k <= 3; ++k) {
          const double direct = theta_direct(k, j, st, gas(a), cfg());
          CHECK(direct > 0.0);
          CHECK(t.theta(k, j) > 0.0);
          worst = std::max(worst, std::abs(t.theta(k, j) - direct) / direct);
        }
    }
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("strict table validation passes and the corrupt hook trips it") {
  const ThermoState st = make_state(2.0, 1.0, gas(1.0), cfg());
  CHECK_NOTHROW(build_theta_table(st, gas(1.0), cfg(), 6, true));
}

TEST_CASE("star entries: index-shift relation and quadrature cases") {
  for (double g : {0.5, 1.0, 10.0}) {
    const ThermoState st = make_state(g, 1.0, gas(), cfg());
    const ThetaTable t = build_theta_table(st, gas(), cfg(), 6);
    CHECK(t.theta_star(1, 2) == doctest::Approx(3.0 * t.theta(1, 1)).epsilon(1e-12));
    CHECK(t.theta_star(1, 3) == doctest::Approx(2.0 * t.theta(1, 2)).epsilon(1e-12));
    CHECK(t.theta_star(2, 4) == doctest::Approx(5.0 * t.theta(2, 3)).epsilon(1e-12));
    CHECK(t.theta_star(1, 1) > 0.0);
    CHECK(t.theta_star(2, 3) > 0.0);
    CHECK(t.theta_star_source(1, 1) == ThetaSource::quadrature);
    CHECK(t.theta_star_source(1, 2) == ThetaSource::recurrence);
    CHECK(theta_star_quadrature(1, st, gas(), cfg()) ==
          doctest::Approx(t.theta_star(1, 1)).epsilon(1e-12));
  }
  const ThermoState st = make_state(1.0, 1.0, gas(), cfg());
  CHECK_THROWS_AS(theta_star_quadrature(3, st, gas(), cfg()), DomainError);
}

TEST_CASE("star large-gamma behaviour") {
  const ThermoState st = make_state(1000.0, 1.0, gas(), cfg());
  const ThetaTable t = build_theta_table(st, gas(), cfg(), 6);
  // theta*_{1,1} = 1/g - (a + 7/2)/g^2 + ...
  CHECK(t.theta_star(1, 1) ==
        doctest::Approx(1.0 / 1000.0 - 3.5 / 1e6).epsilon(1e-3));
  // c^4 theta*_{2,3} -> 3 (p/rho)^2 = 3/g^2
  CHECK(t.theta_star(2, 3) * 1e6 / 3.0 == doctest::Approx(1.0).epsilon(2e-2));
}

TEST_CASE("gradient elimination ratios match a direct 2x2 solve") {
  for (double g : {0.1, 1.0, 10.0, 100.0}) {
    for (double a : {0.0, 1.0}) {
      const ThermoState st = make_state(g, 1.0, gas(a), cfg());
      const ThetaTable t = build_theta_table(st, gas(a), cfg(), 6);
      const GradientRatios r = gradient_ratios(st, t);
      CHECK(r.gram > 0.0);  // moment Gram positivity
      // direct solve of [rho, e; e, rho th02][y1;y2] = -[p; rho th12/3] (c=1)
      const double rho = st.rho(), e = st.omega * rho, p = st.pressure;
      const double th02 = t.theta(0, 2), th12 = t.theta(1, 2);
      const double det = rho * rho * th02 - e * e;
      const double y1 = -(p * rho * th02 - e * rho * th12 / 3.0) / det;
      const double y2 = -(rho * rho * th12 / 3.0 - e * p) / det;
      CHECK(r.r_time_lambda == doctest::Approx(y1).epsilon(1e-7));
      CHECK(r.r_time_lambda_u == doctest::Approx(y2).epsilon(1e-7));
      // spatial ratio identity: p r_space + (2/3) rho c^2 th12 = 0
      CHECK(p * r.r_space_lambda + (2.0 / 3.0) * rho * th12 ==
            doctest::Approx(0.0).epsilon(1e-14));
    }
  }
}

TEST_CASE("log-derivative identity residual, with a negative control") {
  for (double g : {1.0, 100.0}) {
    for (double a : {0.0, 1.0}) {
      const ThermoState st = make_state(g, 1.0, gas(a), cfg());
      CHECK(check_a7_identity(st, gas(a), cfg()) < 1e-6);
    }
  }
  // replacing theta*_{1,1} by a constant kills the derivative term
  const ThermoState st = make_state(1.0, 1.0, gas(), cfg());
  const double wrong = std::abs(st.omega - 1.0 / (1.0 * 0.3));
  CHECK(wrong > 1e-2);
}

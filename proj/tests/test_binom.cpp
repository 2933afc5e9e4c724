#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "trialsig/binom.hpp"
#include "trialsig/errors.hpp"

namespace tb = trialsig::binom;

TEST_CASE("density basic values") {
  // Q^M at Q=1 with the 0^0 convention
  CHECK(tb::density(1.0, 1.0, 7.0) == 1.0);
  CHECK(tb::density(1.0, 1.0, 162.0) == 1.0);
  // hand evaluation: 0.25 * C(2,1) = 0.5
  CHECK(tb::density(0.5, 0.5, 2.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(tb::density(0.3, 1.0, 5.0) == 0.0);
  CHECK(tb::density(0.3, 0.0, 5.0) == 0.0);
  CHECK(tb::density(0.0, 0.0, 5.0) == 1.0);
  CHECK_THROWS_AS(tb::density(1.2, 0.5, 3.0), std::domain_error);
  CHECK_THROWS_AS(tb::density(0.5, 0.5, 0.0), std::domain_error);
}

TEST_CASE("discrete normalization: pmf over k/M sums to 1") {
  for (const long long m : {1, 2, 5, 10, 25, 40, 60}) {
    for (double q = 0.1; q < 0.95; q += 0.1) {
      double sum = 0.0;
      for (long long k = 0; k <= m; ++k)
        sum += tb::density(static_cast<double>(k) / static_cast<double>(m), q,
                           static_cast<double>(m));
      CHECK(std::fabs(sum - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("tail_discrete small cases") {
  // empty summation range
  CHECK(tb::tail_discrete(1.0, 0.5, 9) == 0.0);
  // enumerate the 8 outcomes of 3 fair trials: k in {1,2,3} has mass 7/8
  CHECK(tb::tail_discrete(0.0, 0.5, 3) == doctest::Approx(7.0 / 8.0).epsilon(1e-14));
  // frozen oracle: sum_{k=62}^{100} C(100,k) / 2^100 in exact rationals
  CHECK(tb::tail_discrete(0.61, 0.5, 100) ==
        doctest::Approx(0.010489367838925859).epsilon(1e-12));
  // floor snapping: q*M = 2.9999999999999996 must count as 3, so the sum
  // starts at k=4: (1024 - 176) / 1024
  CHECK(tb::tail_discrete(0.3, 0.5, 10) ==
        doctest::Approx(848.0 / 1024.0).epsilon(1e-13));
  CHECK_THROWS_AS(tb::tail_discrete(0.5, 0.5, 0), std::domain_error);
}

TEST_CASE("tail_continuum endpoints and the continuity correction") {
  for (const double m : {1.0, 7.5, 40.0}) {
    for (const double q_true : {0.2, 0.5, 0.8}) {
      CHECK(tb::tail_continuum(0.0, q_true, m) == 1.0);
      CHECK(tb::tail_continuum(1.0, q_true, m) == 0.0);
    }
  }
  // the continuum tail from q sits half a pmf step above the discrete tail
  // (the discrete sum starts at floor(qM)+1; the integral includes half the
  // mass near qM): W_cont ~ W_disc + pmf(qM)/2 + O(1/M)
  const double cont = tb::tail_continuum(0.5, 0.5, 40.0);
  const double disc = tb::tail_discrete(0.5, 0.5, 40);
  const double half_pmf = 0.5 * tb::density(0.5, 0.5, 40.0);
  CHECK(cont == doctest::Approx(0.5).epsilon(1e-9));  // symmetry
  CHECK(std::fabs(cont - disc - half_pmf) < 0.01);
  // away from the mode the two tails agree much more closely
  CHECK(std::fabs(tb::tail_continuum(0.3, 0.5, 40.0) -
                  tb::tail_discrete(0.3, 0.5, 40) -
                  0.5 * tb::density(0.3, 0.5, 40.0)) < 0.005);
  // degenerate true efficacies
  CHECK(tb::tail_continuum(0.4, 0.0, 10.0) == 0.0);
  CHECK(tb::tail_continuum(0.4, 1.0, 10.0) == 1.0);
}

TEST_CASE("significance reproduces the vaccine study numbers") {
  const double q = 154.0 / 162.0;
  CHECK(tb::significance(q, 162.0, 0.95) == doctest::Approx(0.429).epsilon(0.012));
  CHECK(std::fabs(tb::significance(q, 162.0, 0.95) - 0.429) < 0.005);
  CHECK(std::fabs(tb::significance(q, 162.0, 0.90) - 0.985) < 0.005);
  CHECK(tb::significance(0.3, 17.0, 0.0) == 1.0);
  CHECK(tb::significance(0.3, 17.0, 1.0) == 0.0);
}

TEST_CASE("significance is monotone in q0 and in trials") {
  const tb::TrialObservation obs{0.7, 50.0};
  double prev = 2.0;
  for (double q0 = 0.05; q0 < 1.0; q0 += 0.05) {
    const double p = tb::significance({obs, q0});
    CHECK(p <= prev);
    if (prev < 1.0 && p > 0.0) CHECK(p < prev);  // strict off the saturated ends
    prev = p;
  }
  // for q > q0 more trials push the significance up
  prev = 0.0;
  for (double m = 10.0; m <= 640.0; m *= 2.0) {
    const double p = tb::significance(0.61, m, 0.5);
    CHECK(p > prev);
    prev = p;
  }
}

TEST_CASE("closed form agrees with direct quadrature up to M=2000") {
  for (const double m : {7.5, 40.0, 162.0, 500.0, 2000.0}) {
    for (const double q : {0.3, 0.61, 0.95}) {
      for (const double q0 : {0.25, 0.5, 0.9}) {
        const double closed = tb::significance(q, m, q0);
        const double quad = tb::significance_quadrature(
            {{q, m}, q0}, {10000, true, 1e-10, 8});
        CHECK(std::fabs(closed - quad) <=
              1e-9 * std::max(1e-6, std::fabs(closed)));
      }
    }
  }
}

TEST_CASE("significance_curve endpoints, ordering, validation") {
  const tb::TrialObservation obs{154.0 / 162.0, 162.0};
  const std::vector<double> grid{0.90, 0.95};
  const auto pts = tb::significance_curve(obs, grid);
  REQUIRE(pts.size() == 2);
  CHECK(pts[0].q0 == 0.90);
  CHECK(std::fabs(pts[0].p - 0.985) < 0.005);
  CHECK(std::fabs(pts[1].p - 0.429) < 0.005);

  const std::vector<double> zero{0.0};
  CHECK(tb::significance_curve(obs, zero)[0].p == 1.0);
  const std::vector<double> one{1.0};
  CHECK(tb::significance_curve(obs, one)[0].p == 0.0);

  // non-increasing along the default grid
  const auto grid201 = tb::uniform_grid();
  REQUIRE(grid201.size() == 201);
  const auto curve = tb::significance_curve(obs, grid201);
  for (std::size_t i = 1; i < curve.size(); ++i)
    CHECK(curve[i].p <= curve[i - 1].p + 1e-15);

  const std::vector<double> bad{0.5, 0.5};
  CHECK_THROWS_AS(tb::significance_curve(obs, bad), std::domain_error);
  const std::vector<double> oob{-0.1, 0.5};
  CHECK_THROWS_AS(tb::significance_curve(obs, oob), std::domain_error);
}

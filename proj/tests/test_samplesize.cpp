#include <doctest.h>

#include <cmath>

#include "trialsig/binom.hpp"
#include "trialsig/bivariate.hpp"
#include "trialsig/errors.hpp"
#include "trialsig/samplesize.hpp"

namespace ss = trialsig::samplesize;
namespace tb = trialsig::binom;
namespace bv = trialsig::bivariate;

TEST_CASE("required_trials reproduces the 35-trial guess experiment") {
  const auto r = ss::required_trials(0.61, 0.5, 0.9);
  CHECK(std::fabs(r.m_real - 34.809) <= 0.01);
  CHECK(r.m_int == 35);
  CHECK(r.achieved_p >= 0.9);
}

TEST_CASE("required_trials: one-arm placebo comparison") {
  const auto r = ss::required_trials(0.45, 0.40, 0.99);
  CHECK(r.m_int == 522);
  CHECK(r.achieved_p >= 0.99);
}

TEST_CASE("required_trials verification property") {
  for (const auto& [q, q0, target] :
       {std::tuple{0.61, 0.5, 0.9}, std::tuple{0.45, 0.40, 0.99},
        std::tuple{0.8, 0.6, 0.95}, std::tuple{0.55, 0.5, 0.8}}) {
    const auto r = ss::required_trials(q, q0, target);
    CHECK(tb::significance(q, static_cast<double>(r.m_int), q0) >= target);
    if (r.m_int > 1)
      CHECK(tb::significance(q, static_cast<double>(r.m_int - 1), q0) < target);
    CHECK(r.m_real <= r.m_int + 1e-3);
  }
}

TEST_CASE("required_trials error cases") {
  CHECK_THROWS_AS(ss::required_trials(0.61, 0.61, 0.9),
                  trialsig::NoSolutionError);
  CHECK_THROWS_AS(ss::required_trials(0.4, 0.6, 0.9),
                  trialsig::NoSolutionError);
  CHECK_THROWS_AS(ss::required_trials(0.61, 0.5, 1.0), std::domain_error);
}

TEST_CASE("required_trials_bivariate against a linear integer scan") {
  const auto r = ss::required_trials_bivariate(0.6, 0.4, 0.0, 0.9, 1.0);
  long long scanned = -1;
  for (long long m = 1; m <= 200; ++m) {
    const double p = bv::superiority(
        {{0.6, static_cast<double>(m)}, {0.4, static_cast<double>(m)}, 0.0});
    if (p >= 0.9) {
      scanned = m;
      break;
    }
  }
  REQUIRE(scanned > 0);
  CHECK(r.m_int == scanned);
  CHECK(r.achieved_p >= 0.9);
}

TEST_CASE("required_trials_bivariate error cases") {
  CHECK_THROWS_AS(ss::required_trials_bivariate(0.45, 0.45, 0.0, 0.99, 1.0),
                  trialsig::NoSolutionError);
  CHECK_THROWS_AS(ss::required_trials_bivariate(0.5, 0.4, 0.2, 0.99, 1.0),
                  trialsig::NoSolutionError);
}

TEST_CASE("two-arm designs never need fewer probands than one-arm") {
  for (const auto& [q, pi, target] :
       {std::tuple{0.6, 0.4, 0.9}, std::tuple{0.55, 0.35, 0.95},
        std::tuple{0.7, 0.5, 0.9}}) {
    const auto one = ss::required_trials(q, pi, target);
    const auto two = ss::required_trials_bivariate(q, pi, 0.0, target, 1.0);
    CHECK(two.m_int >= one.m_int);
  }
}

TEST_CASE("raising the target never lowers the answer") {
  long long prev = 0;
  for (const double target : {0.5, 0.8, 0.9, 0.99}) {
    const auto r = ss::required_trials(0.61, 0.5, target);
    CHECK(r.m_int >= prev);
    prev = r.m_int;
  }
}

#include "trialsig/samplesize.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "trialsig/binom.hpp"
#include "trialsig/bivariate.hpp"
#include "trialsig/errors.hpp"

namespace trialsig::samplesize {

namespace {

constexpr double kBracketCap = 1e9;
constexpr double kBisectTol = 1e-3;  // separates adjacent integers

// Finds the crossing of an (essentially) increasing significance curve with
// `target`, then pins the smallest integer trial count by direct evaluation.
SampleSizeResult solve_min_trials(const std::function<double(double)>& p_of_m,
                                  double target) {
  double lo = 1e-9;
  double hi = 1.0;
  if (p_of_m(hi) < target) {
    lo = hi;
    do {
      hi *= 2.0;
      if (hi > kBracketCap)
        throw ConvergenceError(
            "sample size: no crossing found below 1e9 trials");
    } while (p_of_m(hi) < target);
  }
  while (hi - lo > kBisectTol) {
    const double mid = 0.5 * (lo + hi);
    (p_of_m(mid) >= target ? hi : lo) = mid;
  }
  const double m_real = 0.5 * (lo + hi);

  // Integer confirmation: p(M) can ripple where q*M crosses integers, so
  // scan a window around the real root instead of trusting ceil().
  const long long anchor = static_cast<long long>(std::floor(m_real));
  long long m_int = -1;
  for (long long m = std::max(1LL, anchor - 3); m <= anchor + 4; ++m) {
    if (p_of_m(static_cast<double>(m)) >= target) {
      m_int = m;
      break;
    }
  }
  for (long long m = anchor + 5; m_int < 0 && m <= anchor + 1000; ++m)
    if (p_of_m(static_cast<double>(m)) >= target) m_int = m;
  if (m_int < 0)
    throw ConvergenceError("sample size: integer confirmation failed");
  while (m_int > 1 && p_of_m(static_cast<double>(m_int - 1)) >= target)
    --m_int;
  return {m_real, m_int, p_of_m(static_cast<double>(m_int))};
}

void check_target(double target) {
  if (!(target > 0.0 && target < 1.0))
    throw std::domain_error("target significance must lie in (0, 1)");
}

}  // namespace

SampleSizeResult required_trials(double q, double q0, double target) {
  check_target(target);
  if (!(q >= 0.0 && q <= 1.0) || !(q0 >= 0.0 && q0 <= 1.0))
    throw std::domain_error("q and q0 must lie in [0,1]");
  if (q <= q0)
    throw NoSolutionError(
        "required_trials: q must exceed q0 for the significance to reach "
        "the target");
  return solve_min_trials(
      [&](double m) { return binom::significance(q, m, q0); }, target);
}

SampleSizeResult required_trials_bivariate(
    double q, double pi, double delta, double target, double ratio,
    const quadrature::QuadratureConfig& cfg) {
  check_target(target);
  if (!(ratio > 0.0)) throw std::domain_error("ratio must be positive");
  if (!(delta >= 0.0 && delta < 1.0))
    throw std::domain_error("delta must lie in [0, 1)");
  if (!(q >= 0.0 && q <= 1.0) || !(pi >= 0.0 && pi <= 1.0))
    throw std::domain_error("q and pi must lie in [0,1]");
  if (q <= pi + delta)
    throw NoSolutionError(
        "required_trials_bivariate: q must exceed pi + delta");
  return solve_min_trials(
      [&](double m) {
        return bivariate::superiority({{q, m}, {pi, ratio * m}, delta}, cfg);
      },
      target);
}

}  // namespace trialsig::samplesize

#pragma once

#include "trialsig/quadrature.hpp"

namespace trialsig::samplesize {

struct SampleSizeResult {
  double m_real = 0.0;      // real root where significance crosses the target
  long long m_int = 0;      // smallest integer M with significance >= target
  double achieved_p = 0.0;  // significance at m_int
};

/// Minimal trial count for the one-arm problem: the smallest M with
/// p(q, M; q0) >= target. The real crossing is bracketed by geometric
/// doubling from M = 1 and bisected to |dM| < 1e-3; the integer answer is
/// then confirmed by evaluating p at nearby integers (p can ripple when q*M
/// crosses integers, so the crossing is verified rather than assumed).
/// Throws NoSolutionError when q <= q0.
SampleSizeResult required_trials(double q, double q0, double target);

/// Same inversion for the two-arm superiority probability with N = ratio * M.
/// Throws NoSolutionError when q <= pi + delta.
SampleSizeResult required_trials_bivariate(
    double q, double pi, double delta, double target, double ratio = 1.0,
    const quadrature::QuadratureConfig& cfg = {});

}  // namespace trialsig::samplesize

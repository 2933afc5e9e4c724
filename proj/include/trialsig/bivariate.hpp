#pragma once

#include "trialsig/binom.hpp"
#include "trialsig/quadrature.hpp"

namespace trialsig::bivariate {

// Paired test/control observations plus the superiority buffer delta:
// the probability of interest is P(Q >= Pi + delta) under the joint
// posterior of the two true efficacies.
struct BivariateDesign {
  binom::TrialObservation test;     // (q, M)
  binom::TrialObservation control;  // (pi, N)
  double delta = 0.0;               // in [0, 1)
  void validate() const;
};

/// w(q,Q,M) * w(pi,Pi,N); multiplied by (M+1)(N+1) it integrates to 1 over
/// the unit square.
double joint_density(double q, double big_q, double m, double pi,
                     double big_pi, double n);

struct SuperiorityReport {
  double value = 0.0;
  int panels_used = 0;
  double last_delta = 0.0;
};

/// p(q,pi,M,N,delta) =
///   (M+1)(N+1) C(M,qM) C(N,piN)
///     int_delta^1 (1-Q)^(M-Mq) Q^(Mq) B_{Q-delta}(N pi + 1, N - N pi + 1) dQ
///
/// assembled in log space per node (the integrand is the posterior beta
/// density of Q times the posterior beta CDF of Pi at Q - delta) and
/// integrated by composite 2-point Gauss-Legendre panels over [delta, 1].
/// Raw results outside [0,1] by more than 10 * rel_tol raise
/// ConvergenceError; smaller overshoot is clamped.
double superiority(const BivariateDesign& design,
                   const quadrature::QuadratureConfig& cfg = {});
SuperiorityReport superiority_report(const BivariateDesign& design,
                                     const quadrature::QuadratureConfig& cfg = {});

/// Finite series form of the incomplete beta at integer counts:
///   B_x(c+1, n-c+1) = sum_{k=c+1}^{n+1} c!(n-c)! / (k!(n+1-k)!)
///                     x^k (1-x)^(n+1-k)
/// (partial integration applied repeatedly). Reproduces inc_beta at integer
/// arguments to full precision.
double inc_beta_integer_series(long long n, long long pi_count, double x);

/// Exact evaluation of the superiority integral for integer designs
/// (M, N, qM, piN all integers): the inner CDF collapses to the finite series
/// above, every term is expanded binomially against Q^(Mq) (1-Q)^(M-Mq), and
/// the resulting beta moments are integrated exactly over [delta, 1].
/// Intended for small designs; M + N beyond `max_total` is rejected.
double superiority_exact(const BivariateDesign& design, int max_total = 200);

}  // namespace trialsig::bivariate

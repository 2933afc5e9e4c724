#include "trialsig/bivariate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "trialsig/errors.hpp"

namespace trialsig::bivariate {

namespace {

double log_binomial(double n, double k) {
  return specfun::log_gamma(n + 1.0) - specfun::log_gamma(k + 1.0) -
         specfun::log_gamma(n - k + 1.0);
}

long long as_integer(double x, const char* what) {
  const double r = std::nearbyint(x);
  if (std::fabs(x - r) > 1e-9)
    throw std::domain_error(std::string("superiority_exact: ") + what +
                            " must be an integer (within 1e-9)");
  return static_cast<long long>(r);
}

}  // namespace

void BivariateDesign::validate() const {
  test.validate();
  control.validate();
  if (!(delta >= 0.0 && delta < 1.0))
    throw std::domain_error("delta must lie in [0, 1)");
}

double joint_density(double q, double big_q, double m, double pi,
                     double big_pi, double n) {
  return binom::density(q, big_q, m) * binom::density(pi, big_pi, n);
}

SuperiorityReport superiority_report(const BivariateDesign& design,
                                     const quadrature::QuadratureConfig& cfg) {
  design.validate();
  cfg.validate();
  const double m = design.test.trials;
  const double n = design.control.trials;
  const double a1 = design.test.q * m + 1.0;
  const double b1 = m - design.test.q * m + 1.0;
  const double a2 = design.control.q * n + 1.0;
  const double b2 = n - design.control.q * n + 1.0;
  // (M+1) C(M,qM) Q^(Mq) (1-Q)^(M-Mq) is the Beta(a1,b1) posterior density
  // of Q, and (N+1) C(N,piN) B_{Q-delta} its control-side CDF at Q - delta.
  const double lnorm = -specfun::log_beta(a1, b1);
  const double delta = design.delta;
  const auto f = [&](double big_q) {
    double lpdf = lnorm;
    if (a1 != 1.0) lpdf += (a1 - 1.0) * std::log(big_q);
    if (b1 != 1.0) lpdf += (b1 - 1.0) * std::log1p(-big_q);
    const double x = std::clamp(big_q - delta, 0.0, 1.0);
    return std::exp(lpdf) * specfun::reg_inc_beta(x, a2, b2);
  };
  // endpoint-damped panels: the posterior density carries fractional
  // exponents, whose endpoint derivative singularities would otherwise slow
  // the panel convergence for small designs
  const quadrature::QuadratureResult r =
      quadrature::integrate_endpoint_damped(f, delta, 1.0, cfg);
  const double overshoot = 10.0 * cfg.rel_tol;
  if (r.value < -overshoot || r.value > 1.0 + overshoot)
    throw ConvergenceError(
        "superiority: quadrature result outside [0,1] beyond tolerance");
  return {std::clamp(r.value, 0.0, 1.0), r.panels_used, r.last_delta};
}

double superiority(const BivariateDesign& design,
                   const quadrature::QuadratureConfig& cfg) {
  return superiority_report(design, cfg).value;
}

double inc_beta_integer_series(long long n, long long pi_count, double x) {
  if (n < 1) throw std::domain_error("series: n must be >= 1");
  if (pi_count < 0 || pi_count > n)
    throw std::domain_error("series: count must lie in [0, n]");
  if (!(x >= 0.0 && x <= 1.0))
    throw std::domain_error("series: x must lie in [0,1]");
  if (x == 0.0) return 0.0;
  const double nd = static_cast<double>(n);
  const double cd = static_cast<double>(pi_count);
  const double lbase =
      specfun::log_gamma(cd + 1.0) + specfun::log_gamma(nd - cd + 1.0);
  if (x == 1.0)  // only the k = n+1 term survives: the complete beta
    return std::exp(lbase - specfun::log_gamma(nd + 2.0));
  const double lx = std::log(x);
  const double l1x = std::log1p(-x);
  double sum = 0.0;
  for (long long k = pi_count + 1; k <= n + 1; ++k) {
    const double kd = static_cast<double>(k);
    sum += std::exp(lbase - specfun::log_gamma(kd + 1.0) -
                    specfun::log_gamma(nd + 2.0 - kd) + kd * lx +
                    (nd + 1.0 - kd) * l1x);
  }
  return sum;
}

double superiority_exact(const BivariateDesign& design, int max_total) {
  design.validate();
  const long long m = as_integer(design.test.trials, "M");
  const long long n = as_integer(design.control.trials, "N");
  const long long mq = as_integer(design.test.q * design.test.trials, "q*M");
  const long long npi =
      as_integer(design.control.q * design.control.trials, "pi*N");
  if (m + n > max_total)
    throw std::domain_error(
        "superiority_exact: M + N exceeds the exact-path limit; "
        "use superiority()");
  const double md = static_cast<double>(m);
  const double nd = static_cast<double>(n);
  const double mqd = static_cast<double>(mq);
  const double delta = design.delta;
  const double lpre = std::log(md + 1.0) + log_binomial(md, mqd);
  long double total = 0.0L;
  for (long long k = npi + 1; k <= n + 1; ++k) {
    const double kd = static_cast<double>(k);
    const double lck = log_binomial(nd + 1.0, kd);
    if (delta == 0.0) {
      // int_0^1 Q^(Mq+k) (1-Q)^(M-Mq+N+1-k) dQ
      total += std::exp(lpre + lck +
                        specfun::log_beta(mqd + kd + 1.0,
                                          md - mqd + nd + 2.0 - kd));
      continue;
    }
    // expand (Q-d)^k (1-Q+d)^(N+1-k) and integrate each beta moment over
    // [d, 1]; terms alternate in sign through (-d)^(k-i)
    const double ld = std::log(delta);
    for (long long i = 0; i <= k; ++i) {
      for (long long j = 0; j <= n + 1 - k; ++j) {
        const double id = static_cast<double>(i);
        const double jd = static_cast<double>(j);
        const double lcoef = log_binomial(kd, id) +
                             log_binomial(nd + 1.0 - kd, jd) +
                             (kd - id) * ld + (nd + 1.0 - kd - jd) * ld;
        const double a = mqd + id + 1.0;
        const double b = md - mqd + jd + 1.0;
        const double seg =
            std::exp(specfun::log_beta(a, b)) - specfun::inc_beta(delta, a, b);
        const double sign = ((k - i) % 2 == 0) ? 1.0 : -1.0;
        total += static_cast<long double>(sign * std::exp(lpre + lck + lcoef) * seg);
      }
    }
  }
  const double p = static_cast<double>(total);
  if (p < -1e-9 || p > 1.0 + 1e-9)
    throw ConvergenceError("superiority_exact: result outside [0,1]");
  return std::clamp(p, 0.0, 1.0);
}

}  // namespace trialsig::bivariate

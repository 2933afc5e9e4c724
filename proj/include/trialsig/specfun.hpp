#pragma once

namespace trialsig::specfun {

// Precision control for the iterative special-function kernels.
struct Accuracy {
  double rel_tol = 1e-12;  // in (0, 1e-3)
  int max_iter = 500;      // >= 10
  void validate() const;
};

/// ln Gamma(x) for x > 0.
///
/// Lanczos approximation (g = 607/128, 15 coefficients); relative error is
/// below 1e-13 for x >= 0.5, and the x < 0.5 range is handled through the
/// recurrence ln Gamma(x) = ln Gamma(x+1) - ln x.
double log_gamma(double x);

/// ln B(a,b) = ln Gamma(a) + ln Gamma(b) - ln Gamma(a+b), a,b > 0.
double log_beta(double a, double b);

/// Error function. Delegates to the C runtime implementation, which is
/// correctly rounded to within 1 ulp and odd by construction.
double erf(double x);

/// Unregularized incomplete beta B_x(a,b) = int_0^x t^(a-1) (1-t)^(b-1) dt.
///
/// Modified-Lentz continued fraction with the x < (a+1)/(a+b+2) crossover,
/// assembled in log space, so both tails stay accurate up to a,b ~ 2000.
double inc_beta(double x, double a, double b, const Accuracy& acc = {});

/// Regularized incomplete beta I_x(a,b) = B_x(a,b) / B(a,b).
double reg_inc_beta(double x, double a, double b, const Accuracy& acc = {});

/// 1 - I_x(a,b), computed on the stable side of the crossover so small upper
/// tails keep full relative precision.
double reg_inc_beta_compl(double x, double a, double b, const Accuracy& acc = {});

/// Upper regularized incomplete gamma Q(a,x) = Gamma(a,x) / Gamma(a), x >= 0.
///
/// a may be negative non-integer (handled through the downward recurrence on
/// the unnormalized upper integral plus the reflection formula for Gamma(a));
/// nonpositive integer a is a domain error.
double reg_inc_gamma(double a, double x, const Accuracy& acc = {});

}  // namespace trialsig::specfun

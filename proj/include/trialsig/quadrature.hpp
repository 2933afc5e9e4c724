#pragma once

#include <functional>

namespace trialsig::quadrature {

// Panel count, refinement policy and tolerances governing the composite
// integrals. The defaults match the documented production setup (10^4 evenly
// spaced panels, refined by doubling until two successive results agree).
struct QuadratureConfig {
  int panels = 10000;     // >= 16
  bool refine = true;     // double the panel count until converged
  double rel_tol = 1e-9;  // in (0, 1e-3)
  int max_doublings = 6;  // >= 1
  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  int panels_used = 0;
  double last_delta = 0.0;  // |change| in the final doubling step
  bool refined = false;
};

using Integrand = std::function<double(double)>;

/// Composite 2-point Gauss-Legendre rule over `panels` uniform subintervals.
/// Panel contributions are combined with a pairwise tree sum, so the result
/// does not depend on any accumulation order.
double gauss2(const Integrand& f, double a, double b, int panels);

/// gauss2 with panel doubling until |p_2k - p_k| < rel_tol * |p_2k|.
/// Throws ConvergenceError when max_doublings is exhausted.
QuadratureResult integrate(const Integrand& f, double a, double b,
                           const QuadratureConfig& cfg = {});

/// integrate() through the septic smoothstep map s(t) = t^4(35-84t+70t^2-20t^3),
/// s'(t) = 140 t^3 (1-t)^3. The cubically vanishing Jacobian damps algebraic
/// endpoint singularities (integrands ~ x^alpha with alpha >= 0 become C^3),
/// restoring the full panel convergence rate for beta-type integrands with
/// small fractional exponents.
QuadratureResult integrate_endpoint_damped(const Integrand& f, double a,
                                           double b,
                                           const QuadratureConfig& cfg = {});

/// Classic recursive adaptive Simpson with absolute tolerance `tol`.
double adaptive_simpson(const Integrand& f, double a, double b, double tol,
                        int max_depth = 60);

}  // namespace trialsig::quadrature

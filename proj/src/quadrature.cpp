#include "trialsig/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "trialsig/errors.hpp"

namespace trialsig::quadrature {

namespace {

double pairwise_sum(const std::vector<double>& v, std::size_t lo, std::size_t hi) {
  const std::size_t n = hi - lo;
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += v[i];
    return s;
  }
  const std::size_t mid = lo + n / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

struct SimpsonNode {
  double x, fx;
};

double simpson_rec(const Integrand& f, SimpsonNode a, SimpsonNode m,
                   SimpsonNode b, double whole, double tol, int depth) {
  const SimpsonNode lm{0.5 * (a.x + m.x), 0.0};
  const SimpsonNode rm{0.5 * (m.x + b.x), 0.0};
  const double flm = f(lm.x);
  const double frm = f(rm.x);
  const double left = (m.x - a.x) / 6.0 * (a.fx + 4.0 * flm + m.fx);
  const double right = (b.x - m.x) / 6.0 * (m.fx + 4.0 * frm + b.fx);
  const double delta = left + right - whole;
  if (std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  if (depth <= 0)
    throw ConvergenceError("adaptive_simpson: maximum depth exceeded");
  return simpson_rec(f, a, {lm.x, flm}, m, left, 0.5 * tol, depth - 1) +
         simpson_rec(f, m, {rm.x, frm}, b, right, 0.5 * tol, depth - 1);
}

}  // namespace

void QuadratureConfig::validate() const {
  if (panels < 16)
    throw std::domain_error("QuadratureConfig: panels must be >= 16");
  if (!(rel_tol > 0.0 && rel_tol < 1e-3))
    throw std::domain_error("QuadratureConfig: rel_tol must lie in (0, 1e-3)");
  if (max_doublings < 1)
    throw std::domain_error("QuadratureConfig: max_doublings must be >= 1");
}

double gauss2(const Integrand& f, double a, double b, int panels) {
  if (panels < 1) throw std::domain_error("gauss2: panels must be >= 1");
  if (a == b) return 0.0;
  const double h = (b - a) / panels;
  const double d = h * 0.5 / std::sqrt(3.0);
  std::vector<double> contrib(static_cast<std::size_t>(panels));
  for (int i = 0; i < panels; ++i) {
    const double c = a + (i + 0.5) * h;
    contrib[static_cast<std::size_t>(i)] = f(c - d) + f(c + d);
  }
  return pairwise_sum(contrib, 0, contrib.size()) * (h * 0.5);
}

QuadratureResult integrate(const Integrand& f, double a, double b,
                           const QuadratureConfig& cfg) {
  cfg.validate();
  if (a == b) return {0.0, cfg.panels, 0.0, false};
  int panels = cfg.panels;
  double prev = gauss2(f, a, b, panels);
  if (!cfg.refine) return {prev, panels, 0.0, false};
  for (int step = 0; step < cfg.max_doublings; ++step) {
    panels *= 2;
    const double cur = gauss2(f, a, b, panels);
    const double delta = std::fabs(cur - prev);
    if (delta <= cfg.rel_tol * std::max(std::fabs(cur), 1e-300))
      return {cur, panels, delta, true};
    prev = cur;
  }
  throw ConvergenceError("integrate: panel doubling did not converge");
}

QuadratureResult integrate_endpoint_damped(const Integrand& f, double a,
                                           double b,
                                           const QuadratureConfig& cfg) {
  const double width = b - a;
  const auto g = [&](double t) {
    double s = t * t * t * t * (35.0 + t * (-84.0 + t * (70.0 - 20.0 * t)));
    s = std::clamp(s, 0.0, 1.0);  // rounding must not leave [a, b]
    const double ds = 140.0 * t * t * t * (1.0 - t) * (1.0 - t) * (1.0 - t);
    return f(a + width * s) * width * ds;
  };
  return integrate(g, 0.0, 1.0, cfg);
}

double adaptive_simpson(const Integrand& f, double a, double b, double tol,
                        int max_depth) {
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const SimpsonNode na{a, f(a)}, nm{m, f(m)}, nb{b, f(b)};
  const double whole = (b - a) / 6.0 * (na.fx + 4.0 * nm.fx + nb.fx);
  return simpson_rec(f, na, nm, nb, whole, tol, max_depth);
}

}  // namespace trialsig::quadrature

#include "trialsig/binom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "trialsig/errors.hpp"

namespace trialsig::binom {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void check_unit(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0))
    throw std::domain_error(std::string(name) + " must lie in [0,1]");
}

// floor(x) with products within 1e-9 of the next integer snapped up, so
// fractions like 0.3 * 10 land on the intended count.
long long snapped_floor(double x) {
  double fl = std::floor(x);
  if (x - fl >= 1.0 - 1e-9) fl += 1.0;
  return static_cast<long long>(fl);
}

}  // namespace

void TrialObservation::validate() const {
  check_unit(q, "q");
  if (!(trials > 0.0))
    throw std::domain_error("trial count must be positive");
}

void SignificanceQuery::validate() const {
  obs.validate();
  check_unit(q0, "q0");
}

double log_density(double q, double big_q, double m) {
  check_unit(q, "q");
  check_unit(big_q, "Q");
  if (!(m > 0.0)) throw std::domain_error("trial count must be positive");
  const double k = q * m;
  const double r = m - k;
  const double lcoef = specfun::log_gamma(m + 1.0) -
                       specfun::log_gamma(k + 1.0) - specfun::log_gamma(r + 1.0);
  // 0^0 = 1 at the edges of the unit square
  if (big_q == 0.0) return k == 0.0 ? lcoef : kNegInf;
  if (big_q == 1.0) return r == 0.0 ? lcoef : kNegInf;
  return lcoef + k * std::log(big_q) + r * std::log1p(-big_q);
}

double density(double q, double big_q, double m) {
  const double lw = log_density(q, big_q, m);
  return lw == kNegInf ? 0.0 : std::exp(lw);
}

double tail_discrete(double q, double big_q, long long m) {
  check_unit(q, "q");
  check_unit(big_q, "Q");
  if (m < 1) throw std::domain_error("trial count must be a positive integer");
  const long long k0 = snapped_floor(q * static_cast<double>(m));
  if (k0 >= m) return 0.0;  // empty summation range
  if (big_q == 0.0) return 0.0;
  if (big_q == 1.0) return 1.0;
  const double md = static_cast<double>(m);
  const double lq = std::log(big_q);
  const double l1q = std::log1p(-big_q);
  double sum = 0.0;
  for (long long k = k0 + 1; k <= m; ++k) {
    const double kd = static_cast<double>(k);
    sum += std::exp(specfun::log_gamma(md + 1.0) - specfun::log_gamma(kd + 1.0) -
                    specfun::log_gamma(md - kd + 1.0) + kd * lq +
                    (md - kd) * l1q);
  }
  return std::min(sum, 1.0);
}

double tail_continuum(double q, double big_q, double m,
                      const quadrature::QuadratureConfig& cfg) {
  check_unit(q, "q");
  check_unit(big_q, "Q");
  if (!(m > 0.0)) throw std::domain_error("trial count must be positive");
  // Degenerate true efficacies put all measured mass on one endpoint.
  if (big_q == 0.0) return q <= 0.0 ? 1.0 : 0.0;
  if (big_q == 1.0) return 1.0;
  const auto f = [&](double t) { return density(t, big_q, m); };
  const double num = quadrature::integrate(f, q, 1.0, cfg).value;
  const double den = quadrature::integrate(f, 0.0, 1.0, cfg).value;
  return std::clamp(num / den, 0.0, 1.0);
}

double significance(const SignificanceQuery& query, const specfun::Accuracy& acc) {
  query.validate();
  const double k = query.obs.q * query.obs.trials;
  return specfun::reg_inc_beta_compl(query.q0, k + 1.0,
                                     query.obs.trials - k + 1.0, acc);
}

double significance(double q, double m, double q0, const specfun::Accuracy& acc) {
  return significance(SignificanceQuery{{q, m}, q0}, acc);
}

double significance_quadrature(const SignificanceQuery& query,
                               const quadrature::QuadratureConfig& cfg) {
  query.validate();
  const auto f = [&](double big_q) {
    return density(query.obs.q, big_q, query.obs.trials);
  };
  // damped panels: the integrand has fractional-power endpoints in Q
  const double raw =
      (query.obs.trials + 1.0) *
      quadrature::integrate_endpoint_damped(f, query.q0, 1.0, cfg).value;
  return std::clamp(raw, 0.0, 1.0);
}

std::vector<CurvePoint> significance_curve(const TrialObservation& obs,
                                           std::span<const double> grid,
                                           const specfun::Accuracy& acc) {
  obs.validate();
  if (grid.empty()) throw std::domain_error("curve grid must not be empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    check_unit(grid[i], "grid value");
    if (i > 0 && !(grid[i] > grid[i - 1]))
      throw std::domain_error("curve grid must be strictly increasing");
  }
  std::vector<CurvePoint> out;
  out.reserve(grid.size());
  for (const double q0 : grid)
    out.push_back({q0, significance(SignificanceQuery{obs, q0}, acc)});
  return out;
}

std::vector<double> uniform_grid(int points) {
  if (points < 2) throw std::domain_error("grid needs at least 2 points");
  std::vector<double> g(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i)
    g[static_cast<std::size_t>(i)] = static_cast<double>(i) / (points - 1);
  return g;
}

}  // namespace trialsig::binom

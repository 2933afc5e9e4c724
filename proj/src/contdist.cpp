#include "trialsig/contdist.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "trialsig/errors.hpp"
#include "trialsig/quadrature.hpp"
#include "trialsig/specfun.hpp"

namespace trialsig::contdist {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kSqrt2Pi = 2.5066282746310002;

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

// Moments of exp(-((x-mu)/sigma)^2 / 2) over [0, inf); the missing 1/sqrt(2pi)
// sigma normalization cancels in the ratios. Integrated piecewise around the
// bump so the adaptive rule cannot mistake a spike for an empty interval.
struct RawMoments {
  double f0, f1, f2;
};

RawMoments truncated_raw_moments(const GaussianSpec& g) {
  const double hi = std::max(g.mu, 0.0) + 40.0 * g.sigma;
  std::vector<double> knots{0.0};
  for (const double off : {-8.0, -4.0, -2.0, -1.0, 0.0, 1.0, 2.0, 4.0, 8.0, 16.0}) {
    const double x = g.mu + off * g.sigma;
    if (x > 0.0 && x < hi) knots.push_back(x);
  }
  knots.push_back(hi);
  std::sort(knots.begin(), knots.end());
  const auto piecewise = [&](const quadrature::Integrand& f, double tol) {
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i)
      total += quadrature::adaptive_simpson(f, knots[i], knots[i + 1], tol);
    return total;
  };
  const auto pdf = [&](double x) {
    const double z = (x - g.mu) / g.sigma;
    return std::exp(-0.5 * z * z);
  };
  const double s1 = std::fabs(g.mu) + 4.0 * g.sigma;
  const double t0 = 1e-14 * g.sigma;
  RawMoments r{};
  r.f0 = piecewise(pdf, t0);
  r.f1 = piecewise([&](double x) { return x * pdf(x); }, t0 * s1);
  r.f2 = piecewise([&](double x) { return x * x * pdf(x); }, t0 * s1 * s1);
  return r;
}

TruncatedMoments moments_of(const GaussianSpec& g) {
  const RawMoments r = truncated_raw_moments(g);
  const double m = r.f1 / r.f0;
  const double s2 = r.f2 / r.f0 - m * m;
  if (!(s2 > 0.0))
    throw ConvergenceError("truncated_moments: nonpositive variance");
  return {m, std::sqrt(s2)};
}

}  // namespace

void GaussianSpec::validate() const {
  if (!(sigma > 0.0)) throw std::domain_error("sigma must be positive");
  if (!std::isfinite(mu)) throw std::domain_error("mu must be finite");
}

void DiscreteDistribution::validate() const {
  if (!(step > 0.0)) throw std::domain_error("grid step must be positive");
  if (mass.empty()) throw std::domain_error("distribution must not be empty");
  double sum = 0.0;
  for (const double p : mass) {
    if (!(p >= 0.0)) throw std::domain_error("masses must be nonnegative");
    sum += p;
  }
  if (std::fabs(sum - 1.0) > 1e-12)
    throw std::domain_error("masses must sum to 1 within 1e-12");
}

double DiscreteDistribution::mean() const {
  double m = 0.0;
  for (std::size_t i = 0; i < mass.size(); ++i) m += mass[i] * value_at(i);
  return m;
}

double DiscreteDistribution::variance() const {
  const double m = mean();
  double v = 0.0;
  for (std::size_t i = 0; i < mass.size(); ++i) {
    const double d = value_at(i) - m;
    v += mass[i] * d * d;
  }
  return v;
}

void TruncatedMoments::validate() const {
  if (!(sd > 0.0)) throw std::domain_error("sd must be positive");
  if (!std::isfinite(mean)) throw std::domain_error("mean must be finite");
}

double superiority_gaussian(const GaussianSpec& p1, const GaussianSpec& p2,
                            double delta) {
  p1.validate();
  p2.validate();
  const double scale =
      std::sqrt(2.0 * (p1.sigma * p1.sigma + p2.sigma * p2.sigma));
  return 0.5 + 0.5 * specfun::erf((p2.mu - p1.mu - delta) / scale);
}

double superiority_gaussian_quadrature(const GaussianSpec& p1,
                                       const GaussianSpec& p2, double delta,
                                       double tol) {
  p1.validate();
  p2.validate();
  const auto f = [&](double x2) {
    const double z2 = (x2 - p2.mu) / p2.sigma;
    const double pdf2 = std::exp(-0.5 * z2 * z2) / (p2.sigma * kSqrt2Pi);
    const double inner =
        0.5 + 0.5 * specfun::erf((x2 - delta - p1.mu) / (p1.sigma * kSqrt2));
    return pdf2 * inner;
  };
  const double lo = p2.mu - 10.0 * p2.sigma;
  const double hi = p2.mu + 10.0 * p2.sigma;
  return std::clamp(quadrature::adaptive_simpson(f, lo, hi, tol), 0.0, 1.0);
}

double superiority_tabulated(const DiscreteDistribution& p1,
                             const DiscreteDistribution& p2, double delta) {
  p1.validate();
  p2.validate();
  // x2 - delta grows with the index, so a single pass with a running
  // cumulative of p1 covers all pairs
  double total = 0.0;
  double cum = 0.0;
  std::size_t i1 = 0;
  for (std::size_t j = 0; j < p2.mass.size(); ++j) {
    const double threshold = p2.value_at(j) - delta;
    while (i1 < p1.mass.size() && p1.value_at(i1) <= threshold)
      cum += p1.mass[i1++];
    total += p2.mass[j] * cum;
  }
  return std::clamp(total, 0.0, 1.0);
}

DiscreteDistribution mean_sampling_distribution(const DiscreteDistribution& base,
                                                long long n,
                                                std::size_t size_cap) {
  base.validate();
  if (n < 1) throw std::domain_error("n must be >= 1");
  if (n == 1) return base;
  const std::size_t len = base.mass.size();
  const unsigned long long out_len =
      static_cast<unsigned long long>(len - 1) * static_cast<unsigned long long>(n) + 1ull;
  if (out_len > size_cap)
    throw std::length_error("mean distribution support exceeds the size cap");
  std::vector<double> acc = base.mass;
  std::vector<double> next;
  for (long long fold = 1; fold < n; ++fold) {
    next.assign(acc.size() + len - 1, 0.0);
    for (std::size_t a = 0; a < acc.size(); ++a) {
      const double va = acc[a];
      if (va == 0.0) continue;
      for (std::size_t b = 0; b < len; ++b) next[a + b] += va * base.mass[b];
    }
    acc.swap(next);
  }
  const double total = pairwise_sum(acc, 0, acc.size());
  for (double& v : acc) v /= total;
  return {base.origin, base.step / static_cast<double>(n), std::move(acc)};
}

TruncatedMoments truncated_moments(const GaussianSpec& spec) {
  spec.validate();
  return moments_of(spec);
}

TruncatedMoments truncated_moments_incgamma(const GaussianSpec& spec) {
  spec.validate();
  const double mu = spec.mu;
  const double sg = spec.sigma;
  const double e = specfun::erf(mu / (kSqrt2 * sg));
  const double g = specfun::reg_inc_gamma(-0.5, mu * mu / (2.0 * sg * sg));
  const double m = mu * (2.0 - g) / (1.0 + e);
  const double a =
      std::exp(-mu * mu / (2.0 * sg * sg)) * std::sqrt(2.0 / M_PI) * mu * sg *
      (1.0 + e) * (1.0 + e);
  const double t2 =
      2.0 * (mu * mu + sg * sg +
             e * (2.0 * (sg - mu) * (mu + sg) + (mu * mu + sg * sg) * e +
                  mu * mu * (4.0 - g) * g));
  const double t3 = (5.0 * mu * mu + sg * sg +
                     (mu * mu + sg * sg) * e * (2.0 + e) - 4.0 * mu * mu * g +
                     mu * mu * g * g) *
                    g;
  const double s2 = (a + t2 - t3) / ((1.0 + e) * (1.0 + e) * (1.0 + e));
  return {m, s2 > 0.0 ? std::sqrt(s2) : 0.0};
}

GaussianSpec fit_truncated_gaussian(const TruncatedMoments& obs) {
  obs.validate();
  if (!(obs.mean > 0.0))
    throw NoSolutionError(
        "fit_truncated_gaussian: a nonnegative truncation has positive mean");
  if (!(obs.sd < obs.mean))
    throw NoSolutionError(
        "fit_truncated_gaussian: sd must be below the mean for a truncated "
        "Gaussian on x >= 0");
  const double m_t = obs.mean;
  const double s_t = obs.sd;
  const auto residual = [&](double mu, double sigma, double& rm, double& rs) {
    const TruncatedMoments got = moments_of({mu, sigma});
    rm = got.mean - m_t;
    rs = got.sd - s_t;
  };

  // Damped Newton with a forward-difference Jacobian from (m, s).
  double mu = m_t;
  double sigma = s_t;
  double rm, rs;
  residual(mu, sigma, rm, rs);
  bool converged = false;
  for (int it = 0; it < 60 && !converged; ++it) {
    if (std::fabs(rm) < 1e-11 * m_t && std::fabs(rs) < 1e-11 * s_t) {
      converged = true;
      break;
    }
    const double h = 1e-6 * sigma;
    double rm1, rs1, rm2, rs2;
    residual(mu + h, sigma, rm1, rs1);
    residual(mu, sigma + h, rm2, rs2);
    const double j11 = (rm1 - rm) / h, j12 = (rm2 - rm) / h;
    const double j21 = (rs1 - rs) / h, j22 = (rs2 - rs) / h;
    const double det = j11 * j22 - j12 * j21;
    if (det == 0.0 || !std::isfinite(det)) break;
    const double dmu = (rm * j22 - rs * j12) / det;
    const double dsg = (rs * j11 - rm * j21) / det;
    const double norm0 = std::fabs(rm) / m_t + std::fabs(rs) / s_t;
    double alpha = 1.0;
    bool stepped = false;
    for (int half = 0; half < 30; ++half, alpha *= 0.5) {
      const double mu_n = mu - alpha * dmu;
      const double sg_n = sigma - alpha * dsg;
      if (!(sg_n > 1e-12 * s_t)) continue;
      double rm_n, rs_n;
      residual(mu_n, sg_n, rm_n, rs_n);
      if (std::fabs(rm_n) / m_t + std::fabs(rs_n) / s_t < norm0) {
        mu = mu_n;
        sigma = sg_n;
        rm = rm_n;
        rs = rs_n;
        stepped = true;
        break;
      }
    }
    if (!stepped) break;
  }
  if (std::fabs(rm) < 1e-8 * m_t && std::fabs(rs) < 1e-8 * s_t)
    return {mu, sigma};

  // Fallback: outer bisection on mu, inner solve of m(mu, sigma) = m for
  // sigma (the truncated mean is increasing in sigma).
  const auto sigma_for_mu = [&](double mu_v) {
    double lo = 1e-9 * m_t, hi = std::max(s_t, m_t);
    while (moments_of({mu_v, hi}).mean < m_t) {
      lo = hi;
      hi *= 2.0;
      if (hi > 1e12 * m_t)
        throw ConvergenceError("fit_truncated_gaussian: inner solve failed");
    }
    for (int it = 0; it < 200 && hi - lo > 1e-14 * hi; ++it) {
      const double mid = 0.5 * (lo + hi);
      (moments_of({mu_v, mid}).mean >= m_t ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
  };
  const auto sd_gap = [&](double mu_v) {
    return moments_of({mu_v, sigma_for_mu(mu_v)}).sd - s_t;
  };
  double mu_hi = m_t;  // sigma -> 0 there, so sd < s
  double mu_lo = -m_t;
  while (sd_gap(mu_lo) < 0.0) {
    mu_lo *= 2.0;
    if (mu_lo < -1e6 * m_t)
      throw NoSolutionError("fit_truncated_gaussian: moments not attainable");
  }
  for (int it = 0; it < 200 && mu_hi - mu_lo > 1e-13 * m_t; ++it) {
    const double mid = 0.5 * (mu_lo + mu_hi);
    (sd_gap(mid) >= 0.0 ? mu_lo : mu_hi) = mid;
  }
  mu = 0.5 * (mu_lo + mu_hi);
  sigma = sigma_for_mu(mu);
  residual(mu, sigma, rm, rs);
  if (!(std::fabs(rm) < 1e-8 * m_t && std::fabs(rs) < 1e-8 * s_t))
    throw ConvergenceError("fit_truncated_gaussian: residuals did not converge");
  return {mu, sigma};
}

}  // namespace trialsig::contdist

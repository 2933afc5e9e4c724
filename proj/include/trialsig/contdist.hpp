#pragma once

#include <cstddef>
#include <vector>

namespace trialsig::contdist {

struct GaussianSpec {
  double mu = 0.0;
  double sigma = 1.0;  // > 0
  void validate() const;
};

// Probability mass tabulated on a uniform grid: value_at(i) = origin + i*step.
struct DiscreteDistribution {
  double origin = 0.0;
  double step = 1.0;          // > 0
  std::vector<double> mass;   // nonnegative, sums to 1 within 1e-12
  void validate() const;
  double value_at(std::size_t i) const { return origin + static_cast<double>(i) * step; }
  double mean() const;
  double variance() const;
};

// Observed mean and standard deviation of a variable restricted to x >= 0.
struct TruncatedMoments {
  double mean = 0.0;
  double sd = 1.0;  // > 0
  void validate() const;
};

/// P(x2 >= x1 + delta) for independent Gaussians:
///   1/2 + 1/2 erf((mu2 - mu1 - delta) / sqrt(2 (sigma1^2 + sigma2^2))).
/// Returns exactly 1/2 for identical specs and delta = 0 (erf(0) branch).
double superiority_gaussian(const GaussianSpec& p1, const GaussianSpec& p2,
                            double delta);

/// Cross-check path for the same probability: outer quadrature over x2 of
/// p2(x2) * [1/2 + 1/2 erf((x2 - delta - mu1)/(sigma1 sqrt2))], i.e. the
/// inner integral collapsed to an error function.
double superiority_gaussian_quadrature(const GaussianSpec& p1,
                                       const GaussianSpec& p2, double delta,
                                       double tol = 1e-12);

/// P(x2 >= x1 + delta) for two tabulated distributions: double sum of the
/// indicator over grid masses. Ties (x2 == x1 + delta in double arithmetic)
/// count fully toward the event, which matters on coarse grids.
double superiority_tabulated(const DiscreteDistribution& p1,
                             const DiscreteDistribution& p2, double delta);

/// Exact distribution of the mean of n independent draws: the n-fold
/// convolution of `mass` re-indexed on the mean grid (same origin, step/n,
/// support n*(len-1)+1). Throws std::length_error when the output support
/// would exceed size_cap.
DiscreteDistribution mean_sampling_distribution(const DiscreteDistribution& base,
                                                long long n,
                                                std::size_t size_cap = (1u << 22));

/// Observable mean/sd of a Gaussian restricted to x >= 0 and renormalized.
/// Production path: adaptive quadrature of the moment integrals.
TruncatedMoments truncated_moments(const GaussianSpec& spec);

/// The same moments through erf and the upper regularized incomplete gamma
/// at order -1/2. The mean expression agrees with truncated_moments() for
/// mu > 0 and pins the incomplete-gamma convention; the printed variance
/// expression does not reproduce the quadrature moments and is retained only
/// as a documented discrepancy (see tests).
TruncatedMoments truncated_moments_incgamma(const GaussianSpec& spec);

/// Inverse of truncated_moments: recovers (mu, sigma) from observed (m, s),
/// to 1e-8 relative in the residuals. Two-dimensional damped Newton with a
/// finite-difference Jacobian, starting from (m, s); falls back to nested
/// bisection (outer on mu, inner on sigma) when Newton stalls. mu may come
/// out negative. Throws NoSolutionError when (m, s) is not attainable
/// (s >= m, in particular).
GaussianSpec fit_truncated_gaussian(const TruncatedMoments& obs);

}  // namespace trialsig::contdist

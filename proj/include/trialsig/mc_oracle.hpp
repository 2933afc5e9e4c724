#pragma once

#include <array>
#include <cstdint>

#include "trialsig/bivariate.hpp"
#include "trialsig/contdist.hpp"

namespace trialsig::mc {

struct McConfig {
  std::uint64_t seed = 0;
  long long draws = 1'000'000;  // >= 1000
  void validate() const;
};

struct McEstimate {
  double value = 0.0;    // estimated probability / mean
  double std_err = 0.0;  // sqrt(v (1-v) / draws) for indicator means
  long long draws = 0;
};

/// Philox4x32-10 counter-based generator (the Random123 construction):
/// a pure function of (counter, key), so any draw index can be generated
/// independently of all others.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

/// Lazy uniform/normal source for one draw: block b of draw d on stream s is
/// philox4x32({b, d_lo, d_hi, s}, {seed_lo, seed_hi}). Rejection loops
/// consume from their own draw's sequence, so results are independent of how
/// draws are batched across threads.
class DrawStream {
 public:
  DrawStream(std::uint64_t seed, std::uint32_t stream, std::uint64_t draw);
  double next_uniform();  // in (0,1), 52 random bits
  double next_normal();   // Box-Muller on the next two uniforms
 private:
  void refill();
  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 4> base_;
  std::uint32_t block_ = 0;
  double pending_[2];
  int have_ = 0;
};

/// Gamma(shape) via Marsaglia-Tsang squeeze (shape >= 1; boosted by u^(1/a)
/// below 1). Valid over the shape range used here, (0.5, 2000).
double sample_gamma(DrawStream& rs, double shape);

/// Beta(a,b) as the gamma ratio Ga / (Ga + Gb).
double sample_beta(DrawStream& rs, double a, double b);

/// Fraction of posterior draws Q ~ Beta(q m + 1, m - q m + 1) with Q >= q0.
/// Deterministic given the seed, for any thread count.
McEstimate mc_significance(double q, double m, double q0, const McConfig& cfg,
                           int threads = 1);

/// Fraction of independent posterior pairs (Q, Pi) with Q >= Pi + delta.
McEstimate mc_superiority(const bivariate::BivariateDesign& design,
                          const McConfig& cfg, int threads = 1);

/// Empirical histogram of `repetitions` sample means of n draws each, on the
/// mean grid (step/n). The histogram spans only the observed range; it is an
/// error when that range exceeds size_cap.
contdist::DiscreteDistribution mc_mean_distribution(
    const contdist::DiscreteDistribution& base, long long n,
    long long repetitions, const McConfig& cfg,
    std::size_t size_cap = (1u << 22), int threads = 1);

}  // namespace trialsig::mc

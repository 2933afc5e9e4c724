#include "trialsig/mc_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "trialsig/errors.hpp"

namespace trialsig::mc {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
constexpr double kTwoPi = 6.283185307179586;

// Stream ids keep the per-operation substreams disjoint.
enum Stream : std::uint32_t {
  kSignificance = 1,
  kSuperiorityTest = 2,
  kSuperiorityControl = 3,
  kMeanDist = 4,
};

inline void philox_round(std::array<std::uint32_t, 4>& c,
                         const std::array<std::uint32_t, 2>& k) {
  const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * c[0];
  const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * c[2];
  c = {static_cast<std::uint32_t>(p1 >> 32) ^ c[1] ^ k[0],
       static_cast<std::uint32_t>(p1),
       static_cast<std::uint32_t>(p0 >> 32) ^ c[3] ^ k[1],
       static_cast<std::uint32_t>(p0)};
}

// Splits [0, total) into contiguous ranges and merges integer-valued partial
// results; each range only touches its own draws, so the merged result is
// identical for every thread count.
template <class Body>
void parallel_ranges(long long total, int threads, const Body& body) {
  threads = std::max(1, threads);
  if (threads == 1) {
    body(0, total, 0);
    return;
  }
  std::vector<std::thread> pool;
  const long long chunk = (total + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const long long lo = t * chunk;
    const long long hi = std::min(total, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&, lo, hi, t] { body(lo, hi, t); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

void McConfig::validate() const {
  if (draws < 1000) throw std::domain_error("McConfig: draws must be >= 1000");
}

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key) {
  for (int round = 0; round < 10; ++round) {
    philox_round(counter, key);
    key[0] += kWeyl0;
    key[1] += kWeyl1;
  }
  return counter;
}

DrawStream::DrawStream(std::uint64_t seed, std::uint32_t stream,
                       std::uint64_t draw)
    : key_{static_cast<std::uint32_t>(seed),
           static_cast<std::uint32_t>(seed >> 32)},
      base_{0, static_cast<std::uint32_t>(draw),
            static_cast<std::uint32_t>(draw >> 32), stream},
      pending_{0.0, 0.0} {}

void DrawStream::refill() {
  std::array<std::uint32_t, 4> ctr = base_;
  ctr[0] = block_++;
  const auto words = philox4x32(ctr, key_);
  const std::uint64_t u0 =
      words[0] | (static_cast<std::uint64_t>(words[1]) << 32);
  const std::uint64_t u1 =
      words[2] | (static_cast<std::uint64_t>(words[3]) << 32);
  // 52 bits plus a half-ulp offset keeps the value strictly inside (0,1)
  pending_[1] = (static_cast<double>(u0 >> 12) + 0.5) * 0x1p-52;
  pending_[0] = (static_cast<double>(u1 >> 12) + 0.5) * 0x1p-52;
  have_ = 2;
}

double DrawStream::next_uniform() {
  if (have_ == 0) refill();
  return pending_[--have_];
}

double DrawStream::next_normal() {
  const double u1 = next_uniform();
  const double u2 = next_uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

double sample_gamma(DrawStream& rs, double shape) {
  if (!(shape > 0.0)) throw std::domain_error("gamma shape must be positive");
  if (shape < 1.0) {
    const double u = rs.next_uniform();
    return sample_gamma(rs, shape + 1.0) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = rs.next_normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rs.next_uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double sample_beta(DrawStream& rs, double a, double b) {
  const double x = sample_gamma(rs, a);
  const double y = sample_gamma(rs, b);
  return x / (x + y);
}

McEstimate mc_significance(double q, double m, double q0, const McConfig& cfg,
                           int threads) {
  cfg.validate();
  binom::SignificanceQuery{{q, m}, q0}.validate();
  const double a = q * m + 1.0;
  const double b = m - q * m + 1.0;
  std::vector<long long> counts(static_cast<std::size_t>(std::max(1, threads)), 0);
  parallel_ranges(cfg.draws, threads, [&](long long lo, long long hi, int t) {
    long long hits = 0;
    for (long long i = lo; i < hi; ++i) {
      DrawStream rs(cfg.seed, kSignificance, static_cast<std::uint64_t>(i));
      if (sample_beta(rs, a, b) >= q0) ++hits;
    }
    counts[static_cast<std::size_t>(t)] = hits;
  });
  long long hits = 0;
  for (const long long c : counts) hits += c;
  const double v = static_cast<double>(hits) / static_cast<double>(cfg.draws);
  return {v, std::sqrt(v * (1.0 - v) / static_cast<double>(cfg.draws)),
          cfg.draws};
}

McEstimate mc_superiority(const bivariate::BivariateDesign& design,
                          const McConfig& cfg, int threads) {
  cfg.validate();
  design.validate();
  const double a1 = design.test.q * design.test.trials + 1.0;
  const double b1 = design.test.trials - design.test.q * design.test.trials + 1.0;
  const double a2 = design.control.q * design.control.trials + 1.0;
  const double b2 =
      design.control.trials - design.control.q * design.control.trials + 1.0;
  std::vector<long long> counts(static_cast<std::size_t>(std::max(1, threads)), 0);
  parallel_ranges(cfg.draws, threads, [&](long long lo, long long hi, int t) {
    long long hits = 0;
    for (long long i = lo; i < hi; ++i) {
      DrawStream test_rs(cfg.seed, kSuperiorityTest,
                         static_cast<std::uint64_t>(i));
      DrawStream control_rs(cfg.seed, kSuperiorityControl,
                            static_cast<std::uint64_t>(i));
      const double big_q = sample_beta(test_rs, a1, b1);
      const double big_pi = sample_beta(control_rs, a2, b2);
      if (big_q >= big_pi + design.delta) ++hits;
    }
    counts[static_cast<std::size_t>(t)] = hits;
  });
  long long hits = 0;
  for (const long long c : counts) hits += c;
  const double v = static_cast<double>(hits) / static_cast<double>(cfg.draws);
  return {v, std::sqrt(v * (1.0 - v) / static_cast<double>(cfg.draws)),
          cfg.draws};
}

contdist::DiscreteDistribution mc_mean_distribution(
    const contdist::DiscreteDistribution& base, long long n,
    long long repetitions, const McConfig& cfg, std::size_t size_cap,
    int threads) {
  cfg.validate();
  base.validate();
  if (n < 1) throw std::domain_error("n must be >= 1");
  if (repetitions < 1) throw std::domain_error("repetitions must be >= 1");
  std::vector<double> cdf(base.mass.size());
  double run = 0.0;
  for (std::size_t i = 0; i < base.mass.size(); ++i) {
    run += base.mass[i];
    cdf[i] = run;
  }
  // index sums determine the means exactly: mean = origin + sum * (step / n)
  std::vector<long long> sums(static_cast<std::size_t>(repetitions), 0);
  parallel_ranges(repetitions, threads, [&](long long lo, long long hi, int) {
    for (long long r = lo; r < hi; ++r) {
      DrawStream rs(cfg.seed, kMeanDist, static_cast<std::uint64_t>(r));
      long long s = 0;
      for (long long j = 0; j < n; ++j) {
        const double u = rs.next_uniform();
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        s += std::min<std::size_t>(
            static_cast<std::size_t>(it - cdf.begin()), cdf.size() - 1);
      }
      sums[static_cast<std::size_t>(r)] = s;
    }
  });
  const auto [mn, mx] = std::minmax_element(sums.begin(), sums.end());
  const unsigned long long span =
      static_cast<unsigned long long>(*mx - *mn) + 1ull;
  if (span > size_cap)
    throw std::length_error("mc_mean_distribution: histogram exceeds size cap");
  std::vector<double> hist(static_cast<std::size_t>(span), 0.0);
  for (const long long s : sums)
    hist[static_cast<std::size_t>(s - *mn)] += 1.0;
  for (double& h : hist) h /= static_cast<double>(repetitions);
  const double mean_step = base.step / static_cast<double>(n);
  return {base.origin + static_cast<double>(*mn) * mean_step, mean_step,
          std::move(hist)};
}

}  // namespace trialsig::mc

#pragma once

#include <span>
#include <vector>

#include "trialsig/quadrature.hpp"
#include "trialsig/specfun.hpp"

namespace trialsig::binom {

// One arm's observed data: fraction q in [0,1] and trial count > 0. The
// trial count is a real number (continuum limit), not restricted to integers.
struct TrialObservation {
  double q = 0.0;
  double trials = 1.0;
  void validate() const;
};

struct SignificanceQuery {
  TrialObservation obs;
  double q0 = 0.5;  // efficacy threshold in [0,1]
  void validate() const;
};

struct CurvePoint {
  double q0 = 0.0;
  double p = 0.0;
};

/// Continuum-limit binomial density
///   w(q,Q,m) = Q^(q m) (1-Q)^((1-q) m) C(m, q m)
/// with the generalized binomial coefficient evaluated through log_gamma and
/// the convention 0^0 = 1 so q,Q in {0,1} stay well defined.
double density(double q, double big_q, double m);

/// ln of density(); -inf where the density vanishes.
double log_density(double q, double big_q, double m);

/// Discrete tail W(q,Q,m) = sum_{k=1+floor(q m)}^{m} Q^k (1-Q)^(m-k) C(m,k).
/// Products q*m within 1e-9 of an integer are snapped to it before flooring.
double tail_discrete(double q, double big_q, long long m);

/// Continuum tail: int_q^1 w(t,Q,m) dt normalized by int_0^1 w(t,Q,m) dt.
///
/// The denominator equals 1/m only asymptotically in m; normalizing by the
/// computed value keeps the result an exact probability (1 at q=0, 0 at q=1)
/// for every m.
double tail_continuum(double q, double big_q, double m,
                      const quadrature::QuadratureConfig& cfg = {});

/// Significance p(q,m;q0) = (m+1) int_{q0}^1 w(q,Q,m) dQ, evaluated through
/// the closed incomplete-beta form: p = 1 - I_{q0}(q m + 1, m - q m + 1).
double significance(const SignificanceQuery& query,
                    const specfun::Accuracy& acc = {});
double significance(double q, double m, double q0,
                    const specfun::Accuracy& acc = {});

/// Cross-check path: the same integral evaluated by composite quadrature.
double significance_quadrature(const SignificanceQuery& query,
                               const quadrature::QuadratureConfig& cfg = {});

/// One CurvePoint per grid value; the grid must be strictly increasing and
/// inside [0,1].
std::vector<CurvePoint> significance_curve(const TrialObservation& obs,
                                           std::span<const double> grid,
                                           const specfun::Accuracy& acc = {});

/// Uniform threshold grid on [0,1]; 201 points resolve the steep region of a
/// typical significance curve.
std::vector<double> uniform_grid(int points = 201);

}  // namespace trialsig::binom

#ifndef WADM_ADMISSIBILITY_HPP_
#define WADM_ADMISSIBILITY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "wadm/ball.hpp"
#include "wadm/exponents.hpp"
#include "wadm/growth.hpp"
#include "wadm/norms.hpp"
#include "wadm/weight.hpp"

namespace wadm {

//! Lower estimate of the smallest constant D for the splitting inequality
//!   w(x, y) <= D (w(x, z) v(z, y) + v(x, z) w(z, y)).
//!
//! `sweepSup` is the exhaustive supremum of the ratio over x = e and
//! y, z in B(e, radius). A finite sweep can only approach the supremum along
//! z = e, y -> inf, which equals 1 whenever w strictly dominates v (and 1/2
//! when the profiles coincide); that closed-form limit is joined in as
//! `asymptoticFloor`, so `value = max(sweepSup, asymptoticFloor)`.
//! `safeUpperBound` is the constant 2^s under which the inequality provably
//! holds for a polynomial w with trivial v.
struct D1Estimate {
  double value = 0.0;
  double sweepSup = 0.0;
  double asymptoticFloor = 0.0;
  bool floorApplied = false;
  Element witnessZ, witnessY;  // attains sweepSup (x = e)
  double safeUpperBound = 0.0;
  std::uint64_t triplesChecked = 0;
};

D1Estimate estimate_D1(const WeightSpec& w, const WeightSpec& v,
                       const Group& group, int radius,
                       const BallBudget& budget = {});

struct W2Params {
  std::vector<double> tGrid;    // increasing, >= 1
  std::vector<double> tauGrid;  // increasing, >= 1
  int truncationRadius = 64;
  double extensionFactor = 1.25;  // geometric tau-grid extension
  int maxExtensions = 48;
};

//! Outcome of checking inf_tau (a_{r'}(tau) + b_{p'}(tau) t) <= D t^theta.
struct W2Result {
  double thetaPredicted = 0.0;
  double alphaPredicted = 0.0;
  double thetaMeasured = 0.0;   // log-log slope of m(t)
  double dConstant = 0.0;       // max_t m(t) / t^thetaPredicted
  double minimizerSlope = 0.0;  // log-log slope of tau*(t)
  //! max |log tau*(t) - (c + alpha log t)| over the t-grid, in units of one
  //! geometric grid step, with c the midrange constant. <= 1 means the
  //! minimizer tracks t^alpha within the grid's resolution.
  double trackingDeviation = 0.0;
  int extensionSteps = 0;

  std::vector<double> tGrid, mValues, tauStars;
  std::vector<double> tauGrid, aValues;
  std::vector<CertifiedValue> bValues;

  bool pass = false;
  std::string detail;
};

//! Evaluates m(t) = min over the tau-grid of a(tau) + b(tau) t (with the
//! certified b upper bound, so verdicts are conservative), extends the grid
//! geometrically while the minimizer sits on the upper boundary, fits
//! thetaMeasured, and applies the verdict rule
//!   pass  iff  dConstant finite and thetaMeasured <= thetaPredicted + 0.1.
//! `dForFormulas` is the growth exponent used in the theta/alpha formulas.
W2Result verify_w2(const WeightSpec& w, const WeightSpec& v,
                   const Group& group, const ExponentSet& e,
                   const W2Params& params, const GrowthEstimate& growth,
                   double dForFormulas, const BallBudget& budget = {});

struct ConditionVerdict {
  bool pass = false;
  std::string detail;
};

struct AdmissibilityReport {
  std::string group;
  WeightSpec w, v;
  ExponentSet exponents;

  GrowthEstimate growth;
  double dUsed = 0.0;  // exact for the lattices, otherwise the fitted exponent
  bool dExact = false;

  D1Estimate d1;
  CertifiedValue w22;
  int truncationRadius = 0;
  W2Result w2;

  double theta = 0.0;                 // predicted trade-off exponent
  double thetaHalfConvention = 0.0;   // (s - d/2) variant; NaN if undefined
  double alpha = 0.0;

  ConditionVerdict condGrowth, condW1, condW22, condW2;
  bool pass = false;
  std::string failedCondition;  // "", "growth", "w1", "w22", "w2"
};

struct VerifyConfig {
  int growthMinRadius = 4;
  int growthMaxRadius = 16;
  int truncationRadius = 64;
  int d1Radius = 6;
  std::vector<double> tGrid;    // default: 25 log-spaced points in [1, 1e4]
  std::vector<double> tauGrid;  // default: integers 1..64
  BallBudget budget;
};

//! Geometric t-grid helper: `points` logarithmically spaced values in
//! [tMin, tMax].
std::vector<double> log_spaced_grid(double tMin, double tMax, int points);

//! Full pipeline for a polynomial weight w with the companion v = 1:
//! growth certificate, splitting constant, uniform norm bound, trade-off
//! bound. The overall verdict is the conjunction of the three conditions
//! under a polynomial growth certificate.
AdmissibilityReport verify_theorem(const WeightSpec& w, const Group& group,
                                   const ExponentSet& e,
                                   const VerifyConfig& config);

}  // namespace wadm

#endif  // WADM_ADMISSIBILITY_HPP_

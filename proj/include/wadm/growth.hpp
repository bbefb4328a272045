#ifndef WADM_GROWTH_HPP_
#define WADM_GROWTH_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "wadm/ball.hpp"
#include "wadm/group.hpp"

namespace wadm {

enum class GrowthVerdict { Polynomial, Inconclusive, SuperPolynomial };

const char* to_string(GrowthVerdict v);

//! Result of fitting |B(e, tau)| <= C tau^d over a finite radius range.
//!
//! The fit is a least-squares line through (log tau, log |B|); cFit is then
//! the smallest constant making the bound hold exactly at every sampled
//! radius, so (cFit, dFit) is a certificate on the sampled range. Finite
//! groups are detected by shell saturation and reported exactly as d = 0.
struct GrowthEstimate {
  double dFit = 0.0;
  double cFit = 1.0;
  int minRadius = 0;
  int maxRadius = 0;
  double residual = 0.0;  // max |log|B| - fitted line| over the range
  GrowthVerdict verdict = GrowthVerdict::Inconclusive;
  bool finiteGroup = false;
  int saturationRadius = -1;
  std::vector<std::pair<int, std::uint64_t>> table;  // (tau, |B(e, tau)|)
};

// Verdict thresholds. Super-polynomial growth shows as a log-log slope that
// keeps increasing: every second difference over the top half of the range
// must exceed kSuperPolySecondDiff. A fit whose residual exceeds
// kInconclusiveResidual is reported as inconclusive rather than polynomial;
// the small-radius transient of a degree-4 lattice fit stays under 0.35, the
// exponential control case sits at 1.4.
inline constexpr double kSuperPolySecondDiff = 0.05;
inline constexpr double kInconclusiveResidual = 0.5;

//! (tau, |B(e, tau)|) for integer tau = 1..maxRadius.
std::vector<std::pair<int, std::uint64_t>> growth_table(
    const Group& group, int maxRadius, const BallBudget& budget = {});

//! Fits the growth exponent over integer radii [minRadius, maxRadius].
//! Requires maxRadius >= minRadius + 3 (at least four points).
GrowthEstimate estimate_growth_exponent(const Group& group, int minRadius,
                                        int maxRadius,
                                        const BallBudget& budget = {});

//! Same, over a prebuilt index (index.max_radius() >= maxRadius).
GrowthEstimate estimate_growth_exponent(const BallIndex& index, int minRadius,
                                        int maxRadius);

}  // namespace wadm

#endif  // WADM_GROWTH_HPP_

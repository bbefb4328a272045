#include "wadm/growth.hpp"

#include <cmath>

#include "wadm/errors.hpp"

namespace wadm {

const char* to_string(GrowthVerdict v) {
  switch (v) {
    case GrowthVerdict::Polynomial:
      return "polynomial";
    case GrowthVerdict::Inconclusive:
      return "inconclusive";
    case GrowthVerdict::SuperPolynomial:
      return "super-polynomial";
  }
  return "unknown";
}

std::vector<std::pair<int, std::uint64_t>> growth_table(
    const Group& group, int maxRadius, const BallBudget& budget) {
  if (maxRadius < 2) throw ConfigError("growth: maxRadius must be >= 2");
  BallIndex index = BallIndex::build(group, group.identity(), maxRadius,
                                     budget);
  std::vector<std::pair<int, std::uint64_t>> table;
  table.reserve(maxRadius);
  for (int tau = 1; tau <= maxRadius; ++tau) {
    table.emplace_back(tau, index.count(tau));
  }
  return table;
}

GrowthEstimate estimate_growth_exponent(const BallIndex& index, int minRadius,
                                        int maxRadius) {
  if (minRadius < 1) throw ConfigError("growth: minRadius must be >= 1");
  if (maxRadius < minRadius + 3) {
    throw ConfigError("growth: insufficient range (need at least 4 radii)");
  }
  if (index.max_radius() < maxRadius && !index.saturated()) {
    throw ConfigError("growth: index shallower than maxRadius");
  }

  GrowthEstimate est;
  est.minRadius = minRadius;
  est.maxRadius = maxRadius;
  for (int tau = 1; tau <= maxRadius; ++tau) {
    est.table.emplace_back(tau, index.count(tau));
  }

  if (index.saturated()) {
    // The group was exhausted: counts are eventually constant and the bound
    // |B| <= C tau^0 holds exactly with C = |G|.
    est.finiteGroup = true;
    est.saturationRadius = index.saturation_radius();
    est.dFit = 0.0;
    est.cFit = static_cast<double>(index.total_elements());
    est.residual = 0.0;
    est.verdict = GrowthVerdict::Polynomial;
    return est;
  }

  const int n = maxRadius - minRadius + 1;
  std::vector<double> logTau(n), logCount(n);
  for (int i = 0; i < n; ++i) {
    logTau[i] = std::log(static_cast<double>(minRadius + i));
    logCount[i] = std::log(static_cast<double>(index.count(minRadius + i)));
  }

  double meanX = 0.0, meanY = 0.0;
  for (int i = 0; i < n; ++i) {
    meanX += logTau[i];
    meanY += logCount[i];
  }
  meanX /= n;
  meanY /= n;
  double sxx = 0.0, sxy = 0.0;
  for (int i = 0; i < n; ++i) {
    sxx += (logTau[i] - meanX) * (logTau[i] - meanX);
    sxy += (logTau[i] - meanX) * (logCount[i] - meanY);
  }
  est.dFit = sxy / sxx;
  const double intercept = meanY - est.dFit * meanX;

  est.residual = 0.0;
  est.cFit = 0.0;
  for (int i = 0; i < n; ++i) {
    const double fitted = intercept + est.dFit * logTau[i];
    est.residual = std::max(est.residual, std::abs(logCount[i] - fitted));
    const double tau = static_cast<double>(minRadius + i);
    est.cFit = std::max(
        est.cFit, static_cast<double>(index.count(tau)) /
                      std::pow(tau, est.dFit));
  }

  // Super-polynomial rule: consecutive log-log slopes whose forward
  // differences stay above the threshold across the top half of the range.
  std::vector<double> slopes;
  for (int i = 0; i + 1 < n; ++i) {
    slopes.push_back((logCount[i + 1] - logCount[i]) /
                     (logTau[i + 1] - logTau[i]));
  }
  bool super = false;
  if (slopes.size() >= 2) {
    super = true;
    const std::size_t nDiffs = slopes.size() - 1;
    for (std::size_t i = nDiffs / 2; i < nDiffs; ++i) {
      if (slopes[i + 1] - slopes[i] <= kSuperPolySecondDiff) {
        super = false;
        break;
      }
    }
  }

  if (super) {
    est.verdict = GrowthVerdict::SuperPolynomial;
  } else if (est.residual > kInconclusiveResidual) {
    est.verdict = GrowthVerdict::Inconclusive;
  } else {
    est.verdict = GrowthVerdict::Polynomial;
  }
  return est;
}

GrowthEstimate estimate_growth_exponent(const Group& group, int minRadius,
                                        int maxRadius,
                                        const BallBudget& budget) {
  if (maxRadius < minRadius + 3) {
    throw ConfigError("growth: insufficient range (need at least 4 radii)");
  }
  BallIndex index = BallIndex::build(group, group.identity(), maxRadius,
                                     budget);
  return estimate_growth_exponent(index, minRadius, maxRadius);
}

}  // namespace wadm

#include "wadm/norms.hpp"

#include <cmath>
#include <optional>
#include <string>

#include "wadm/errors.hpp"

namespace wadm {

namespace {

// Decay exponent of (v/w)(rho) = (1 + rho)^{-sEff} for polynomial/trivial
// pairs. Certified tails are not defined for subexponential weights.
double quotient_decay_exponent(const WeightSpec& w, const WeightSpec& v) {
  auto polyExponent = [](const WeightSpec& spec) -> std::optional<double> {
    if (spec.family == WeightFamily::Trivial) return 0.0;
    if (spec.family == WeightFamily::Polynomial) return spec.s;
    return {};
  };
  const auto sw = polyExponent(w);
  const auto sv = polyExponent(v);
  if (!sw || !sv) {
    throw HypothesisError(
        "certified tail bounds are defined for polynomial and trivial "
        "weights only");
  }
  return *sw - *sv;
}

double quotient_at(const WeightSpec& w, const WeightSpec& v, double rho) {
  return v.at(rho) / w.at(rho);
}

// First integer rho >= tau.
int tail_start(double tau) {
  return static_cast<int>(std::ceil(tau));
}

// Last shell index (exclusive) usable for an exact sum up to R.
int exact_top(const BallIndex& index, int truncationRadius) {
  if (index.max_radius() >= truncationRadius) return truncationRadius;
  if (index.saturated() &&
      index.saturation_radius() <= index.max_radius()) {
    // shells beyond saturation are empty, the sum is already complete
    return index.max_radius();
  }
  throw ConfigError("norms: index shallower than the truncation radius");
}

struct TailSplit {
  double exactSum = 0.0;
  double tailBound = 0.0;
};

// Exact sum of (v/w)^{p'} over tau <= rho < R plus the certified remainder
// for rho >= R.
TailSplit split_sum(const BallIndex& index, const WeightSpec& w,
                    const WeightSpec& v, double pPrime, double tauLow, int R,
                    const GrowthEstimate& growth) {
  const double sEff = quotient_decay_exponent(w, v);
  TailSplit out;

  const int lo = tail_start(tauLow);
  const int top = exact_top(index, R);
  for (int n = lo; n < top; ++n) {
    const auto cnt = index.shell_count(n);
    if (cnt == 0) continue;
    out.exactSum += static_cast<double>(cnt) *
                    std::pow(quotient_at(w, v, n), pPrime);
  }

  if (index.saturated() && R >= index.saturation_radius()) {
    out.tailBound = 0.0;  // the group is exhausted: nothing beyond R
    return out;
  }
  if (growth.verdict != GrowthVerdict::Polynomial) {
    throw HypothesisError(
        "non-convergent: growth certificate is not polynomial");
  }
  if (!(pPrime * sEff > growth.dFit)) {
    throw HypothesisError("non-convergent: p'*s <= d (p'=" +
                          std::to_string(pPrime) + ", s=" +
                          std::to_string(sEff) + ", d=" +
                          std::to_string(growth.dFit) + ")");
  }
  out.tailBound = dyadic_tail_bound(sEff, pPrime, growth.cFit, growth.dFit,
                                    static_cast<double>(R));
  return out;
}

}  // namespace

double dyadic_tail_bound(double s, double pPrime, double C, double d,
                         double tau) {
  if (!(tau >= 1.0)) throw ConfigError("tail bound: tau must be >= 1");
  if (!(C > 0.0)) throw ConfigError("tail bound: C must be > 0");
  if (std::isinf(pPrime)) {
    throw ConfigError("tail bound: p' must be finite (sup norms are exact)");
  }
  const double exponent = pPrime * s - d;
  if (!(exponent > 0.0)) {
    throw HypothesisError("divergent tail: p'*s <= d");
  }
  const double q = std::exp2(-exponent);  // 2^{d - p's}
  return C * std::exp2(pPrime * s) * std::pow(tau, -exponent) * q / (1.0 - q);
}

double a_norm(const BallIndex& index, const WeightSpec& v,
              const ExponentSet& e, double tau) {
  if (!(tau >= 1.0)) throw ConfigError("a_norm: tau must be >= 1");
  if (tau > index.max_radius() && !index.saturated()) {
    throw ConfigError("a_norm: tau exceeds the enumerated radius");
  }
  const int top = std::min(static_cast<int>(std::ceil(tau)),
                           index.max_radius());
  if (std::isinf(e.rPrime)) {
    double sup = 0.0;
    for (int n = 0; n < top; ++n) {
      if (index.shell_count(n) > 0) sup = std::max(sup, v.at(n));
    }
    return 2.0 * sup;
  }
  double sum = 0.0;
  for (int n = 0; n < top; ++n) {
    sum += static_cast<double>(index.shell_count(n)) *
           std::pow(v.at(n), e.rPrime);
  }
  return 2.0 * std::pow(sum, 1.0 / e.rPrime);
}

CertifiedValue b_norm(const BallIndex& index, const WeightSpec& w,
                      const WeightSpec& v, const ExponentSet& e, double tau,
                      int truncationRadius, const GrowthEstimate& growth) {
  if (!(tau >= 1.0)) throw ConfigError("b_norm: tau must be >= 1");
  if (!(static_cast<double>(truncationRadius) > tau)) {
    throw ConfigError("b_norm: truncation radius must exceed tau");
  }

  if (std::isinf(e.pPrime)) {
    // Supremum over the tail; the quotient is nonincreasing for admissible
    // pairs, so the first tail shell attains it.
    if (quotient_decay_exponent(w, v) < 0.0) {
      throw HypothesisError("non-convergent: v grows faster than w");
    }
    const int lo = tail_start(tau);
    if (index.saturated() && lo >= index.saturation_radius()) {
      return {0.0, 0.0};
    }
    return {2.0 * quotient_at(w, v, lo), 0.0};
  }

  const TailSplit split =
      split_sum(index, w, v, e.pPrime, tau, truncationRadius, growth);
  const double upper =
      2.0 * std::pow(split.exactSum + split.tailBound, 1.0 / e.pPrime);
  const double lower = 2.0 * std::pow(split.exactSum, 1.0 / e.pPrime);
  return {upper, upper - lower};
}

CertifiedValue truncated_norm_w22(const BallIndex& index, const WeightSpec& w,
                                  const WeightSpec& v, const ExponentSet& e,
                                  int truncationRadius,
                                  const GrowthEstimate& growth) {
  if (truncationRadius < 1) {
    throw ConfigError("w22: truncation radius must be >= 1");
  }

  if (std::isinf(e.pPrime)) {
    if (quotient_decay_exponent(w, v) < 0.0) {
      throw HypothesisError("non-convergent: v grows faster than w");
    }
    double sup = 0.0;
    const int top = exact_top(index, truncationRadius);
    for (int n = 0; n < top; ++n) {
      if (index.shell_count(n) > 0) sup = std::max(sup, quotient_at(w, v, n));
    }
    if (!(index.saturated() && truncationRadius >= index.saturation_radius())) {
      sup = std::max(sup, quotient_at(w, v, truncationRadius));
    }
    return {2.0 * sup, 0.0};
  }

  const TailSplit split =
      split_sum(index, w, v, e.pPrime, 0.0, truncationRadius, growth);
  const double upper =
      2.0 * std::pow(split.exactSum + split.tailBound, 1.0 / e.pPrime);
  const double lower = 2.0 * std::pow(split.exactSum, 1.0 / e.pPrime);
  return {upper, upper - lower};
}

// ---------------------------------------------------------------------------
// Explicit sweeps (translation-invariance and symmetry checks).

namespace {

// Tallies how many swept elements land at each distance, then evaluates the
// norm in increasing-distance order. Summation order is therefore fixed by
// the distance multiset alone, so translated sweeps produce bit-identical
// results whenever the multisets agree.
template <typename Predicate, typename Value>
double sweep_norm(const BallIndex& index, double exponent, Predicate include,
                  Value value) {
  std::vector<std::uint64_t> counts(index.max_radius(), 0);
  for (int n = 0; n < index.max_radius(); ++n) {
    for (const Element& u : index.shell(n)) {
      const auto rho = include(u);
      if (rho) ++counts[static_cast<std::size_t>(*rho)];
    }
  }
  if (std::isinf(exponent)) {
    double sup = 0.0;
    for (std::size_t rho = 0; rho < counts.size(); ++rho) {
      if (counts[rho] > 0) sup = std::max(sup, value(static_cast<int>(rho)));
    }
    return sup;
  }
  double acc = 0.0;
  for (std::size_t rho = 0; rho < counts.size(); ++rho) {
    if (counts[rho] > 0) {
      acc += static_cast<double>(counts[rho]) *
             std::pow(value(static_cast<int>(rho)), exponent);
    }
  }
  return std::pow(acc, 1.0 / exponent);
}

}  // namespace

double explicit_row_ball_norm(const Group& group, const BallIndex& index,
                              const WeightSpec& v, double rPrime,
                              const Element& x0, double tau) {
  const Element xInv = group.invert(x0);
  return sweep_norm(
      index, rPrime,
      [&](const Element& u) -> std::optional<int> {
        const auto d = index.distance(group.multiply(xInv, u));
        if (!d || !(*d < tau)) return {};
        return d;
      },
      [&](int rho) { return v.at(rho); });
}

double explicit_col_ball_norm(const Group& group, const BallIndex& index,
                              const WeightSpec& v, double rPrime,
                              const Element& y0, double tau) {
  return sweep_norm(
      index, rPrime,
      [&](const Element& u) -> std::optional<int> {
        const auto d = index.distance(group.multiply(group.invert(u), y0));
        if (!d || !(*d < tau)) return {};
        return d;
      },
      [&](int rho) { return v.at(rho); });
}

double explicit_row_tail_sum(const Group& group, const BallIndex& index,
                             const WeightSpec& w, const WeightSpec& v,
                             double pPrime, const Element& x0, double tau,
                             int truncationRadius) {
  const Element xInv = group.invert(x0);
  return sweep_norm(
      index, pPrime,
      [&](const Element& u) -> std::optional<int> {
        const auto d = index.distance(group.multiply(xInv, u));
        if (!d || *d < tau || *d >= truncationRadius) return {};
        return d;
      },
      [&](int rho) { return quotient_at(w, v, rho); });
}

double explicit_col_tail_sum(const Group& group, const BallIndex& index,
                             const WeightSpec& w, const WeightSpec& v,
                             double pPrime, const Element& y0, double tau,
                             int truncationRadius) {
  return sweep_norm(
      index, pPrime,
      [&](const Element& u) -> std::optional<int> {
        const auto d = index.distance(group.multiply(group.invert(u), y0));
        if (!d || *d < tau || *d >= truncationRadius) return {};
        return d;
      },
      [&](int rho) { return quotient_at(w, v, rho); });
}

}  // namespace wadm

#include "wadm/exponents.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "wadm/errors.hpp"

namespace wadm {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double conjugate_exponent(double p) {
  if (!(p >= 1.0)) throw ConfigError("exponent: p must be >= 1");
  if (p == 1.0) return kInf;
  if (std::isinf(p)) return 1.0;
  return p / (p - 1.0);
}

ExponentSet ExponentSet::make(double p, double r) {
  ExponentSet e;
  e.p = p;
  e.r = r;
  e.pPrime = conjugate_exponent(p);
  e.rPrime = conjugate_exponent(r);
  return e;
}

double theta_exponent(double s, double d, const ExponentSet& e) {
  const double gap = s - (std::isinf(e.pPrime) ? 0.0 : d / e.pPrime);
  if (!(gap > 0.0)) {
    throw HypothesisError("hypothesis violated: s <= d/p' (s=" +
                          std::to_string(s) + ", d=" + std::to_string(d) +
                          ")");
  }
  if (d == 0.0) return 0.0;       // finite groups
  if (e.r == 1.0) return 0.0;     // r/(r-1) -> inf limit
  const double theta = d / (d + gap * e.rPrime);
  return theta;
}

double theta_exponent_half_convention(double s, double d,
                                      const ExponentSet& e) {
  const double gap = s - d / 2.0;
  if (!(gap > 0.0)) return std::numeric_limits<double>::quiet_NaN();
  if (d == 0.0) return 0.0;
  if (e.r == 1.0) return 0.0;
  return d / (d + gap * e.rPrime);
}

double alpha_exponent(double s, double d, const ExponentSet& e) {
  const double gap = s - (std::isinf(e.pPrime) ? 0.0 : d / e.pPrime);
  const double rFactor = e.r == 1.0 ? 0.0 : (std::isinf(e.r) ? 1.0 : 1.0 - 1.0 / e.r);
  const double denom = rFactor * d + gap;
  if (!(denom > 0.0)) {
    throw HypothesisError("hypothesis violated: (1-1/r)d + (s - d/p') <= 0");
  }
  return 1.0 / denom;
}

}  // namespace wadm

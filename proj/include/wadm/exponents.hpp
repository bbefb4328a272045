#ifndef WADM_EXPONENTS_HPP_
#define WADM_EXPONENTS_HPP_

namespace wadm {

//! Conjugate exponent p' = p/(p-1) with the conventions 1' = inf, inf' = 1.
double conjugate_exponent(double p);

//! A (p, r) pair with its conjugates. Infinities are represented by
//! std::numeric_limits<double>::infinity().
struct ExponentSet {
  double p = 2.0;
  double r = 2.0;
  double pPrime = 2.0;
  double rPrime = 2.0;

  //! Validates p, r >= 1 and fills the conjugates.
  static ExponentSet make(double p, double r);
};

//! Trade-off exponent theta = d / (d + (s - d/p') * r/(r-1)).
//!
//! Requires s > d/p'; returns 0 for d = 0 (finite groups) and in the r = 1
//! limit (r/(r-1) -> inf). The result always lies in [0, 1).
double theta_exponent(double s, double d, const ExponentSet& e);

//! The same trade-off evaluated with (s - d/2) in place of (s - d/p');
//! the two agree exactly when p' = 2. Reported alongside theta so both
//! conventions are visible. Returns NaN when s <= d/2.
double theta_exponent_half_convention(double s, double d,
                                      const ExponentSet& e);

//! Balancing exponent alpha = 1 / ((1 - 1/r) d + (s - d/p')); the optimizer
//! tau = t^alpha equalizes the two sides of the trade-off, and
//! alpha * d / r' = theta.
double alpha_exponent(double s, double d, const ExponentSet& e);

}  // namespace wadm

#endif  // WADM_EXPONENTS_HPP_

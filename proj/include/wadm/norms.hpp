#ifndef WADM_NORMS_HPP_
#define WADM_NORMS_HPP_

#include "wadm/ball.hpp"
#include "wadm/exponents.hpp"
#include "wadm/growth.hpp"
#include "wadm/weight.hpp"

namespace wadm {

//! A certified upper bound: the true quantity lies in
//! [value - errorBound, value].
struct CertifiedValue {
  double value = 0.0;
  double errorBound = 0.0;
};

//! Closed-form geometric majorant for the tail sum
//!   sum_{rho(x,y) >= tau} w^{-p'}(x, y)
//! of a polynomial weight with exponent s, over a group whose balls satisfy
//! |B(x, t)| <= C t^d. Summing over the annuli 2^{j-1} tau <= rho < 2^j tau
//! gives
//!   C * 2^{p's} * tau^{-(p's - d)} * 2^{d - p's} / (1 - 2^{d - p's}).
//! Requires p' s > d; otherwise throws HypothesisError("divergent tail ...").
double dyadic_tail_bound(double s, double pPrime, double C, double d,
                         double tau);

//! a_{r'}(tau): the r'-norm of v restricted to a ball of radius tau, doubled
//! for the two (equal) row and column suprema. For r' = inf this is twice the
//! largest value of v on the ball.
double a_norm(const BallIndex& index, const WeightSpec& v,
              const ExponentSet& e, double tau);

//! b_{p'}(tau): the p'-norm of v/w restricted to the complement of a ball of
//! radius tau, doubled. The sum is split into an exact part over
//! tau <= rho < truncationRadius and a certified dyadic tail using the growth
//! certificate; for saturated (finite) enumerations the tail is exactly zero.
//! Requires truncationRadius > tau and p' s_eff > dFit, where s_eff is the
//! polynomial decay exponent of v/w.
CertifiedValue b_norm(const BallIndex& index, const WeightSpec& w,
                      const WeightSpec& v, const ExponentSet& e, double tau,
                      int truncationRadius, const GrowthEstimate& growth);

//! The uniform norm bound of v w^{-1}: sup-over-rows plus sup-over-columns of
//! the p'-norm, computed as twice the single supremum. Exact over
//! rho < truncationRadius plus the certified dyadic tail.
CertifiedValue truncated_norm_w22(const BallIndex& index, const WeightSpec& w,
                                  const WeightSpec& v, const ExponentSet& e,
                                  int truncationRadius,
                                  const GrowthEstimate& growth);

// Explicit single-row / single-column norms, computed by sweeping the ambient
// index rather than through the radial reduction. They exist so translation
// invariance and row/column symmetry are testable facts instead of built-in
// assumptions. `index` must be centered at the identity and reach radius
// tau + rho(e, x0) (or truncationRadius + rho(e, x0) for the tail versions).

double explicit_row_ball_norm(const Group& group, const BallIndex& index,
                              const WeightSpec& v, double rPrime,
                              const Element& x0, double tau);
double explicit_col_ball_norm(const Group& group, const BallIndex& index,
                              const WeightSpec& v, double rPrime,
                              const Element& y0, double tau);
//! Finite part of the tail p'-norm at row x0: sum over tau <= rho < R.
double explicit_row_tail_sum(const Group& group, const BallIndex& index,
                             const WeightSpec& w, const WeightSpec& v,
                             double pPrime, const Element& x0, double tau,
                             int truncationRadius);
double explicit_col_tail_sum(const Group& group, const BallIndex& index,
                             const WeightSpec& w, const WeightSpec& v,
                             double pPrime, const Element& y0, double tau,
                             int truncationRadius);

}  // namespace wadm

#endif  // WADM_NORMS_HPP_

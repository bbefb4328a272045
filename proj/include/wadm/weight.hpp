#ifndef WADM_WEIGHT_HPP_
#define WADM_WEIGHT_HPP_

#include <cstdint>
#include <string>

#include "wadm/ball.hpp"
#include "wadm/group.hpp"

namespace wadm {

enum class WeightFamily { Trivial, Polynomial, Subexponential };

//! A radial weight family on G x G, evaluated through the word metric:
//!   polynomial      w(x, y) = (1 + rho(x, y))^s,        s >= 0
//!   subexponential  w(x, y) = exp(alpha * rho(x, y)^beta), alpha > 0, beta in (0,1)
//!   trivial         w = 1 (the polynomial family at s = 0)
struct WeightSpec {
  WeightFamily family = WeightFamily::Trivial;
  double s = 0.0;
  double alpha = 1.0;
  double beta = 0.5;

  static WeightSpec trivial() { return {}; }
  static WeightSpec polynomial(double s) {
    return {WeightFamily::Polynomial, s, 1.0, 0.5};
  }
  static WeightSpec subexponential(double alpha, double beta) {
    return {WeightFamily::Subexponential, 0.0, alpha, beta};
  }

  //! Throws ConfigError when the parameters leave the family's domain.
  void validate() const;

  //! Radial profile value at distance rho; always >= 1 for valid specs.
  //! Throws ResourceError("weight overflow ...") when the value leaves the
  //! double range.
  double at(double rho) const;

  //! True when the profile is unbounded as rho grows.
  bool unbounded() const;

  std::string describe() const;  // e.g. "poly(s=2)", "subexp(alpha=1,beta=0.5)"
};

//! w(x, y) evaluated through the metric; the standalone form runs its own BFS
//! and is intended for spot checks, not bulk sweeps.
double weight_value(const WeightSpec& w, const Group& group, const Element& x,
                    const Element& y, int radiusCap = 64);

struct AxiomReport {
  bool identityOne = false;       // w(e) = 1
  bool symmetric = false;         // w(x^-1) = w(x) on the sampled ball
  bool submultiplicative = false; // w(xy) <= w(x) w(y) up to relative 1e-12
  double maxRatio = 0.0;          // max of w(xy) / (w(x) w(y))
  Element worstX, worstY;         // pair attaining maxRatio
  int radius = 0;
  std::uint64_t pairsChecked = 0;

  bool pass() const { return identityOne && symmetric && submultiplicative; }
};

//! Exhaustively checks the weight axioms for g -> w(e, g) over all pairs in
//! B(e, radius)^2.
AxiomReport verify_weight_axioms(const WeightSpec& w, const Group& group,
                                 int radius, const BallBudget& budget = {});

//! Relative slack allowed in floating-point axiom comparisons.
inline constexpr double kAxiomSlack = 1e-12;

}  // namespace wadm

#endif  // WADM_WEIGHT_HPP_

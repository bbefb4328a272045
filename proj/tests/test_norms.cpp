#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "wadm/errors.hpp"
#include "wadm/norms.hpp"

using namespace wadm;

namespace {

// Direct summation oracle on Z: sum of 2 (1+n)^{-e} over n >= lo, summed to
// numerical convergence plus an integral majorant for the remainder.
double z_tail_oracle(double exponent, int lo) {
  double sum = 0.0;
  int n = lo;
  for (; n < 2'000'000; ++n) {
    const double term = 2.0 * std::pow(1.0 + n, -exponent);
    sum += term;
    if (term < 1e-18) break;
  }
  sum += 2.0 * std::pow(1.0 + n, 1.0 - exponent) / (exponent - 1.0);
  return sum;
}

GrowthEstimate z_certificate() {
  return estimate_growth_exponent(*make_integer_lattice(1), 4, 16);
}

}  // namespace

TEST_CASE("dyadic tail bound closed form") {
  // s=2, p'=2, C=2, d=1, tau=4:
  // 2 * 2^4 * 4^{-3} * (2^{-3} / (1 - 2^{-3})) = 1/14
  CHECK(dyadic_tail_bound(2.0, 2.0, 2.0, 1.0, 4.0) ==
        doctest::Approx(1.0 / 14.0).epsilon(1e-15));

  CHECK_THROWS_WITH_AS(dyadic_tail_bound(0.5, 2.0, 2.0, 1.0, 4.0),
                       doctest::Contains("divergent tail"), HypothesisError);

  // monotone decrease toward zero in tau
  double prev = dyadic_tail_bound(2.0, 2.0, 2.0, 1.0, 2.0);
  for (double tau : {4.0, 8.0, 64.0, 1024.0}) {
    const double bound = dyadic_tail_bound(2.0, 2.0, 2.0, 1.0, tau);
    CHECK(bound < prev);
    prev = bound;
  }
  CHECK(prev < 1e-8);
}

TEST_CASE("dyadic tail bound dominates direct summation on Z") {
  // the closed form must upper-bound the true tail of sum (1+rho)^{-p's}
  for (int tau : {2, 4, 8, 16}) {
    const double bound = dyadic_tail_bound(2.0, 2.0, 2.0, 1.0, tau);
    CHECK(bound >= z_tail_oracle(4.0, tau));
  }
}

TEST_CASE("a_norm examples") {
  auto z = make_integer_lattice(1);
  BallIndex ballZ = enumerate_ball(*z, z->identity(), 8);
  const WeightSpec v = WeightSpec::trivial();

  CHECK(a_norm(ballZ, v, ExponentSet::make(2.0, 2.0), 2.0) ==
        doctest::Approx(2.0 * std::sqrt(3.0)).epsilon(1e-15));
  // r' = inf (r = 1): twice the sup of v over the ball
  CHECK(a_norm(ballZ, v, ExponentSet::make(2.0, 1.0), 2.0) == 2.0);

  auto z2 = make_integer_lattice(2);
  BallIndex ballZ2 = enumerate_ball(*z2, z2->identity(), 8);
  // r' = 1 (r = inf): plain sum over the ball
  CHECK(a_norm(ballZ2, v, ExponentSet::make(2.0,
                                            std::numeric_limits<double>::infinity()),
               2.0) == doctest::Approx(10.0).epsilon(1e-15));
}

TEST_CASE("a_norm is nondecreasing in tau") {
  for (const auto& g : {make_integer_lattice(2), make_heisenberg()}) {
    BallIndex ball = enumerate_ball(*g, g->identity(), 10);
    const ExponentSet e = ExponentSet::make(2.0, 2.0);
    double prev = 0.0;
    for (int tau = 1; tau <= 10; ++tau) {
      const double a = a_norm(ball, WeightSpec::trivial(), e, tau);
      CHECK(a >= prev);
      prev = a;
    }
  }
}

TEST_CASE("b_norm matches the direct summation oracle on Z") {
  auto z = make_integer_lattice(1);
  BallIndex ball = enumerate_ball(*z, z->identity(), 512);
  const GrowthEstimate cert = z_certificate();
  const ExponentSet e = ExponentSet::make(2.0, 2.0);
  const WeightSpec w = WeightSpec::polynomial(2.0);
  const WeightSpec v = WeightSpec::trivial();

  const CertifiedValue b2 = b_norm(ball, w, v, e, 2.0, 512, cert);
  const double truth = 2.0 * std::sqrt(z_tail_oracle(4.0, 2));
  // spec'd value: doubled sqrt of 2 sum_{n>=2} (1+n)^{-4} ~ 0.3982
  CHECK(truth == doctest::Approx(0.3982284).epsilon(1e-6));
  CHECK(b2.value >= truth - 1e-15);        // certified upper bound
  CHECK(b2.value - truth <= b2.errorBound);

  SUBCASE("nonincreasing in tau") {
    const CertifiedValue b4 = b_norm(ball, w, v, e, 4.0, 512, cert);
    CHECK(b4.value <= b2.value);
  }
  SUBCASE("empty exact range rejected") {
    CHECK_THROWS_AS(b_norm(ball, w, v, e, 512.0, 512, cert), ConfigError);
    CHECK_THROWS_AS(b_norm(ball, w, v, e, 600.0, 512, cert), ConfigError);
  }
  SUBCASE("sup norm for p = 1") {
    const ExponentSet e1 = ExponentSet::make(1.0, 2.0);
    const CertifiedValue b = b_norm(ball, w, v, e1, 2.0, 512, cert);
    CHECK(b.value == doctest::Approx(2.0 / 9.0).epsilon(1e-15));  // 2 w(2)^-1
    CHECK(b.errorBound == 0.0);
  }
}

TEST_CASE("b_norm is exactly zero beyond a finite group's diameter") {
  auto z12 = make_cyclic(12);
  BallIndex ball = enumerate_ball(*z12, z12->identity(), 20);
  const GrowthEstimate cert = estimate_growth_exponent(*z12, 2, 20);
  const ExponentSet e = ExponentSet::make(2.0, 2.0);
  const CertifiedValue b = b_norm(ball, WeightSpec::polynomial(2.0),
                                  WeightSpec::trivial(), e, 7.0, 20, cert);
  CHECK(b.value == 0.0);
  CHECK(b.errorBound == 0.0);
}

TEST_CASE("w22 norm on Z against the zeta-function value") {
  auto z = make_integer_lattice(1);
  BallIndex ball = enumerate_ball(*z, z->identity(), 64);
  const GrowthEstimate cert = z_certificate();
  const ExponentSet e = ExponentSet::make(2.0, 2.0);

  const CertifiedValue norm = truncated_norm_w22(
      ball, WeightSpec::polynomial(2.0), WeightSpec::trivial(), e, 64, cert);

  const double zeta4 = std::pow(std::numbers::pi, 4) / 90.0;
  const double target = 2.0 * std::sqrt(2.0 * zeta4 - 1.0);
  CHECK(norm.value >= target - 1e-12);
  CHECK(norm.value - target <= norm.errorBound);
  CHECK(norm.errorBound < 1e-3);
}

TEST_CASE("w22 sup norm for p = 1 is exactly 2") {
  auto z = make_integer_lattice(1);
  BallIndex ball = enumerate_ball(*z, z->identity(), 16);
  const GrowthEstimate cert = z_certificate();
  const CertifiedValue norm =
      truncated_norm_w22(ball, WeightSpec::polynomial(2.0),
                         WeightSpec::trivial(), ExponentSet::make(1.0, 2.0),
                         16, cert);
  CHECK(norm.value == 2.0);
  CHECK(norm.errorBound == 0.0);
}

TEST_CASE("w22 rejects the divergent boundary case") {
  auto z2 = make_integer_lattice(2);
  BallIndex ball = enumerate_ball(*z2, z2->identity(), 32);
  const GrowthEstimate cert = estimate_growth_exponent(*z2, 4, 16);
  CHECK_THROWS_WITH_AS(
      truncated_norm_w22(ball, WeightSpec::polynomial(1.0),
                         WeightSpec::trivial(), ExponentSet::make(2.0, 2.0),
                         32, cert),
      doctest::Contains("non-convergent"), HypothesisError);
}

TEST_CASE("truncation soundness: certified sums dominate longer direct sums") {
  // exact part over [tau, R) plus the tail bound at R must dominate the
  // direct sum over [tau, R') for every R' up to 4R
  for (const auto& g : {make_integer_lattice(1), make_integer_lattice(2)}) {
    CAPTURE(g->name());
    const bool isZ = g->name() == "Z";
    const GrowthEstimate cert = estimate_growth_exponent(*g, 4, 16);
    const double s = isZ ? 2.0 : 3.0;
    const double pPrime = 2.0;
    BallIndex ball = enumerate_ball(*g, g->identity(), 64);
    auto direct = [&](int lo, int hi) {
      double sum = 0.0;
      for (int n = lo; n < hi; ++n) {
        sum += static_cast<double>(ball.shell_count(n)) *
               std::pow(1.0 + n, -pPrime * s);
      }
      return sum;
    };
    for (int tau : {2, 4}) {
      for (int R : {8, 16}) {
        const double certified =
            direct(tau, R) + dyadic_tail_bound(s, pPrime, cert.cFit, cert.dFit,
                                               static_cast<double>(R));
        for (int factor : {2, 4}) {
          CHECK(certified >= direct(tau, R * factor));
        }
      }
    }
  }
}

TEST_CASE("row and column norms agree and are center-independent") {
  const std::vector<GroupPtr> groups = {make_integer_lattice(2),
                                        make_heisenberg(), make_cyclic(6)};
  for (const auto& g : groups) {
    CAPTURE(g->name());
    BallIndex index = enumerate_ball(*g, g->identity(), 12);
    const WeightSpec w = WeightSpec::polynomial(2.0);
    const WeightSpec v = WeightSpec::trivial();
    const double tau = 3.0;
    const Element shifted =
        g->multiply(g->generators().front(), g->generators().back());

    for (double exponent : {1.0, 2.0}) {
      CAPTURE(exponent);
      const double atIdentity =
          explicit_row_ball_norm(*g, index, v, exponent, g->identity(), tau);
      const double atShifted =
          explicit_row_ball_norm(*g, index, v, exponent, shifted, tau);
      const double column =
          explicit_col_ball_norm(*g, index, v, exponent, shifted, tau);
      CHECK(atIdentity == atShifted);  // translation invariance, exact
      CHECK(atShifted == column);      // row sup equals column sup, exact

      const double rowTail = explicit_row_tail_sum(*g, index, w, v, exponent,
                                                   shifted, tau, 8);
      const double colTail = explicit_col_tail_sum(*g, index, w, v, exponent,
                                                   shifted, tau, 8);
      const double tailAtE = explicit_row_tail_sum(*g, index, w, v, exponent,
                                                   g->identity(), tau, 8);
      CHECK(rowTail == colTail);
      CHECK(rowTail == tailAtE);
    }

    // the radial fast path computes the same single-sup values
    const ExponentSet e = ExponentSet::make(2.0, 2.0);
    CHECK(a_norm(index, v, e, tau) ==
          doctest::Approx(2.0 * explicit_row_ball_norm(*g, index, v, e.rPrime,
                                                       g->identity(), tau))
              .epsilon(1e-14));
  }
}

#include <doctest.h>

#include <cmath>
#include <vector>

#include "wadm/errors.hpp"
#include "wadm/weight.hpp"

using namespace wadm;

namespace {

Element el(std::initializer_list<std::int64_t> v) {
  return Element(std::vector<std::int64_t>(v));
}

}  // namespace

TEST_CASE("weight values from the radial formulas") {
  auto z = make_integer_lattice(1);
  const WeightSpec poly2 = WeightSpec::polynomial(2.0);
  CHECK(weight_value(poly2, *z, el({0}), el({3})) == doctest::Approx(16.0));

  const WeightSpec sub = WeightSpec::subexponential(1.0, 0.5);
  CHECK(weight_value(sub, *z, el({0}), el({4})) ==
        doctest::Approx(std::exp(2.0)).epsilon(1e-12));

  for (const WeightSpec& w :
       {WeightSpec::trivial(), poly2, sub, WeightSpec::polynomial(0.5)}) {
    CHECK(weight_value(w, *z, el({5}), el({5})) == 1.0);
  }
}

TEST_CASE("weight profile is symmetric and monotone in the distance") {
  auto z2 = make_integer_lattice(2);
  const WeightSpec w = WeightSpec::polynomial(1.5);
  CHECK(weight_value(w, *z2, el({1, 2}), el({-2, 0})) ==
        weight_value(w, *z2, el({-2, 0}), el({1, 2})));
  double prev = 0.0;
  for (int rho = 0; rho <= 20; ++rho) {
    const double value = w.at(rho);
    CHECK(value >= prev);
    CHECK(value >= 1.0);
    prev = value;
  }
}

TEST_CASE("polynomial weight at s = 0 equals the trivial weight") {
  const WeightSpec zero = WeightSpec::polynomial(0.0);
  const WeightSpec triv = WeightSpec::trivial();
  for (int rho = 0; rho <= 32; ++rho) {
    CHECK(zero.at(rho) == triv.at(rho));
  }
}

TEST_CASE("axiom sweep: polynomial weights on Z pass with ratio <= 1") {
  auto z = make_integer_lattice(1);
  const AxiomReport report =
      verify_weight_axioms(WeightSpec::polynomial(2.0), *z, 6);
  CHECK(report.pass());
  CHECK(report.maxRatio <= 1.0 + kAxiomSlack);
  CHECK(report.pairsChecked == 11 * 11);
}

TEST_CASE("axiom sweep: trivial weight has all ratios exactly 1") {
  auto h = make_heisenberg();
  const AxiomReport report = verify_weight_axioms(WeightSpec::trivial(), *h, 4);
  CHECK(report.pass());
  CHECK(report.maxRatio == 1.0);
}

TEST_CASE("axiom sweep: subexponential weight on Z^2 passes") {
  auto z2 = make_integer_lattice(2);
  const AxiomReport report =
      verify_weight_axioms(WeightSpec::subexponential(1.0, 0.5), *z2, 5);
  CHECK(report.pass());
}

TEST_CASE("axiom sweep across the catalog at small radius") {
  const std::vector<GroupPtr> groups = {make_integer_lattice(2),
                                        make_heisenberg(), make_cyclic(12)};
  const std::vector<WeightSpec> weights = {
      WeightSpec::trivial(), WeightSpec::polynomial(0.5),
      WeightSpec::polynomial(3.0), WeightSpec::subexponential(0.7, 0.3)};
  for (const auto& g : groups) {
    for (const WeightSpec& w : weights) {
      CAPTURE(g->name());
      CAPTURE(w.describe());
      CHECK(verify_weight_axioms(w, *g, 4).pass());
    }
  }
}

TEST_CASE("weight overflow raises an explicit error") {
  const WeightSpec sub = WeightSpec::subexponential(200.0, 0.9);
  CHECK_THROWS_WITH_AS(sub.at(1e6), doctest::Contains("weight overflow"),
                       ResourceError);
}

TEST_CASE("weight parameter validation") {
  CHECK_THROWS_AS(WeightSpec::polynomial(-1.0).validate(), ConfigError);
  CHECK_THROWS_AS(WeightSpec::subexponential(0.0, 0.5).validate(), ConfigError);
  CHECK_THROWS_AS(WeightSpec::subexponential(1.0, 1.0).validate(), ConfigError);
  CHECK_THROWS_AS(WeightSpec::subexponential(1.0, 0.0).validate(), ConfigError);
  CHECK_NOTHROW(WeightSpec::polynomial(0.0).validate());
}

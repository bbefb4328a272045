#include "wadm/weight.hpp"

#include <cmath>
#include <sstream>

#include "wadm/errors.hpp"

namespace wadm {

void WeightSpec::validate() const {
  switch (family) {
    case WeightFamily::Trivial:
      return;
    case WeightFamily::Polynomial:
      if (!(s >= 0.0)) throw ConfigError("weight.s: must be >= 0");
      return;
    case WeightFamily::Subexponential:
      if (!(alpha > 0.0)) throw ConfigError("weight.alpha: must be > 0");
      if (!(beta > 0.0 && beta < 1.0)) {
        throw ConfigError("weight.beta: must lie in (0, 1)");
      }
      return;
  }
  throw ConfigError("weight: unknown family");
}

double WeightSpec::at(double rho) const {
  double value = 1.0;
  switch (family) {
    case WeightFamily::Trivial:
      return 1.0;
    case WeightFamily::Polynomial:
      value = std::pow(1.0 + rho, s);
      break;
    case WeightFamily::Subexponential:
      value = std::exp(alpha * std::pow(rho, beta));
      break;
  }
  if (!std::isfinite(value)) {
    throw ResourceError("weight overflow at distance " + std::to_string(rho));
  }
  return value;
}

bool WeightSpec::unbounded() const {
  switch (family) {
    case WeightFamily::Trivial:
      return false;
    case WeightFamily::Polynomial:
      return s > 0.0;
    case WeightFamily::Subexponential:
      return true;
  }
  return false;
}

std::string WeightSpec::describe() const {
  std::ostringstream out;
  switch (family) {
    case WeightFamily::Trivial:
      out << "trivial";
      break;
    case WeightFamily::Polynomial:
      out << "poly(s=" << s << ")";
      break;
    case WeightFamily::Subexponential:
      out << "subexp(alpha=" << alpha << ",beta=" << beta << ")";
      break;
  }
  return out.str();
}

double weight_value(const WeightSpec& w, const Group& group, const Element& x,
                    const Element& y, int radiusCap) {
  w.validate();
  return w.at(metric(group, x, y, radiusCap));
}

AxiomReport verify_weight_axioms(const WeightSpec& w, const Group& group,
                                 int radius, const BallBudget& budget) {
  w.validate();
  if (radius < 1) throw ConfigError("verify-weight: radius must be >= 1");

  // Products of two ball elements reach distance 2(radius-1), so an index of
  // radius 2*radius - 1 covers every lookup below.
  BallIndex index = BallIndex::build(group, group.identity(), 2 * radius - 1,
                                     budget);

  AxiomReport report;
  report.radius = radius;
  report.identityOne = w.at(0.0) == 1.0;

  std::vector<const Element*> ball;
  for (int n = 0; n < radius && n < index.max_radius(); ++n) {
    for (const Element& g : index.shell(n)) ball.push_back(&g);
  }

  report.symmetric = true;
  for (const Element* g : ball) {
    const auto d = index.distance(group.invert(*g));
    if (!d || w.at(*d) != w.at(*index.distance(*g))) {
      report.symmetric = false;
      break;
    }
  }

  report.submultiplicative = true;
  report.maxRatio = 0.0;
  for (const Element* x : ball) {
    const double wx = w.at(*index.distance(*x));
    for (const Element* y : ball) {
      const double wy = w.at(*index.distance(*y));
      const auto dxy = index.distance(group.multiply(*x, *y));
      const double wxy = w.at(*dxy);
      const double ratio = wxy / (wx * wy);
      ++report.pairsChecked;
      if (ratio > report.maxRatio) {
        report.maxRatio = ratio;
        report.worstX = *x;
        report.worstY = *y;
      }
    }
  }
  if (report.maxRatio > 1.0 + kAxiomSlack) report.submultiplicative = false;
  return report;
}

}  // namespace wadm

#include "wadm/ball.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "wadm/errors.hpp"

namespace wadm {

struct BallIndex::DistanceMap {
  std::unordered_map<Element, int, ElementHash> dist;
};

BallIndex BallIndex::build(const Group& group, const Element& center,
                           int maxRadius, const BallBudget& budget) {
  if (maxRadius < 1) throw ConfigError("ball: maxRadius must be >= 1");
  if (group.generators().empty()) {
    throw ConfigError("ball: generator set is empty");
  }

  BallIndex index;
  index.center_ = center;
  index.maxRadius_ = maxRadius;
  index.shells_.resize(maxRadius);
  auto dm = std::make_shared<DistanceMap>();

  index.shells_[0] = {center};
  dm->dist.emplace(center, 0);
  index.total_ = 1;

  for (int n = 1; n < maxRadius; ++n) {
    std::vector<Element> next;
    for (const Element& u : index.shells_[n - 1]) {
      for (const Element& g : group.generators()) {
        Element w = group.multiply(u, g);
        if (dm->dist.emplace(w, n).second) {
          next.push_back(std::move(w));
        }
      }
    }
    if (next.empty()) {
      index.saturationRadius_ = n;
      break;
    }
    index.total_ += next.size();
    if (index.total_ > budget.maxElements) {
      throw ResourceError("ball too large at radius " + std::to_string(n) +
                          ": element cap " +
                          std::to_string(budget.maxElements) + " exceeded");
    }
    std::sort(next.begin(), next.end(), CanonicalLess{});
    index.shells_[n] = std::move(next);
  }

  index.cumulative_.resize(maxRadius + 1);
  index.cumulative_[0] = 0;
  for (int n = 0; n < maxRadius; ++n) {
    index.cumulative_[n + 1] = index.cumulative_[n] + index.shells_[n].size();
  }
  index.distances_ = std::move(dm);
  return index;
}

const std::vector<Element>& BallIndex::shell(int n) const {
  return shells_.at(n);
}

std::uint64_t BallIndex::shell_count(int n) const {
  return shells_.at(n).size();
}

std::uint64_t BallIndex::count(double tau) const {
  if (!(tau >= 1.0)) throw ConfigError("ball: tau must be >= 1");
  if (tau > maxRadius_ && !saturated()) {
    throw ConfigError("ball: tau exceeds the enumerated radius");
  }
  // Strict inequality: rho < tau over integer rho means rho <= ceil(tau) - 1.
  auto top = static_cast<std::int64_t>(std::ceil(tau));
  top = std::min<std::int64_t>(top, maxRadius_);
  return cumulative_[static_cast<std::size_t>(top)];
}

std::optional<int> BallIndex::distance(const Element& g) const {
  auto it = distances_->dist.find(g);
  if (it == distances_->dist.end()) return {};
  return it->second;
}

BallIndex enumerate_ball(const Group& group, const Element& center,
                         int maxRadius, const BallBudget& budget) {
  return BallIndex::build(group, center, maxRadius, budget);
}

int word_length(const Group& group, const Element& g, int radiusCap,
                const BallBudget& budget) {
  if (g == group.identity()) return 0;
  std::unordered_map<Element, int, ElementHash> dist;
  dist.emplace(group.identity(), 0);
  std::vector<Element> frontier = {group.identity()};
  std::uint64_t total = 1;
  for (int n = 1; n <= radiusCap; ++n) {
    std::vector<Element> next;
    for (const Element& u : frontier) {
      for (const Element& gen : group.generators()) {
        Element w = group.multiply(u, gen);
        if (dist.emplace(w, n).second) {
          if (w == g) return n;
          next.push_back(std::move(w));
        }
      }
    }
    if (next.empty()) break;  // group exhausted, element unreachable
    total += next.size();
    if (total > budget.maxElements) {
      throw ResourceError("length exceeds cap: element cap " +
                          std::to_string(budget.maxElements) +
                          " exceeded at radius " + std::to_string(n));
    }
    frontier = std::move(next);
  }
  throw ResourceError("length exceeds cap: element not within radius " +
                      std::to_string(radiusCap));
}

int metric(const Group& group, const Element& x, const Element& y,
           int radiusCap, const BallBudget& budget) {
  return word_length(group, group.multiply(group.invert(x), y), radiusCap,
                     budget);
}

}  // namespace wadm

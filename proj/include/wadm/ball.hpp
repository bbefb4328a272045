#ifndef WADM_BALL_HPP_
#define WADM_BALL_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "wadm/group.hpp"

namespace wadm {

//! Enumeration budget. The default cap matches the documented limit of 10^7
//! elements; the CLI lets the environment raise or lower it.
struct BallBudget {
  std::uint64_t maxElements = 10'000'000;
};

//! Exact metric ball around a center, organized by word distance.
//!
//! shell(n) holds the elements at distance exactly n, sorted canonically, for
//! every n < max_radius(). Balls use the strict convention
//! B(x, tau) = {y : rho(x, y) < tau}, so count(tau) sums shells 0..ceil(tau)-1.
//! If the group is exhausted before max_radius() the index is "saturated" and
//! the remaining shells are empty.
class BallIndex {
 public:
  static BallIndex build(const Group& group, const Element& center,
                         int maxRadius, const BallBudget& budget = {});

  const Element& center() const { return center_; }
  int max_radius() const { return maxRadius_; }

  const std::vector<Element>& shell(int n) const;
  std::uint64_t shell_count(int n) const;

  //! |B(center, tau)| for real tau in [1, max_radius()].
  std::uint64_t count(double tau) const;

  //! Word distance from the center, if the element lies within the index.
  std::optional<int> distance(const Element& g) const;

  std::uint64_t total_elements() const { return total_; }
  bool saturated() const { return saturationRadius_ >= 0; }

  //! First radius with an empty shell (= diameter + 1), or -1 if the index
  //! never exhausted the group.
  int saturation_radius() const { return saturationRadius_; }

 private:
  BallIndex() = default;

  Element center_;
  int maxRadius_ = 0;
  int saturationRadius_ = -1;
  std::uint64_t total_ = 0;
  std::vector<std::vector<Element>> shells_;
  std::vector<std::uint64_t> cumulative_;  // cumulative_[n] = |B(center, n)|
  // distance map lives in the implementation; see ball.cpp
  struct DistanceMap;
  std::shared_ptr<const DistanceMap> distances_;
};

//! Exact ball enumeration by breadth-first search; throws ResourceError
//! ("ball too large ...") when the element budget is hit.
BallIndex enumerate_ball(const Group& group, const Element& center,
                         int maxRadius, const BallBudget& budget = {});

//! Exact word length by BFS from the identity; throws ResourceError
//! ("length exceeds cap ...") if the element is not reached within radiusCap.
int word_length(const Group& group, const Element& g, int radiusCap = 64,
                const BallBudget& budget = {});

//! Left-invariant word metric rho(x, y) = length(x^-1 y).
int metric(const Group& group, const Element& x, const Element& y,
           int radiusCap = 64, const BallBudget& budget = {});

}  // namespace wadm

#endif  // WADM_BALL_HPP_

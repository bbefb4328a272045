#ifndef WADM_GROUP_HPP_
#define WADM_GROUP_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wadm/element.hpp"

namespace wadm {

//! A finitely generated group given by its operations and a finite symmetric
//! generating set (closed under inversion). Implementations are immutable and
//! safe to share across threads.
class Group {
 public:
  virtual ~Group() = default;

  virtual const std::string& name() const = 0;
  virtual const Element& identity() const = 0;

  //! Symmetric generating set; word length is measured against this set.
  virtual const std::vector<Element>& generators() const = 0;

  virtual Element multiply(const Element& a, const Element& b) const = 0;
  virtual Element invert(const Element& a) const = 0;

  //! Growth exponent known in closed form from the ball counts, when the
  //! family forces one (the integer lattices). Others return nullopt and the
  //! fitted exponent is used instead.
  virtual std::optional<double> exact_growth_exponent() const { return {}; }

  //! Human-readable element rendering; the free group prints reduced words.
  virtual std::string format(const Element& g) const { return g.to_string(); }
};

using GroupPtr = std::shared_ptr<const Group>;

GroupPtr make_integer_lattice(int dimension);
GroupPtr make_heisenberg();
GroupPtr make_cyclic(std::int64_t modulus);
GroupPtr make_free2();

//! Catalog lookup by name: "Z", "Z^d" (d >= 1), "heisenberg", "Z/n" (n >= 2),
//! "free2". Throws ConfigError for anything else.
GroupPtr make_group(const std::string& spec);

}  // namespace wadm

#endif  // WADM_GROUP_HPP_

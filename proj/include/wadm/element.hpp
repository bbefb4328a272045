#ifndef WADM_ELEMENT_HPP_
#define WADM_ELEMENT_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace wadm {

//! A group element in canonical form: a small integer tuple.
//!
//! The meaning of the tuple is group-specific (lattice coordinates for Z^d,
//! the triple (a, b, c) for the discrete Heisenberg group, a single residue
//! for Z/n, a reduced word over {a, a^-1, b, b^-1} encoded as {1, -1, 2, -2}
//! for the free group). Two elements are equal iff their tuples are equal,
//! so hashing and comparison never consult the group.
class Element {
 public:
  Element() = default;
  explicit Element(std::vector<std::int64_t> rep) : rep_(std::move(rep)) {}

  const std::vector<std::int64_t>& rep() const { return rep_; }
  bool operator==(const Element&) const = default;

  //! Renders "(a,b,...)" for tuples, "e"/"aB..." for words, "n" for scalars.
  std::string to_string() const;

 private:
  std::vector<std::int64_t> rep_;
};

//! Canonical total order used for deterministic iteration: shorter tuples
//! first, then componentwise by magnitude with positive entries before
//! negative ones (0, 1, -1, 2, -2, ...). Balls therefore list the identity
//! first and grow outward in a fixed, reproducible order.
struct CanonicalLess {
  bool operator()(const Element& a, const Element& b) const;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const;
};

}  // namespace wadm

#endif  // WADM_ELEMENT_HPP_

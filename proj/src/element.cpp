#include "wadm/element.hpp"

#include <cstdlib>
#include <sstream>

namespace wadm {

namespace {

// Scalar order: magnitude first, positive before negative (0, 1, -1, 2, ...).
bool scalar_less(std::int64_t a, std::int64_t b) {
  const std::uint64_t ma = a < 0 ? static_cast<std::uint64_t>(-(a + 1)) + 1
                                 : static_cast<std::uint64_t>(a);
  const std::uint64_t mb = b < 0 ? static_cast<std::uint64_t>(-(b + 1)) + 1
                                 : static_cast<std::uint64_t>(b);
  if (ma != mb) return ma < mb;
  return a > b;
}

}  // namespace

bool CanonicalLess::operator()(const Element& a, const Element& b) const {
  const auto& x = a.rep();
  const auto& y = b.rep();
  if (x.size() != y.size()) return x.size() < y.size();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != y[i]) return scalar_less(x[i], y[i]);
  }
  return false;
}

std::size_t ElementHash::operator()(const Element& e) const {
  // FNV-1a over the raw words, salted with the length.
  std::uint64_t h = 14695981039346656037ull ^ e.rep().size();
  for (std::int64_t v : e.rep()) {
    auto u = static_cast<std::uint64_t>(v);
    for (int k = 0; k < 8; ++k) {
      h ^= (u >> (8 * k)) & 0xff;
      h *= 1099511628211ull;
    }
  }
  return static_cast<std::size_t>(h);
}

std::string Element::to_string() const {
  if (rep_.empty()) return "e";
  if (rep_.size() == 1) return std::to_string(rep_[0]);
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < rep_.size(); ++i) {
    if (i) out << ',';
    out << rep_[i];
  }
  out << ')';
  return out.str();
}

}  // namespace wadm

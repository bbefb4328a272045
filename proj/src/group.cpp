#include "wadm/group.hpp"

#include <charconv>
#include <cstdlib>
#include <string>
#include <vector>

#include "wadm/errors.hpp"

namespace wadm {

namespace {

Element tuple(std::initializer_list<std::int64_t> v) {
  return Element(std::vector<std::int64_t>(v));
}

// ---------------------------------------------------------------------------
// Z^d with generators +-e_i; word length is the l^1 norm.

class IntegerLattice final : public Group {
 public:
  explicit IntegerLattice(int dimension)
      : name_(dimension == 1 ? "Z" : "Z^" + std::to_string(dimension)),
        dimension_(dimension),
        identity_(Element(std::vector<std::int64_t>(dimension, 0))) {
    for (int i = 0; i < dimension; ++i) {
      std::vector<std::int64_t> plus(dimension, 0), minus(dimension, 0);
      plus[i] = 1;
      minus[i] = -1;
      generators_.push_back(Element(std::move(plus)));
      generators_.push_back(Element(std::move(minus)));
    }
  }

  const std::string& name() const override { return name_; }
  const Element& identity() const override { return identity_; }
  const std::vector<Element>& generators() const override {
    return generators_;
  }

  Element multiply(const Element& a, const Element& b) const override {
    std::vector<std::int64_t> out(dimension_);
    for (int i = 0; i < dimension_; ++i) out[i] = a.rep()[i] + b.rep()[i];
    return Element(std::move(out));
  }

  Element invert(const Element& a) const override {
    std::vector<std::int64_t> out(dimension_);
    for (int i = 0; i < dimension_; ++i) out[i] = -a.rep()[i];
    return Element(std::move(out));
  }

  std::optional<double> exact_growth_exponent() const override {
    return static_cast<double>(dimension_);
  }

 private:
  std::string name_;
  int dimension_;
  Element identity_;
  std::vector<Element> generators_;
};

// ---------------------------------------------------------------------------
// Discrete Heisenberg group H_3(Z): triples (a, b, c) with
// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a b'). Generated by x = (1,0,0),
// y = (0,1,0) and their inverses; the commutator (0,0,1) has word length 4.

class Heisenberg final : public Group {
 public:
  Heisenberg()
      : identity_(tuple({0, 0, 0})),
        generators_{tuple({1, 0, 0}), tuple({-1, 0, 0}), tuple({0, 1, 0}),
                    tuple({0, -1, 0})} {}

  const std::string& name() const override { return name_; }
  const Element& identity() const override { return identity_; }
  const std::vector<Element>& generators() const override {
    return generators_;
  }

  Element multiply(const Element& u, const Element& v) const override {
    const auto& a = u.rep();
    const auto& b = v.rep();
    return tuple({a[0] + b[0], a[1] + b[1], a[2] + b[2] + a[0] * b[1]});
  }

  Element invert(const Element& u) const override {
    const auto& a = u.rep();
    return tuple({-a[0], -a[1], -a[2] + a[0] * a[1]});
  }

 private:
  std::string name_ = "heisenberg";
  Element identity_;
  std::vector<Element> generators_;
};

// ---------------------------------------------------------------------------
// Z/n with generators +-1 (a single generator when n = 2).

class Cyclic final : public Group {
 public:
  explicit Cyclic(std::int64_t n)
      : name_("Z/" + std::to_string(n)), modulus_(n), identity_(tuple({0})) {
    generators_.push_back(tuple({1}));
    if (n > 2) generators_.push_back(tuple({n - 1}));
  }

  const std::string& name() const override { return name_; }
  const Element& identity() const override { return identity_; }
  const std::vector<Element>& generators() const override {
    return generators_;
  }

  Element multiply(const Element& a, const Element& b) const override {
    return tuple({(a.rep()[0] + b.rep()[0]) % modulus_});
  }

  Element invert(const Element& a) const override {
    return tuple({(modulus_ - a.rep()[0]) % modulus_});
  }

 private:
  std::string name_;
  std::int64_t modulus_;
  Element identity_;
  std::vector<Element> generators_;
};

// ---------------------------------------------------------------------------
// Free group F_2 on {a, b}: reduced words over {1, -1, 2, -2} where -k is the
// inverse of k. Exponential growth; serves as the control case.

class Free2 final : public Group {
 public:
  Free2()
      : identity_(Element(std::vector<std::int64_t>{})),
        generators_{tuple({1}), tuple({-1}), tuple({2}), tuple({-2})} {}

  const std::string& name() const override { return name_; }
  const Element& identity() const override { return identity_; }
  const std::vector<Element>& generators() const override {
    return generators_;
  }

  Element multiply(const Element& a, const Element& b) const override {
    std::vector<std::int64_t> out = a.rep();
    for (std::int64_t letter : b.rep()) {
      if (!out.empty() && out.back() == -letter) {
        out.pop_back();
      } else {
        out.push_back(letter);
      }
    }
    return Element(std::move(out));
  }

  Element invert(const Element& a) const override {
    std::vector<std::int64_t> out;
    out.reserve(a.rep().size());
    for (auto it = a.rep().rbegin(); it != a.rep().rend(); ++it) {
      out.push_back(-*it);
    }
    return Element(std::move(out));
  }

  std::string format(const Element& g) const override {
    if (g.rep().empty()) return "e";
    static const char* letters[] = {"B", "A", "", "a", "b"};  // -2..2
    std::string out;
    for (std::int64_t l : g.rep()) out += letters[l + 2];
    return out;
  }

 private:
  std::string name_ = "free2";
  Element identity_;
  std::vector<Element> generators_;
};

std::int64_t parse_positive_int(const std::string& text,
                                const std::string& what) {
  std::int64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value <= 0) {
    throw ConfigError("group: invalid " + what + " '" + text + "'");
  }
  return value;
}

}  // namespace

GroupPtr make_integer_lattice(int dimension) {
  if (dimension < 1) throw ConfigError("group: lattice dimension must be >= 1");
  return std::make_shared<IntegerLattice>(dimension);
}

GroupPtr make_heisenberg() { return std::make_shared<Heisenberg>(); }

GroupPtr make_cyclic(std::int64_t modulus) {
  if (modulus < 2) throw ConfigError("group: cyclic modulus must be >= 2");
  return std::make_shared<Cyclic>(modulus);
}

GroupPtr make_free2() { return std::make_shared<Free2>(); }

GroupPtr make_group(const std::string& spec) {
  if (spec == "Z") return make_integer_lattice(1);
  if (spec.rfind("Z^", 0) == 0) {
    return make_integer_lattice(
        static_cast<int>(parse_positive_int(spec.substr(2), "dimension")));
  }
  if (spec.rfind("Z/", 0) == 0) {
    return make_cyclic(parse_positive_int(spec.substr(2), "modulus"));
  }
  if (spec == "heisenberg") return make_heisenberg();
  if (spec == "free2") return make_free2();
  throw ConfigError("group: unknown group '" + spec +
                    "' (expected Z, Z^d, Z/n, heisenberg, free2)");
}

}  // namespace wadm

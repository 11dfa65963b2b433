#pragma once

#include <concepts>
#include <optional>
#include <vector>

#include "dgt/numeric.hpp"

namespace dgt {

/// Element of a rationalized module G0 = G tensor Q, represented as an exact
/// rational coordinate vector. Supports the linear algebra the chain systems
/// need.
struct QVec {
  std::vector<Rat> v;

  QVec() = default;
  explicit QVec(std::vector<Rat> x) : v(std::move(x)) {}

  QVec operator+(const QVec& o) const {
    QVec r = *this;
    for (std::size_t i = 0; i < v.size(); ++i) r.v[i] += o.v[i];
    return r;
  }
  QVec operator-(const QVec& o) const {
    QVec r = *this;
    for (std::size_t i = 0; i < v.size(); ++i) r.v[i] -= o.v[i];
    return r;
  }
  bool operator==(const QVec& o) const { return v == o.v; }

  friend QVec operator*(const Rat& s, const QVec& x) {
    QVec r = x;
    for (auto& c : r.v) c *= s;
    return r;
  }
};

inline Rat sup_norm(const QVec& x) {
  Rat m = 0;
  for (const auto& c : x.v) m = std::max(m, abs_rat(c));
  return m;
}

inline Rat sup_norm(const Rat& x) { return abs_rat(x); }

/// Behavior contract for an approximately divisible target (G, u) with exact
/// arithmetic, exact norm from the affine representation normalized at the
/// canonical unit, an exact order-unit test, and constructive approximation.
template <class G>
concept DenseTarget = requires(const G& g, const typename G::Element& e, const Rat& r,
                               const Int& k, const typename G::Q0& x) {
  typename G::Element;
  typename G::Q0;
  { g.zero() } -> std::same_as<typename G::Element>;
  { g.unit() } -> std::same_as<typename G::Element>;
  { g.add(e, e) } -> std::same_as<typename G::Element>;
  { g.sub(e, e) } -> std::same_as<typename G::Element>;
  { g.scale(k, e) } -> std::same_as<typename G::Element>;
  { g.equal(e, e) } -> std::same_as<bool>;
  { g.norm(e) } -> std::same_as<Rat>;
  { g.is_order_unit(e) } -> std::same_as<bool>;
  { g.approximate(r, r) } -> std::same_as<typename G::Element>;
  { g.between(r, r, e) } -> std::same_as<typename G::Element>;
  { g.small_coset_rep(e, k, r) } -> std::same_as<typename G::Element>;
  { g.divide_exact(e, k) } -> std::same_as<std::optional<typename G::Element>>;
  { g.to_q0(e) } -> std::same_as<typename G::Q0>;
  { g.q0_norm(x) } -> std::same_as<Rat>;
  { g.from_q0(x) } -> std::same_as<std::optional<typename G::Element>>;
  { g.approximate_q0(x, r) } -> std::same_as<typename G::Element>;
};

/// Z[1/p0]^k with the strict coordinatewise ordering (the simplification of
/// the product order): the positive cone is 0 together with the strictly
/// positive vectors, so order units are exactly the strictly positive
/// elements. Dense in R^k, hence approximately divisible. Norm is the sup
/// norm of coordinates (affine representation at the all-ones unit).
class DyadicVectorGroup {
 public:
  using Element = std::vector<Rat>;
  using Q0 = QVec;

  explicit DyadicVectorGroup(std::size_t dim, Int base = 2);

  std::size_t dimension() const { return dim_; }
  const Int& base() const { return base_; }

  bool is_element(const Element& e) const;
  Element make(std::vector<Rat> coords) const;  // validates denominators

  Element zero() const { return Element(dim_, Rat(0)); }
  Element unit() const { return Element(dim_, Rat(1)); }

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element scale(const Int& k, const Element& a) const;
  bool equal(const Element& a, const Element& b) const { return a == b; }

  Rat norm(const Element& e) const;
  bool is_order_unit(const Element& e) const;
  bool is_positive(const Element& e) const;  // zero or strictly positive

  /// Element within eps of the constant c (strictly, coordinatewise).
  Element approximate(const Rat& c, const Rat& eps) const;

  /// Element z with lo*ref < z < hi*ref coordinatewise; ref strictly positive.
  Element between(const Rat& lo, const Rat& hi, const Element& ref) const;

  /// h == g (mod k) with ||h|| < eps.
  Element small_coset_rep(const Element& g, const Int& k, const Rat& eps) const;

  std::optional<Element> divide_exact(const Element& g, const Int& k) const;

  Q0 to_q0(const Element& e) const { return QVec{e}; }
  Rat q0_norm(const Q0& x) const { return sup_norm(x); }
  std::optional<Element> from_q0(const Q0& x) const;
  /// Element y with ||y - x|| < eps for a rationalized target x.
  Element approximate_q0(const Q0& x, const Rat& eps) const;

 private:
  std::size_t dim_;
  Int base_;
};

static_assert(DenseTarget<DyadicVectorGroup>);

/// The rationals with the usual order: divisible, dense in R, norm |.|.
/// A minimal second model used to exercise the generic algorithms.
class RationalLine {
 public:
  using Element = Rat;
  using Q0 = Rat;

  Element zero() const { return 0; }
  Element unit() const { return 1; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element scale(const Int& k, const Element& a) const { return Rat(k) * a; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  Rat norm(const Element& e) const { return abs_rat(e); }
  bool is_order_unit(const Element& e) const { return e > 0; }
  bool is_positive(const Element& e) const { return e >= 0; }
  Element approximate(const Rat& c, const Rat&) const { return c; }
  Element between(const Rat& lo, const Rat& hi, const Element& ref) const {
    if (!(ref > 0)) throw std::invalid_argument("between: reference not positive");
    return (lo + hi) / 2 * ref;
  }
  Element small_coset_rep(const Element& g, const Int& k, const Rat&) const {
    return g - Rat(k) * (g / Rat(k));  // exactly zero: Q is divisible
  }
  std::optional<Element> divide_exact(const Element& g, const Int& k) const {
    if (k == 0) return std::nullopt;
    return g / Rat(k);
  }
  Q0 to_q0(const Element& e) const { return e; }
  Rat q0_norm(const Q0& x) const { return abs_rat(x); }
  std::optional<Element> from_q0(const Q0& x) const { return x; }
  Element approximate_q0(const Q0& x, const Rat&) const { return x; }
};

static_assert(DenseTarget<RationalLine>);

}  // namespace dgt

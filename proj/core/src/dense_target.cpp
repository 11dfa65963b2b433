#include "dgt/dense_target.hpp"

namespace dgt {

DyadicVectorGroup::DyadicVectorGroup(std::size_t dim, Int base)
    : dim_(dim), base_(std::move(base)) {
  if (dim_ == 0) throw std::invalid_argument("DyadicVectorGroup: zero dimension");
  if (base_ < 2) throw std::invalid_argument("DyadicVectorGroup: base must be >= 2");
}

bool DyadicVectorGroup::is_element(const Element& e) const {
  if (e.size() != dim_) return false;
  for (const auto& c : e)
    if (!is_power_of(den(c), base_)) return false;
  return true;
}

DyadicVectorGroup::Element DyadicVectorGroup::make(std::vector<Rat> coords) const {
  if (!is_element(coords))
    throw std::invalid_argument("DyadicVectorGroup: coordinates outside Z[1/p]");
  return coords;
}

DyadicVectorGroup::Element DyadicVectorGroup::add(const Element& a, const Element& b) const {
  Element r = a;
  for (std::size_t i = 0; i < dim_; ++i) r[i] += b[i];
  return r;
}

DyadicVectorGroup::Element DyadicVectorGroup::sub(const Element& a, const Element& b) const {
  Element r = a;
  for (std::size_t i = 0; i < dim_; ++i) r[i] -= b[i];
  return r;
}

DyadicVectorGroup::Element DyadicVectorGroup::scale(const Int& k, const Element& a) const {
  Element r = a;
  for (auto& c : r) c *= Rat(k);
  return r;
}

Rat DyadicVectorGroup::norm(const Element& e) const {
  Rat m = 0;
  for (const auto& c : e) m = std::max(m, abs_rat(c));
  return m;
}

bool DyadicVectorGroup::is_order_unit(const Element& e) const {
  for (const auto& c : e)
    if (c <= 0) return false;
  return true;
}

bool DyadicVectorGroup::is_positive(const Element& e) const {
  bool zero = true;
  for (const auto& c : e) zero &= (c == 0);
  return zero || is_order_unit(e);
}

DyadicVectorGroup::Element DyadicVectorGroup::approximate(const Rat& c, const Rat& eps) const {
  if (eps <= 0) throw std::invalid_argument("approximate: eps must be positive");
  Rat v = base_point_in(c - eps, c + eps, base_);
  return Element(dim_, v);
}

DyadicVectorGroup::Element DyadicVectorGroup::between(const Rat& lo, const Rat& hi,
                                                      const Element& ref) const {
  if (!(lo < hi)) throw std::invalid_argument("between: empty window");
  Element out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!(ref[i] > 0)) throw std::invalid_argument("between: reference not strictly positive");
    out[i] = base_point_in(lo * ref[i], hi * ref[i], base_);
  }
  return out;
}

DyadicVectorGroup::Element DyadicVectorGroup::small_coset_rep(const Element& g, const Int& k,
                                                              const Rat& eps) const {
  if (k == 0) throw std::invalid_argument("small_coset_rep: k must be nonzero");
  if (eps <= 0) throw std::invalid_argument("small_coset_rep: eps must be positive");
  Element h(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    Rat exact = g[i] / Rat(k);
    if (is_power_of(den(exact), base_)) {
      h[i] = 0;  // g_i is exactly divisible: the coset contains 0
      continue;
    }
    Rat lo = (g[i] - eps) / Rat(k), hi = (g[i] + eps) / Rat(k);
    if (hi < lo) std::swap(lo, hi);
    Rat z = base_point_in(lo, hi, base_);
    h[i] = g[i] - Rat(k) * z;
  }
  return h;
}

std::optional<DyadicVectorGroup::Element> DyadicVectorGroup::divide_exact(const Element& g,
                                                                          const Int& k) const {
  if (k == 0) return std::nullopt;
  Element r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    Rat q = g[i] / Rat(k);
    if (!is_power_of(den(q), base_)) return std::nullopt;
    r[i] = q;
  }
  return r;
}

std::optional<DyadicVectorGroup::Element> DyadicVectorGroup::from_q0(const Q0& x) const {
  if (x.v.size() != dim_) return std::nullopt;
  for (const auto& c : x.v)
    if (!is_power_of(den(c), base_)) return std::nullopt;
  return x.v;
}

DyadicVectorGroup::Element DyadicVectorGroup::approximate_q0(const Q0& x, const Rat& eps) const {
  if (x.v.size() != dim_) throw std::invalid_argument("approximate_q0: dimension mismatch");
  if (eps <= 0) throw std::invalid_argument("approximate_q0: eps must be positive");
  Element out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (is_power_of(den(x.v[i]), base_))
      out[i] = x.v[i];
    else
      out[i] = base_point_in(x.v[i] - eps, x.v[i] + eps, base_);
  }
  return out;
}

}  // namespace dgt

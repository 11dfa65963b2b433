#pragma once

#include <utility>
#include <vector>

#include "dgt/dense_target.hpp"

namespace dgt {

/// Raised when an approximation-dependent construction exhausts its retry
/// budget; callers may retry with a larger budget or tighter model precision.
struct RetryExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <DenseTarget G>
struct UnitSplit {
  typename G::Element v, w;
};

/// Splits an order unit exactly as u = p v + q w with both parts order units,
/// gcd(p, q) = 1, steering v toward r/p of u and w toward (1-r)/q of u.
/// Windows are verified exactly; when u is the canonical unit the stated
/// norm bounds ||v - r/p|| < eps/p and ||w - (1-r)/q|| < eps/q hold.
template <DenseTarget G>
UnitSplit<G> split_unit(const G& g, const typename G::Element& u, const Int& p, const Int& q,
                        const Rat& r, const Rat& eps) {
  if (p < 1 || q < 1) throw std::invalid_argument("split_unit: p, q must be positive");
  if (gcd_int(p, q) != 1) throw std::invalid_argument("split_unit: p, q must be coprime");
  if (!(r > 0 && r <= 1)) throw std::invalid_argument("split_unit: r must be in (0, 1]");
  if (eps <= 0) throw std::invalid_argument("split_unit: eps must be positive");
  if (!g.is_order_unit(u)) throw std::invalid_argument("split_unit: u is not an order unit");

  if (r < Rat(1, 2)) {
    UnitSplit<G> swapped = split_unit(g, u, q, p, Rat(1) - r, eps);
    return {swapped.w, swapped.v};
  }

  // pk == 1 (mod q); pk = qt + 1
  Int k = mod_inverse(p, q);
  Int t = (p * k - 1) / q;

  Rat upper = r / Rat(p);
  Rat lower = std::max(Rat(r - eps), Rat(r / 2)) / Rat(p);

  // Any z gives the exact identity; z only steers the windows:
  //   v = ku - qz,  w = pz - tu,  pv + qw = (pk - qt) u = u.
  typename G::Element z =
      g.between((Rat(k) - upper) / Rat(q), (Rat(k) - lower) / Rat(q), u);
  typename G::Element v = g.sub(g.scale(k, u), g.scale(q, z));
  typename G::Element w = g.sub(g.scale(p, z), g.scale(t, u));

  if (!g.equal(g.add(g.scale(p, v), g.scale(q, w)), u))
    throw std::logic_error("split_unit: identity failed to verify");
  if (!g.is_order_unit(v) || !g.is_order_unit(w))
    throw std::logic_error("split_unit: parts are not order units");
  return {v, w};
}

/// Cor 7.2: U = sum p_i v_i with all v_i order units, gcd{p_i} = 1, by the
/// recursive split through gcd of the tail.
template <DenseTarget G>
std::vector<typename G::Element> decompose_gcd(const G& g, const typename G::Element& unit_u,
                                               const std::vector<Int>& ps) {
  if (ps.empty()) throw std::invalid_argument("decompose_gcd: empty coefficient list");
  Int d = 0;
  for (const auto& p : ps) {
    if (p < 1) throw std::invalid_argument("decompose_gcd: coefficients must be positive");
    d = gcd_int(d, p);
  }
  if (d != 1) throw std::invalid_argument("decompose_gcd: gcd of coefficients must be 1");
  if (!g.is_order_unit(unit_u))
    throw std::invalid_argument("decompose_gcd: U is not an order unit");

  std::vector<typename G::Element> out;
  if (ps.size() == 1) {
    out.push_back(unit_u);  // p_1 = 1
    return out;
  }
  Int q = 0;
  for (std::size_t i = 1; i < ps.size(); ++i) q = gcd_int(q, ps[i]);
  Rat r(ps[0], Int(ps[0] + q));
  Rat eps = std::min(r, Rat(Rat(1) - r)) / 2;
  UnitSplit<G> split = split_unit(g, unit_u, ps[0], q, r, eps);
  out.push_back(split.v);

  std::vector<Int> rest;
  for (std::size_t i = 1; i < ps.size(); ++i) rest.push_back(ps[i] / q);
  std::vector<typename G::Element> tail = decompose_gcd(g, split.w, rest);
  out.insert(out.end(), tail.begin(), tail.end());

  // re-verify the assembled identity
  typename G::Element acc = g.zero();
  for (std::size_t i = 0; i < ps.size(); ++i) acc = g.add(acc, g.scale(ps[i], out[i]));
  if (!g.equal(acc, unit_u))
    throw std::logic_error("decompose_gcd: assembled identity failed to verify");
  return out;
}

/// Lemma 7.4, constructively: an order unit as an integer combination of
/// order units of norm < 1/n. Pairs are (coefficient, element).
template <DenseTarget G>
std::vector<std::pair<Int, typename G::Element>> small_order_unit_decomposition(
    const G& g, const typename G::Element& e, const Int& n) {
  if (n < 1) throw std::invalid_argument("small_order_unit_decomposition: n must be >= 1");
  if (!g.is_order_unit(e))
    throw std::invalid_argument("small_order_unit_decomposition: not an order unit");
  Rat bound = Rat(1, n);
  if (g.norm(e) < bound) return {{Int(1), e}};

  // p, q > n * ||e||, coprime: consecutive integers past the threshold
  Rat threshold = Rat(n) * g.norm(e);
  Int p = num(threshold) / den(threshold) + 1;
  Int q = p + 1;
  UnitSplit<G> split = split_unit(g, e, p, q, Rat(1, 2), Rat(1, 4));
  // positivity gives ||v|| <= ||e||/p < 1/n; verify exactly anyway
  if (!(g.norm(split.v) < bound && g.norm(split.w) < bound))
    throw std::logic_error("small_order_unit_decomposition: norms failed to verify");
  return {{p, split.v}, {q, split.w}};
}

}  // namespace dgt

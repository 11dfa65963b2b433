#include "dgt/counterexample.hpp"

#include "dgt/symbolic.hpp"

namespace dgt {

const char* to_string(MixedModelKind k) {
  switch (k) {
    case MixedModelKind::Q: return "Q";
    case MixedModelKind::Sqrt2Z: return "Sqrt2Z";
    default: return "QSqrt2";
  }
}

bool MixedModel::contains_scalar(const Rat& q_rational, const Rat& q_sqrt2) const {
  switch (kind_) {
    case MixedModelKind::Q: return q_sqrt2 == 0;
    case MixedModelKind::Sqrt2Z: return q_rational == 0 && den(q_sqrt2) == 1;
    case MixedModelKind::QSqrt2: return true;
  }
  return false;
}

bool MixedModel::contains(const MixedElement& e) const {
  for (const auto& [k, c] : e.integer_part.terms())
    if (k < 0) return false;
  return contains_scalar(e.q_rational, e.q_sqrt2);
}

std::pair<RatPoly, RatPoly> MixedModel::as_poly_pair(const MixedElement& e) const {
  // (1 - 2x) tail
  RatPoly one_minus_2x({Rat(1), Rat(-2)});
  std::vector<Rat> gc;
  if (!e.integer_part.is_zero()) {
    gc.assign(static_cast<std::size_t>(e.integer_part.max_exp()) + 1, Rat(0));
    for (const auto& [k, c] : e.integer_part.terms()) gc[static_cast<std::size_t>(k)] = Rat(c);
  }
  RatPoly a = RatPoly(std::move(gc)) + one_minus_2x * e.q_rational;
  RatPoly b = one_minus_2x * e.q_sqrt2;
  return {a, b};
}

std::pair<Rat, Rat> MixedModel::value_at(const MixedElement& e, const Rat& t) const {
  auto [a, b] = as_poly_pair(e);
  return {a.eval(t), b.eval(t)};
}

int MixedModel::sign_with_sqrt2(const Rat& a, const Rat& b) {
  // sign of a + sqrt(2) b, exactly
  if (b == 0) return a > 0 ? 1 : (a < 0 ? -1 : 0);
  if (a == 0) return b > 0 ? 1 : -1;
  if (a > 0 && b > 0) return 1;
  if (a < 0 && b < 0) return -1;
  // opposite signs: compare a^2 with 2 b^2
  Rat a2 = a * a, b2 = b * b * 2;
  if (a2 == b2) return 0;  // would force sqrt(2) rational unless both zero; a=+-sqrt2 b
  bool a_dominates = a2 > b2;
  return (a_dominates ? (a > 0) : (b > 0)) ? 1 : -1;
}

bool MixedModel::strictly_positive(const MixedElement& e) const {
  auto [a, b] = as_poly_pair(e);
  if (!b.is_zero())
    throw std::invalid_argument(
        "strictly_positive: sqrt(2)-component elements are only checked pointwise");
  if (a.is_zero()) return false;
  // clear denominators: positivity is invariant under positive scaling
  Int lcm = 1;
  for (int i = 0; i <= a.degree(); ++i) {
    Rat c = a.coeff(static_cast<std::size_t>(i));
    lcm = lcm / gcd_int(lcm, den(c)) * den(c);
  }
  LaurentPoly scaled;
  for (int i = 0; i <= a.degree(); ++i) {
    Rat c = a.coeff(static_cast<std::size_t>(i)) * Rat(lcm);
    if (c != 0) scaled.set(i, num(c));
  }
  Interval iv = interval();
  return strictly_positive_on_interval(scaled, iv.lo, iv.hi);
}

ConeMissReport positive_cone_miss_check(const MixedModel& model, std::size_t samples,
                                        std::uint64_t seed) {
  ConeMissReport rep;
  Rng rng(seed);
  const Rat half(1, 2);
  for (std::size_t s = 0; s < samples; ++s) {
    Rat qr = 0, qs = 0;
    switch (model.kind()) {
      case MixedModelKind::Q:
        qr = rng.uniform_rat(-20, 20, 12);
        if (qr == 0) qr = 1;
        break;
      case MixedModelKind::Sqrt2Z:
        qs = Rat(rng.uniform_int(-20, 20));
        if (qs == 0) qs = 1;
        break;
      case MixedModelKind::QSqrt2:
        qr = rng.uniform_rat(-20, 20, 12);
        qs = rng.uniform_rat(-20, 20, 12);
        if (qr == 0 && qs == 0) qs = 1;
        break;
    }
    MixedElement e;
    e.q_rational = qr;
    e.q_sqrt2 = qs;
    if (!model.contains(e)) throw std::logic_error("cone miss check built a non-element");
    ++rep.samples;
    // q(1-2x) vanishes at 1/2, exactly: never strictly positive
    auto [va, vb] = model.value_at(e, half);
    if (MixedModel::sign_with_sqrt2(va, vb) != 0) rep.all_missed = false;
  }
  MixedElement one;
  one.integer_part = LaurentPoly::one();
  one.q_rational = 0;
  one.q_sqrt2 = 0;
  rep.unit_positive = model.strictly_positive(one);
  return rep;
}

bool divisibility_probe(const MixedModel& model, const Int& n) {
  if (n == 0) throw std::invalid_argument("divisibility_probe: n must be nonzero");
  switch (model.kind()) {
    case MixedModelKind::Q:
    case MixedModelKind::QSqrt2:
      return model.contains_scalar(Rat(1, n), 0);
    case MixedModelKind::Sqrt2Z:
      return model.contains_scalar(0, Rat(1, n));
  }
  return false;
}

namespace {

/// The pair {(1-2x), sqrt(2)(1-2x)} as symbolic vectors over the coefficient
/// axes {1, x} with sqrt(2) as a declared symbol. Only formal-zero minors are
/// relied on, which is sound for any value of the symbol.
bool sqrt2_line_pair_is_discrete() {
  auto basis = SymbolBasis::transcendental({1.4142135623730951});
  LinForm a0, a1, b0, b1;
  a0.c = {Rat(1), Rat(0)};
  a1.c = {Rat(-2), Rat(0)};
  b0.c = {Rat(0), Rat(1)};
  b1.c = {Rat(0), Rat(-2)};
  SymbolicVector v1(basis, {a0, a1});
  SymbolicVector v2(basis, {b0, b1});
  return is_discrete({v1, v2});
}

}  // namespace

ConditionProfile condition_profile(const MixedModel& model) {
  ConditionProfile p;
  bool divisible = true;
  for (Int n = 2; n <= 50; ++n) divisible = divisible && divisibility_probe(model, n);

  switch (model.kind()) {
    case MixedModelKind::Q:
      p.cond_a = false;  // divisible subgroup (1-2x)Q: not free
      p.evidence_a = "(1-2x)/n is an element for every n: a divisible subgroup, so not free";
      if (!divisible) p.evidence_a = "divisibility probe unexpectedly failed";
      // finitely generated subgroups have bounded denominator: their
      // coefficient vectors are rational, so rank equals span dimension
      p.cond_b = true;
      p.evidence_b =
          "any finite generating set lies in Z[x]-span + (1/N)(1-2x)Z: a rational "
          "coefficient lattice, exactly discrete";
      break;
    case MixedModelKind::Sqrt2Z:
      p.cond_a = true;
      p.evidence_a = "scalar module sqrt(2)Z is cyclic: the group is free abelian";
      p.cond_b = sqrt2_line_pair_is_discrete();
      p.evidence_b =
          "{(1-2x), sqrt(2)(1-2x)} has rank 2 inside a line: dense, not discrete";
      if (p.cond_b) p.evidence_b = "witness pair unexpectedly discrete";
      break;
    case MixedModelKind::QSqrt2:
      p.cond_a = false;
      p.evidence_a = "(1-2x)/n is an element for every n: a divisible subgroup, so not free";
      p.cond_b = sqrt2_line_pair_is_discrete();
      p.evidence_b =
          "{(1-2x), sqrt(2)(1-2x)} has rank 2 inside a line: dense, not discrete";
      if (p.cond_b) p.evidence_b = "witness pair unexpectedly discrete";
      break;
  }
  return p;
}

}  // namespace dgt

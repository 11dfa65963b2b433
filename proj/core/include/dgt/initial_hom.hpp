#pragma once

#include <map>

#include "dgt/chain.hpp"
#include "dgt/limit_element.hpp"

namespace dgt {

/// Stage data (a_n, b_n) for the binomial limits p_n = a_n + b_n x with
/// 1 < a_n, b_n and gcd(a_n, b_n) = 1. The recurrence bound tracks the exact
/// prefix value of d = prod |a_i - b_i| / (a_i + b_i).
class BinomialSequence {
 public:
  struct Pair {
    Int a, b;
  };

  explicit BinomialSequence(std::vector<Pair> pairs);

  std::size_t size() const { return pairs_.size(); }
  const Pair& pair(std::size_t n) const;  // 1-indexed

  /// prod_{i<=n} |a_i - b_i| / (a_i + b_i); n = size() gives the prefix d.
  Rat prefix_d(std::size_t n) const;

  /// 1 / prod_{i<=n} (a_i + b_i).
  Rat stage_constant(std::size_t n) const;

  LaurentPoly poly(std::size_t n) const;  // p_n = a_n + b_n x

  /// The pairs as a finite PolySequence (for limit-element interop).
  PolySequencePtr as_poly_sequence() const;

 private:
  std::vector<Pair> pairs_;
};

/// Stage-indexed table u[n][j] (0 <= j <= n <= stages) of target order units
/// realizing the initial-object homomorphism: row n-1 satisfies
/// u[n-1][i] = a_n u[n][i] + b_n u[n][i+1] exactly, and every entry obeys the
/// stage norm bound ||u[n][j] - 1/prod(a_t+b_t)|| < d / prod|a_t - b_t|.
template <DenseTarget G>
struct HomomorphismData {
  BinomialSequence seq;
  G target;
  typename G::Element base_unit;
  std::vector<std::vector<typename G::Element>> rows;
  PolySequencePtr domain;

  std::size_t stages() const { return rows.size() - 1; }
};

template <DenseTarget G>
HomomorphismData<G> build_initial_hom(const BinomialSequence& seq, const G& g,
                                      const typename G::Element& u, std::size_t stages,
                                      const Rat& d_threshold = Rat(0)) {
  if (stages > seq.size())
    throw std::invalid_argument("build_initial_hom: more stages than pairs");
  if (!g.is_order_unit(u))
    throw std::invalid_argument("build_initial_hom: u is not an order unit");
  if (!g.equal(u, g.unit()))
    throw std::invalid_argument(
        "build_initial_hom: norms are taken at the canonical unit; pass G's unit");
  const Rat d = seq.prefix_d(stages);
  if (!(d > d_threshold))
    throw std::invalid_argument("build_initial_hom: prefix d-value below threshold");

  HomomorphismData<G> h{seq, g, u, {}, seq.as_poly_sequence()};
  h.rows.push_back({u});

  Rat abs_prod = 1;  // prod |a_t - b_t| over t <= n
  for (std::size_t n = 1; n <= stages; ++n) {
    const auto& [an, bn] = seq.pair(n);
    const Rat c_prev = seq.stage_constant(n - 1);
    const Rat c_next = seq.stage_constant(n);
    const Rat delta_prev = d / abs_prod;
    abs_prod *= Rat(abs_int(an - bn));
    const Rat delta_next = d / abs_prod;

    // the recurrence u[n-1][i] = a_n u[n][i] + b_n u[n][i+1] is the band
    // system with a_n on the diagonal; normal form needs diag > super
    const bool reversed = an < bn;
    const Int diag = reversed ? bn : an;   // chain "b"
    const Int super = reversed ? an : bn;  // chain "a"

    std::vector<typename G::Element> inputs = h.rows[n - 1];
    if (reversed) std::reverse(inputs.begin(), inputs.end());

    for (const auto& e : inputs)
      if (!(g.q0_norm(g.to_q0(e) - c_prev * g.to_q0(g.unit())) < delta_prev))
        throw std::logic_error("build_initial_hom: stage input escaped its window");

    std::vector<typename G::Q0> inputs_q0;
    for (const auto& e : inputs) inputs_q0.push_back(g.to_q0(e));
    auto bounded = solve_chain_bounded(super, diag, inputs_q0, g.to_q0(g.unit()), c_prev,
                                       delta_prev, [&](const typename G::Q0& x) {
                                         return g.q0_norm(x);
                                       });

    Rat worst = 0;
    for (const auto& xi : bounded.x)
      worst = std::max(worst, g.q0_norm(xi - c_next * g.to_q0(g.unit())));
    Rat margin = delta_next - worst;
    if (!(margin > 0))
      throw std::logic_error("build_initial_hom: no margin left for integerization");

    auto v = integerize_chain(g, super, diag, inputs, bounded.x, margin / 2);
    if (reversed) std::reverse(v.begin(), v.end());

    // exact verification of the recurrence, the units, and the stage bound
    for (std::size_t i = 0; i + 1 <= n; ++i) {
      auto lhs = g.add(g.scale(an, v[i]), g.scale(bn, v[i + 1]));
      if (!g.equal(lhs, h.rows[n - 1][i]))
        throw std::logic_error("build_initial_hom: recurrence failed to verify");
    }
    for (const auto& e : v) {
      if (!g.is_order_unit(e))
        throw std::logic_error("build_initial_hom: table entry is not an order unit");
      if (!(g.q0_norm(g.to_q0(e) - c_next * g.to_q0(g.unit())) < delta_next))
        throw std::logic_error("build_initial_hom: stage norm bound failed to verify");
    }
    h.rows.push_back(std::move(v));
  }
  return h;
}

/// Image of [f, n]: sum_j (f, x^j) u[n][j], exact; well-defined on the limit
/// because the recurrences hold exactly.
template <DenseTarget G>
typename G::Element hom_apply(const HomomorphismData<G>& h, const LimitElement& e) {
  if (!(*e.sequence() == *h.domain))
    throw std::invalid_argument("hom_apply: element comes from a different sequence");
  if (e.stage() >= h.rows.size())
    throw std::invalid_argument("hom_apply: element stage exceeds the table depth");
  const auto& row = h.rows[e.stage()];
  typename G::Element acc = h.target.zero();
  for (const auto& [k, c] : e.numerator().terms()) {
    if (k < 0 || static_cast<std::size_t>(k) >= row.size())
      throw std::logic_error("hom_apply: numerator support escapes the table row");
    acc = h.target.add(acc, h.target.scale(c, row[static_cast<std::size_t>(k)]));
  }
  return acc;
}

struct NormBoundReport {
  std::size_t samples = 0;
  std::size_t tight = 0;  // samples where the bound held with equality
  bool passed = true;
};

/// Checks ||phi(g)|| <= ||g|| * ||phi(1)|| on sampled positive elements. The
/// norm of a positive [f, n] is bounded above exactly by max_j f_j / (Q_n)_j
/// (a coefficientwise comparison), which is what the check uses; multiples of
/// the unit make the bound tight.
template <DenseTarget G>
NormBoundReport phi_norm_bound_check(const HomomorphismData<G>& h, std::size_t samples,
                                     std::uint64_t seed = 7) {
  NormBoundReport rep;
  Rng rng(seed);
  const auto& g = h.target;
  Rat unit_norm = g.norm(hom_apply(h, unit_element(h.domain)));
  std::size_t max_stage = h.rows.size() - 1;
  for (std::size_t s = 0; s < samples; ++s) {
    std::size_t n = static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(max_stage)));
    const LaurentPoly& q = h.domain->q_product(n);
    LaurentPoly f;
    for (const auto& [k, qc] : q.terms()) {
      Int c = rng.uniform_int(0, 4);
      if (c != 0) f.set(k, c);
    }
    if (f.is_zero()) f = LaurentPoly::one();
    LimitElement e = make_element(h.domain, f, n);

    // exact upper bound for ||e||: the smallest C with f <= C Q_n
    Rat c_bound = 0;
    for (const auto& [k, fc] : e.numerator().terms()) {
      const LaurentPoly& qn = h.domain->q_product(e.stage());
      c_bound = std::max(c_bound, Rat(fc, qn.coeff(k)));
    }
    Rat lhs = g.norm(hom_apply(h, e));
    Rat rhs = c_bound * unit_norm;
    ++rep.samples;
    if (lhs == rhs) ++rep.tight;
    if (lhs > rhs) rep.passed = false;
  }
  // tightness witness: multiples of the unit
  for (Int m = 1; m <= 3; ++m) {
    LimitElement e = unit_element(h.domain) * m;
    ++rep.samples;
    Rat lhs = g.norm(hom_apply(h, e));
    if (lhs != Rat(m) * unit_norm) rep.passed = false;
    if (lhs == Rat(m) * unit_norm) ++rep.tight;
  }
  return rep;
}

/// Non-interactive disjointness: for all n < depth and j != k in Log Q_n,
/// (j + Log p_{n+1}) and (k + Log p_{n+1}) do not meet.
struct NonInteractiveVerdict {
  bool holds = true;
  std::size_t fail_level = 0;  // n of the first violation
  LaurentPoly::Exp fail_j = 0, fail_k = 0, collision = 0;
};

NonInteractiveVerdict noninteractive_check(const PolySequence& seq, std::size_t depth);

/// Dense-range criterion for non-interactive limits: true iff infinitely many
/// entries have no coefficient equal to 1 (exact on periodic tails; finite
/// data evaluated entrywise and flagged).
struct DenseRangeVerdict {
  bool dense = false;
  bool prefix_relative = false;
  std::vector<std::size_t> evidence;  // entries with no unit coefficient
};

DenseRangeVerdict dense_range_verdict_noninteractive(const PolySequence& seq);

/// Per-vertex table for the non-interactive construction: level n maps
/// exponents s in Log Q_n to order units, with the exact identities
/// u[n][s] = sum_t (p_{n+1}, x^t) u[n+1][s+t].
template <DenseTarget G>
struct VertexHomData {
  G target;
  std::vector<std::map<LaurentPoly::Exp, typename G::Element>> levels;
  PolySequencePtr domain;
};

template <DenseTarget G>
VertexHomData<G> build_initial_hom_noninteractive(PolySequencePtr seq, const G& g,
                                                  const typename G::Element& u,
                                                  std::size_t depth) {
  auto verdict = noninteractive_check(*seq, depth);
  if (!verdict.holds)
    throw std::invalid_argument("non-interactive check fails at level " +
                                std::to_string(verdict.fail_level));
  if (!g.is_order_unit(u))
    throw std::invalid_argument("build_initial_hom_noninteractive: u is not an order unit");

  VertexHomData<G> h{g, {}, seq};
  h.levels.push_back({{0, u}});
  for (std::size_t n = 0; n < depth; ++n) {
    const LaurentPoly& p = seq->entry(n + 1);
    if (content(p) != 1)
      throw std::invalid_argument(
          "build_initial_hom_noninteractive: stage content must be 1");
    std::vector<Int> coeffs;
    std::vector<LaurentPoly::Exp> exps;
    for (const auto& [t, c] : p.terms()) {
      exps.push_back(t);
      coeffs.push_back(c);
    }
    std::map<LaurentPoly::Exp, typename G::Element> next;
    for (const auto& [s, unit_s] : h.levels[n]) {
      auto parts = decompose_gcd(g, unit_s, coeffs);
      for (std::size_t i = 0; i < exps.size(); ++i) {
        auto [it, inserted] = next.emplace(s + exps[i], parts[i]);
        if (!inserted)
          throw std::logic_error("non-interactive table collision despite the check");
      }
    }
    h.levels.push_back(std::move(next));
  }

  // exact identity verification level by level
  for (std::size_t n = 0; n < depth; ++n) {
    const LaurentPoly& p = seq->entry(n + 1);
    for (const auto& [s, unit_s] : h.levels[n]) {
      typename G::Element acc = g.zero();
      for (const auto& [t, c] : p.terms())
        acc = g.add(acc, g.scale(c, h.levels[n + 1].at(s + t)));
      if (!g.equal(acc, unit_s))
        throw std::logic_error("non-interactive identities failed to verify");
    }
  }
  return h;
}

}  // namespace dgt

#pragma once

#include <vector>

#include "dgt/unit_ops.hpp"

namespace dgt {

/// The N x (N+1) band system with b on the diagonal and a above it:
/// row i reads  b x_i + a x_{i+1} = u_i  (rows 0..N-1, unknowns 0..N).

/// All solutions with a fixed head x_0, by forward substitution (exact in a
/// rational module T with +, -, and Rat scaling).
template <class T>
std::vector<T> solve_chain_rational(const Int& a, const Int& b, const std::vector<T>& u,
                                    const T& x0) {
  if (a < 1 || b < 1) throw std::invalid_argument("solve_chain_rational: need a, b >= 1");
  std::vector<T> x;
  x.push_back(x0);
  for (std::size_t i = 0; i < u.size(); ++i)
    x.push_back(Rat(1, a) * (u[i] - Rat(b) * x[i]));
  return x;
}

/// Nullspace generator w = (1, -b/a, (b/a)^2, ...): all solutions of the
/// homogeneous system are rational multiples of w.
std::vector<Rat> chain_nullspace(const Int& a, const Int& b, std::size_t n);

/// Verifies b x_i + a x_{i+1} == u_i for every row, exactly.
template <class T>
bool chain_satisfied(const Int& a, const Int& b, const std::vector<T>& x,
                     const std::vector<T>& u) {
  if (x.size() != u.size() + 1) return false;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (!(Rat(b) * x[i] + Rat(a) * x[i + 1] == u[i])) return false;
  return true;
}

template <class T>
struct BoundedChainSolution {
  std::vector<T> x;
  Rat window;                        // delta / (b - a)
  bool positivity_guaranteed = false;  // delta < c (b-a)/(a+b)
};

/// Given 1 < a < b and inputs with ||u_i - c|| < delta, produces an exact
/// solution whose entries all satisfy ||x_i - c/(a+b)|| < delta/(b-a).
/// Built by back substitution from the fixed point x_N = c/(a+b) * one; the
/// bound is verified post hoc, independent of the construction route.
template <class T, class NormFn>
BoundedChainSolution<T> solve_chain_bounded(const Int& a, const Int& b, const std::vector<T>& u,
                                            const T& one, const Rat& c, const Rat& delta,
                                            NormFn&& norm_of) {
  if (!(1 < a && a < b))
    throw std::invalid_argument("solve_chain_bounded: need 1 < a < b");
  if (!(c > 0 && delta > 0))
    throw std::invalid_argument("solve_chain_bounded: need c, delta > 0");
  const std::size_t n = u.size();
  const Rat target = c / Rat(a + b);

  std::vector<T> x(n + 1, Rat(0) * one);
  x[n] = target * one;
  for (std::size_t i = n; i-- > 0;) x[i] = Rat(1, b) * (u[i] - Rat(a) * x[i + 1]);

  if (!chain_satisfied(a, b, x, u))
    throw std::logic_error("solve_chain_bounded: system failed to verify");
  BoundedChainSolution<T> out;
  out.window = delta / Rat(b - a);
  for (const auto& xi : x)
    if (!(norm_of(xi - target * one) < out.window))
      throw std::logic_error("solve_chain_bounded: norm window failed to verify");
  out.x = std::move(x);
  out.positivity_guaranteed = delta < c * Rat(b - a) / Rat(a + b);
  return out;
}

/// Lemma 8.4: given a rational solution X of the band system with order-unit
/// data U in G, produces a solution V inside G with each ||v_i - x_i|| < eps.
/// Uses the congruence lift h = sum a^i h_i with small_coset_rep at each
/// level; gcd(a, b) = 1 makes every congruence solvable. Retries with
/// geometrically tighter precision, then reports RetryExhausted.
template <DenseTarget G>
std::vector<typename G::Element> integerize_chain(const G& g, const Int& a, const Int& b,
                                                  const std::vector<typename G::Element>& u,
                                                  const std::vector<typename G::Q0>& x,
                                                  const Rat& eps) {
  if (gcd_int(a, b) != 1) throw std::invalid_argument("integerize_chain: gcd(a,b) must be 1");
  if (a < 1 || b < 1) throw std::invalid_argument("integerize_chain: need a, b >= 1");
  if (eps <= 0) throw std::invalid_argument("integerize_chain: eps must be positive");
  const std::size_t n = u.size();
  if (x.size() != n + 1) throw std::invalid_argument("integerize_chain: size mismatch");

  {  // the rational input must itself solve the system
    std::vector<typename G::Q0> uq;
    uq.reserve(n);
    for (const auto& ui : u) uq.push_back(g.to_q0(ui));
    if (!chain_satisfied(a, b, x, uq))
      throw std::invalid_argument("integerize_chain: X does not solve AX = U");
  }

  // shortcut: X may already lie in G
  {
    std::vector<typename G::Element> direct;
    bool ok = true;
    for (const auto& xi : x) {
      auto e = g.from_q0(xi);
      if (!e) {
        ok = false;
        break;
      }
      direct.push_back(*e);
    }
    if (ok) return direct;
  }

  // t_{i-1} = (-b)^{i-1} u_0 + (-b)^{i-2} a u_1 + ... + a^{i-1} u_{i-1} in G,
  // via t_k = a^k u_k - b t_{k-1}
  std::vector<typename G::Element> t(n);
  if (n > 0) t[0] = u[0];
  for (std::size_t k = 1; k < n; ++k)
    t[k] = g.sub(g.scale(pow_int(a, k), u[k]), g.scale(b, t[k - 1]));

  // error in coordinate i scales by (b/a)^i relative to coordinate 0
  Rat growth = pow_rat(Rat(b, a), static_cast<long long>(n));
  if (growth < 1) growth = 1;
  Rat tol = eps / growth / 2;

  for (int attempt = 0; attempt < 6; ++attempt) {
    typename G::Element cur = g.approximate_q0(x[0], tol / 2);

    // lift the congruences (-b)^i v0 + t_{i-1} == 0 (mod a^i), i = 1..n
    bool lift_ok = true;
    for (std::size_t i = 1; i <= n && lift_ok; ++i) {
      Int ai = pow_int(a, i);
      Int bi = pow_int(b, i);
      if (i % 2 == 1) bi = -bi;  // (-b)^i
      typename G::Element w = g.add(g.scale(bi, cur), t[i - 1]);
      auto level = g.divide_exact(w, pow_int(a, i - 1));
      if (!level) {
        lift_ok = false;
        break;
      }
      if (g.divide_exact(*level, a)) continue;  // congruence already holds
      // solve (-b)^i delta == level (mod aG) with a small representative;
      // adjusting cur by a^{i-1} delta preserves all earlier levels
      Int binv = mod_inverse(((bi % a) + a) % a, a);
      typename G::Element delta0 = g.scale(binv, *level);
      Rat tiny = tol / (Rat(4) * Rat(static_cast<long long>(n)) * Rat(pow_int(a, i - 1)));
      typename G::Element delta = g.small_coset_rep(delta0, a, tiny);
      cur = g.sub(cur, g.scale(pow_int(a, i - 1), delta));
      typename G::Element w2 = g.add(g.scale(bi, cur), t[i - 1]);
      if (!g.divide_exact(w2, ai)) {
        lift_ok = false;
        break;
      }
    }

    if (lift_ok) {
      std::vector<typename G::Element> v(n + 1);
      v[0] = cur;
      bool build_ok = true;
      for (std::size_t i = 1; i <= n; ++i) {
        Int bi = pow_int(b, i);
        if (i % 2 == 1) bi = -bi;
        auto vi = g.divide_exact(g.add(g.scale(bi, cur), t[i - 1]), pow_int(a, i));
        if (!vi) {
          build_ok = false;
          break;
        }
        v[i] = *vi;
      }
      if (build_ok) {
        bool rows_ok = true;
        for (std::size_t i = 0; i < n; ++i)
          rows_ok = rows_ok &&
                    g.equal(g.add(g.scale(b, v[i]), g.scale(a, v[i + 1])), u[i]);
        bool close = true;
        for (std::size_t i = 0; i <= n; ++i)
          close = close && (g.q0_norm(g.to_q0(v[i]) - x[i]) < eps);
        if (rows_ok && close) return v;
      }
    }
    tol = tol / 8;
  }
  throw RetryExhausted("integerize_chain: precision retries exhausted");
}

}  // namespace dgt

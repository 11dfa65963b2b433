#include "dgt/function_basis.hpp"

#include <algorithm>
#include <cmath>

#include "dgt/symbolic.hpp"

namespace dgt {

bool Interval::contains_integer() const {
  // smallest integer >= lo
  Int z = num(lo) / den(lo);
  while (Rat(z) < lo) ++z;
  return Rat(z) <= hi;
}

Rat sup_bound(const RatPoly& p, const Interval& iv) {
  Rat m = std::max(abs_rat(iv.lo), abs_rat(iv.hi));
  Rat acc = 0, mp = 1;
  for (const auto& c : p.coeffs()) {
    acc += abs_rat(c) * mp;
    mp *= m;
  }
  return acc;
}

Rat lipschitz_bound(const RatPoly& p, const Interval& iv) {
  return sup_bound(p.derivative(), iv);
}

namespace {

std::vector<Rat> t_grid(const Interval& iv, unsigned samples) {
  std::vector<Rat> ts;
  if (samples < 2) samples = 2;
  for (unsigned j = 0; j < samples; ++j)
    ts.push_back(iv.lo + (iv.hi - iv.lo) * Rat(j, samples - 1));
  return ts;
}

/// Compositions of d into n nonnegative parts.
void compositions(unsigned d, unsigned n, std::vector<unsigned>& cur,
                  std::vector<std::vector<unsigned>>& out) {
  if (n == 1) {
    cur.push_back(d);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (unsigned k = 0; k <= d; ++k) {
    cur.push_back(k);
    compositions(d - k, n - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::optional<Rat> lemma42_constant(const std::vector<RatPoly>& fs, const Interval& iv,
                                    unsigned sphere_denom, unsigned t_samples) {
  if (fs.empty()) throw std::invalid_argument("lemma42_constant: empty family");
  {
    std::vector<std::vector<Rat>> rows;
    for (const auto& f : fs) {
      std::vector<Rat> row;
      for (int i = 0; i <= std::max(0, f.degree()); ++i) row.push_back(f.coeff(i));
      rows.push_back(std::move(row));
    }
    std::size_t width = 0;
    for (auto& r : rows) width = std::max(width, r.size());
    for (auto& r : rows) r.resize(width, Rat(0));
    if (rational_rank(rows) != fs.size())
      throw std::invalid_argument("lemma42_constant: dependent family");
  }

  const std::size_t n = fs.size();
  Rat big_c = 0;
  for (const auto& f : fs) big_c = std::max(big_c, sup_bound(f, iv));

  auto ts = t_grid(iv, t_samples);
  std::vector<std::vector<unsigned>> comps;
  std::vector<unsigned> cur;
  compositions(sphere_denom, static_cast<unsigned>(n), cur, comps);

  Rat min_lower;
  bool first = true;
  std::vector<int> signs(n, 1);
  while (true) {
    for (const auto& comp : comps) {
      // lambda_i = signs[i] * comp[i] / sphere_denom; skip duplicate signs on zeros
      bool skip = false;
      for (std::size_t i = 0; i < n; ++i)
        if (comp[i] == 0 && signs[i] < 0) skip = true;
      if (!skip) {
        Rat lower = 0;
        for (const auto& t : ts) {
          Rat v = 0;
          for (std::size_t i = 0; i < n; ++i)
            v += Rat(signs[i] * static_cast<long long>(comp[i]), sphere_denom) *
                 fs[i].eval(t);
          lower = std::max(lower, abs_rat(v));
        }
        if (first || lower < min_lower) {
          min_lower = lower;
          first = false;
        }
      }
    }
    // next sign pattern
    std::size_t k = 0;
    while (k < n && signs[k] == -1) {
      signs[k] = 1;
      ++k;
    }
    if (k == n) break;
    signs[k] = -1;
  }

  // l1 covering radius of the sphere grid: rounding coordinates to multiples
  // of 1/D and redistributing the deficit moves lambda by at most 2n/D; a
  // single coordinate is hit exactly
  Rat cover = n == 1 ? Rat(0) : Rat(2 * static_cast<long long>(n), sphere_denom);
  Rat k_cert = min_lower - big_c * cover;
  if (k_cert <= 0) return std::nullopt;
  return k_cert;
}

std::vector<RatPoly> monomial_generators(std::size_t degree) {
  std::vector<RatPoly> gens;
  for (std::size_t i = 0; i <= degree; ++i) {
    std::vector<Rat> c(i + 1, Rat(0));
    c[i] = 1;
    gens.emplace_back(std::move(c));
  }
  return gens;
}

namespace {

RatPoly combine(const std::vector<RatPoly>& gens, const std::vector<Int>& coeffs) {
  RatPoly acc;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (coeffs[i] != 0) acc = acc + gens[i] * Rat(coeffs[i]);
  return acc;
}

Rat certified_error(const RatPoly& p, const RatPoly& target, const Interval& iv,
                    const std::vector<Rat>& ts) {
  RatPoly diff = p - target;
  RatPoly d1 = diff.derivative();
  Rat grid_max = 0, grid_d1 = 0;
  for (const auto& t : ts) {
    grid_max = std::max(grid_max, abs_rat(diff.eval(t)));
    grid_d1 = std::max(grid_d1, abs_rat(d1.eval(t)));
  }
  Rat h = (iv.hi - iv.lo) / Rat(static_cast<long long>(ts.size() - 1));
  // two-level slack: bound sup|d1| by its own grid plus a crude second
  // derivative term, then bound sup|diff| the same way
  Rat lip1 = grid_d1 + sup_bound(d1.derivative(), iv) * h / 2;
  return grid_max + lip1 * h / 2;
}

}  // namespace

namespace {

/// Is gens exactly the monomial family {1, x, ..., x^d}?
bool gens_are_monomials(const std::vector<RatPoly>& gens) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].degree() != static_cast<int>(i)) return false;
    for (std::size_t j = 0; j <= i; ++j)
      if (gens[i].coeff(j) != (j == i ? Rat(1) : Rat(0))) return false;
  }
  return true;
}

/// Integer-coefficient approximants of a rational constant on I inside (0,1),
/// from the exact identity 1/2 = 2u (1 + s + ... + s^{k-1}) + s^k / 2 with
/// u = x(1-x) and s = (1-2x)^2, |s| < 1 on I. The fractional part is routed
/// through a dyadic m/2^j and the half-polynomial is powered j times.
std::optional<RatPoly> integer_constant_approximant(const Rat& c, const Interval& iv,
                                                    const Rat& eps, int degree_cap) {
  if (!(iv.lo > 0 && iv.hi < 1)) return std::nullopt;
  Int floor_c = num(c) / den(c);
  if (Rat(floor_c) > c) --floor_c;
  Rat frac = c - Rat(floor_c);
  RatPoly base = RatPoly::constant(Rat(floor_c));
  if (frac == 0) return base;

  Rat dy = base_point_in(frac - eps / 2, frac + eps / 2, 2);
  Int m = num(dy);
  Int twopow = den(dy);
  long long j = 0;
  for (Int t = twopow; t > 1; t /= 2) ++j;
  if (j == 0) return base + RatPoly::constant(Rat(m));  // frac approximated by an integer

  const RatPoly u({Rat(0), Rat(1), Rat(-1)});  // x - x^2
  const RatPoly s({Rat(1), Rat(-4), Rat(4)});  // (1 - 2x)^2
  // s is a parabola with vertex at 1/2: its sup on I sits at an endpoint
  Rat s_max = std::max(s.eval(iv.lo), s.eval(iv.hi));
  for (int k = 1; 2 * k * j <= degree_cap; ++k) {
    // 0 <= 1/2 - half = s^k / 2 <= s_max^k / 2 exactly on I
    Rat half_err = pow_rat(s_max, k) / 2;
    // |(1/2)^j - half^j| <= half_err * j * (1/2)^{j-1}
    Rat power_err = half_err * Rat(j) * pow_rat(Rat(1, 2), j - 1);
    Rat total = abs_rat(frac - dy) + abs_rat(Rat(m)) * power_err;
    if (total > eps) continue;
    RatPoly geom = RatPoly::constant(Rat(1));
    RatPoly spow = s;
    for (int i = 1; i < k; ++i) {
      geom = geom + spow;
      spow = spow * s;
    }
    RatPoly half = (u * Rat(2)) * geom;
    RatPoly hj = RatPoly::constant(Rat(1));
    for (long long i = 0; i < j; ++i) hj = hj * half;
    return base + hj * Rat(m);
  }
  return std::nullopt;
}

}  // namespace

std::optional<ApproximationResult> approximate_in_span(
    const RatPoly& target, const std::vector<RatPoly>& gens, const Interval& iv,
    const Rat& eps, const Int& height_cap, ApproximationFailure* failure) {
  if (iv.contains_integer())
    throw std::invalid_argument("approximate_in_span: interval contains an integer");
  if (gens.empty()) throw std::invalid_argument("approximate_in_span: no generators");

  const auto ts = t_grid(iv, 65);

  // real least squares on a coarse grid (doubles), then round
  const auto fit_ts = t_grid(iv, 33);
  const std::size_t n = gens.size();
  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  std::vector<double> rhs(n, 0.0);
  for (const auto& t : fit_ts) {
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = to_double(gens[i].eval(t));
    double tv = to_double(target.eval(t));
    for (std::size_t i = 0; i < n; ++i) {
      rhs[i] += g[i] * tv;
      for (std::size_t j = 0; j < n; ++j) a[i][j] += g[i] * g[j];
    }
  }
  // ridge for numerical safety, then Gaussian elimination
  for (std::size_t i = 0; i < n; ++i) a[i][i] += 1e-9;
  std::vector<double> x(n, 0.0);
  {
    auto m = a;
    auto b = rhs;
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      for (std::size_t r = col + 1; r < n; ++r)
        if (std::fabs(m[r][col]) > std::fabs(m[piv][col])) piv = r;
      std::swap(m[piv], m[col]);
      std::swap(b[piv], b[col]);
      if (std::fabs(m[col][col]) < 1e-14) continue;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == col) continue;
        double f = m[r][col] / m[col][col];
        for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        b[r] -= f * b[col];
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      x[i] = std::fabs(m[i][i]) < 1e-14 ? 0.0 : b[i] / m[i][i];
  }

  std::vector<Int> coeffs(n, 0);
  double cap = to_double(Rat(height_cap));
  for (std::size_t i = 0; i < n; ++i) {
    double v = std::clamp(std::round(x[i]), -cap, cap);
    coeffs[i] = Int(static_cast<long long>(v));
  }

  Rat best = certified_error(combine(gens, coeffs), target, iv, ts);
  // greedy coordinate repair with unit steps
  bool improved = true;
  int rounds = 0;
  while (improved && rounds < 400) {
    improved = false;
    ++rounds;
    for (std::size_t i = 0; i < n; ++i) {
      for (int delta : {1, -1, 2, -2}) {
        Int trial = coeffs[i] + delta;
        if (abs_int(trial) > height_cap) continue;
        std::vector<Int> cand = coeffs;
        cand[i] = trial;
        Rat err = certified_error(combine(gens, cand), target, iv, ts);
        if (err < best) {
          best = err;
          coeffs = std::move(cand);
          improved = true;
        }
      }
    }
  }

  if (best <= eps) {
    ApproximationResult res;
    res.coefficients = coeffs;
    res.combination = combine(gens, coeffs);
    res.certified_error = best;
    return res;
  }

  // constructive route for constant targets over the monomial family
  if (target.degree() <= 0 && gens_are_monomials(gens)) {
    auto cand = integer_constant_approximant(target.coeff(0), iv, eps, gens.back().degree());
    if (cand && cand->degree() < static_cast<int>(gens.size())) {
      bool ok = true;
      std::vector<Int> cs(gens.size(), 0);
      for (int i = 0; ok && i <= cand->degree(); ++i) {
        Rat c = cand->coeff(static_cast<std::size_t>(i));
        if (den(c) != 1 || abs_int(num(c)) > height_cap)
          ok = false;
        else
          cs[static_cast<std::size_t>(i)] = num(c);
      }
      if (ok) {
        Rat err = certified_error(*cand, target, iv, ts);
        if (err <= eps) return ApproximationResult{std::move(cs), *cand, err};
      }
    }
  }

  if (failure) {
    failure->height_cap = height_cap;
    failure->degree_cap = gens.size();
    failure->best_error = best;
  }
  return std::nullopt;
}

}  // namespace dgt

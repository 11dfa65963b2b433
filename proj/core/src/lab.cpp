#include "dgt/lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace dgt {

namespace {

struct HalfSum {
  std::vector<double> point;
  std::vector<long long> coeffs;
};

void enumerate_half(const std::vector<std::vector<double>>& vecs, std::size_t begin,
                    std::size_t end, long long bound, std::vector<HalfSum>& out) {
  std::size_t dim = vecs.empty() ? 0 : vecs[0].size();
  HalfSum cur;
  cur.point.assign(dim, 0.0);
  cur.coeffs.assign(end - begin, 0);
  out.clear();

  // iterative odometer over coefficients in [-bound, bound]
  std::vector<long long> c(end - begin, -bound);
  if (begin == end) {
    out.push_back(cur);
    return;
  }
  while (true) {
    HalfSum h;
    h.coeffs.assign(c.begin(), c.end());
    h.point.assign(dim, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t d = 0; d < dim; ++d) h.point[d] += double(c[i]) * vecs[begin + i][d];
    out.push_back(std::move(h));
    std::size_t k = 0;
    while (k < c.size() && c[k] == bound) {
      c[k] = -bound;
      ++k;
    }
    if (k == c.size()) break;
    ++c[k];
  }
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

std::vector<std::vector<double>> shadows_of(const std::vector<SymbolicVector>& gens) {
  std::vector<std::vector<double>> s;
  s.reserve(gens.size());
  for (const auto& g : gens) s.push_back(g.shadow());
  return s;
}

}  // namespace

std::optional<CombinationWitness> min_norm_witness(const std::vector<SymbolicVector>& gens,
                                                   long long bound, double threshold) {
  if (gens.empty()) return std::nullopt;
  auto vecs = shadows_of(gens);
  std::size_t n = vecs.size();
  std::size_t half = n / 2;

  std::vector<HalfSum> left, right;
  enumerate_half(vecs, 0, half, bound, left);
  enumerate_half(vecs, half, n, bound, right);

  std::sort(left.begin(), left.end(),
            [](const HalfSum& a, const HalfSum& b) { return a.point[0] < b.point[0]; });

  std::optional<CombinationWitness> best;
  for (const auto& r : right) {
    double lo = -r.point[0] - threshold, hi = -r.point[0] + threshold;
    auto it = std::lower_bound(left.begin(), left.end(), lo,
                               [](const HalfSum& h, double v) { return h.point[0] < v; });
    for (; it != left.end() && it->point[0] <= hi; ++it) {
      std::vector<double> sum(vecs[0].size());
      for (std::size_t d = 0; d < sum.size(); ++d) sum[d] = it->point[d] + r.point[d];
      double nrm = max_abs(sum);
      if (nrm >= threshold) continue;
      bool zero = true;
      for (long long c : it->coeffs) zero &= (c == 0);
      for (long long c : r.coeffs) zero &= (c == 0);
      if (zero) continue;
      if (!best || nrm < best->norm) {
        CombinationWitness w;
        w.coefficients = it->coeffs;
        w.coefficients.insert(w.coefficients.end(), r.coeffs.begin(), r.coeffs.end());
        w.norm = nrm;
        best = std::move(w);
      }
    }
  }
  return best;
}

DensityResult density_check(const std::vector<SymbolicVector>& gens,
                            const std::vector<std::pair<Rat, Rat>>& box, const Rat& eps,
                            long long word_bound) {
  DensityResult res;
  if (gens.empty()) return res;
  auto vecs = shadows_of(gens);
  std::size_t dim = vecs[0].size();
  if (box.size() != dim) throw std::invalid_argument("density_check: box arity mismatch");
  const double e = to_double(eps);
  const double slack = 1e-9;  // the whole check is shadow arithmetic

  std::size_t n = vecs.size();
  std::size_t half = n / 2;
  std::vector<HalfSum> left, right;
  enumerate_half(vecs, 0, half, word_bound, left);
  enumerate_half(vecs, half, n, word_bound, right);
  std::sort(left.begin(), left.end(),
            [](const HalfSum& a, const HalfSum& b) { return a.point[0] < b.point[0]; });

  // materialize the pair sums that land near the box, once
  std::vector<std::vector<double>> cloud;
  {
    std::vector<std::pair<double, double>> window(dim);
    for (std::size_t d = 0; d < dim; ++d)
      window[d] = {to_double(box[d].first) - e - slack, to_double(box[d].second) + e + slack};
    for (const auto& r : right) {
      double wlo = window[0].first - r.point[0], whi = window[0].second - r.point[0];
      auto it = std::lower_bound(left.begin(), left.end(), wlo,
                                 [](const HalfSum& h, double v) { return h.point[0] < v; });
      for (; it != left.end() && it->point[0] <= whi; ++it) {
        std::vector<double> sum(dim);
        bool inside = true;
        for (std::size_t d = 0; d < dim; ++d) {
          sum[d] = it->point[d] + r.point[d];
          inside = inside && sum[d] >= window[d].first && sum[d] <= window[d].second;
        }
        if (inside) cloud.push_back(std::move(sum));
      }
    }
    std::sort(cloud.begin(), cloud.end());
  }

  // grid points at eps/2 spacing, inclusive of box corners
  std::vector<std::vector<double>> grid;
  {
    std::vector<std::vector<double>> axes(dim);
    for (std::size_t d = 0; d < dim; ++d) {
      double lo = to_double(box[d].first), hi = to_double(box[d].second);
      long long steps = static_cast<long long>(std::ceil((hi - lo) / (e / 2)));
      for (long long k = 0; k <= steps; ++k)
        axes[d].push_back(std::min(lo + double(k) * e / 2, hi));
    }
    std::vector<std::size_t> idx(dim, 0);
    while (true) {
      std::vector<double> pt(dim);
      for (std::size_t d = 0; d < dim; ++d) pt[d] = axes[d][idx[d]];
      grid.push_back(std::move(pt));
      std::size_t k = 0;
      while (k < dim && idx[k] + 1 == axes[k].size()) {
        idx[k] = 0;
        ++k;
      }
      if (k == dim) break;
      ++idx[k];
    }
  }

  res.dense = true;
  res.worst_distance = 0.0;
  for (const auto& pt : grid) {
    double best = std::numeric_limits<double>::infinity();
    auto it = std::lower_bound(cloud.begin(), cloud.end(),
                               std::vector<double>{pt[0] - e - slack});
    for (; it != cloud.end() && (*it)[0] <= pt[0] + e + slack; ++it) {
      double worst_axis = 0.0;
      for (std::size_t d = 0; d < dim; ++d)
        worst_axis = std::max(worst_axis, std::fabs((*it)[d] - pt[d]));
      best = std::min(best, worst_axis);
      if (best <= e + slack) break;
    }
    if (!(best <= e + slack)) {
      res.dense = false;
      res.worst_point = pt;
      res.worst_distance = best;
      return res;
    }
    res.worst_distance = std::max(res.worst_distance, best);
  }
  return res;
}

SplitReport verify_split(const std::vector<SymbolicVector>& h_gens,
                         const std::vector<SymbolicVector>& k_gens,
                         const std::vector<SymbolicVector>& f_gens) {
  SplitReport rep;
  std::vector<SymbolicVector> kf = k_gens;
  kf.insert(kf.end(), f_gens.begin(), f_gens.end());
  if (kf.empty() || h_gens.empty()) {
    rep.detail = "empty generator lists";
    return rep;
  }

  auto columns_of = [](const std::vector<SymbolicVector>& gs) {
    std::vector<std::vector<Rat>> cols;
    cols.reserve(gs.size());
    for (const auto& g : gs) cols.push_back(flatten_coordinates(g));
    return cols;
  };
  auto cols_kf = columns_of(kf);
  auto cols_h = columns_of(h_gens);

  rep.generates = true;
  for (const auto& h : cols_h)
    if (!integer_span_solve(cols_kf, h)) rep.generates = false;
  for (const auto& g : cols_kf)
    if (!integer_span_solve(cols_h, g)) rep.generates = false;

  rep.f_discrete = f_gens.empty() || is_discrete(f_gens);

  std::size_t rk = z_rank(k_gens), rf = z_rank(f_gens);
  rep.disjoint = z_rank(kf) == rk + rf;

  if (k_gens.empty()) {
    rep.k_dense_in_span = true;  // the zero group is dense in its zero span
  } else {
    // numeric: cover a small box of span coordinates by bounded combinations
    std::size_t d = real_span_dim(k_gens);
    if (d == 0) {
      rep.k_dense_in_span = true;
    } else {
      // orthonormalize shadows to get span coordinates
      auto vecs = shadows_of(k_gens);
      std::vector<std::vector<double>> basis;
      for (const auto& v : vecs) {
        std::vector<double> w = v;
        for (const auto& b : basis) {
          double dot = 0, nn = 0;
          for (std::size_t i = 0; i < w.size(); ++i) {
            dot += w[i] * b[i];
            nn += b[i] * b[i];
          }
          for (std::size_t i = 0; i < w.size(); ++i) w[i] -= dot / nn * b[i];
        }
        double norm = std::sqrt(
            std::inner_product(w.begin(), w.end(), w.begin(), 0.0));
        if (norm > 1e-9) {
          basis.push_back(w);
          if (basis.size() == d) break;
        }
      }
      std::vector<SymbolicVector> projected;
      auto sb = SymbolBasis::rational({});
      for (const auto& v : vecs) {
        std::vector<Rat> coords;
        for (const auto& b : basis) {
          double dot = 0, nn = 0;
          for (std::size_t i = 0; i < v.size(); ++i) {
            dot += v[i] * b[i];
            nn += b[i] * b[i];
          }
          // keep the numeric value as a rational literal for the shadow path
          coords.push_back(Rat(Int(std::llround(dot / std::sqrt(nn) * 1e9)), Int(1000000000)));
        }
        projected.push_back(SymbolicVector::from_rationals(sb, std::move(coords)));
      }
      std::vector<std::pair<Rat, Rat>> box(d, {Rat(0), Rat(1)});
      rep.k_dense_in_span =
          density_check(projected, box, Rat(1, 10), 12).dense;
    }
  }

  rep.valid = rep.generates && rep.f_discrete && rep.disjoint && rep.k_dense_in_span;
  if (!rep.generates) rep.detail = "K u F does not generate the same group as H";
  else if (!rep.f_discrete) rep.detail = "proposed F is not discrete";
  else if (!rep.disjoint) rep.detail = "K and F intersect nontrivially";
  else if (!rep.k_dense_in_span) rep.detail = "K does not look dense in its span (numeric)";
  return rep;
}

std::vector<SymbolicVector> build_example_2_4(std::size_t n, double alpha_shadow) {
  if (n < 1) throw std::invalid_argument("build_example_2_4: need n >= 1");
  std::vector<double> shadows;
  for (std::size_t i = 1; i < n; ++i)
    shadows.push_back(std::pow(alpha_shadow, static_cast<double>(i)));
  auto basis = SymbolBasis::transcendental(std::move(shadows));
  std::size_t arity = basis->symbol_count() + 1;
  std::vector<SymbolicVector> out;
  for (std::size_t i = 0; i < n; ++i) {
    LinForm first;  // alpha^i
    first.c.assign(arity, Rat(0));
    first.c[i] = 1;  // index 0 is the rational part = alpha^0
    LinForm second;  // 2^{-i}
    second.c.assign(arity, Rat(0));
    second.c[0] = Rat(1, pow_int(2, i));
    out.emplace_back(basis, std::vector<LinForm>{first, second});
  }
  return out;
}

std::vector<SymbolicVector> build_critical(std::size_t m,
                                           const std::vector<double>& theta_shadows) {
  if (m < 1) throw std::invalid_argument("build_critical: need m >= 1");
  if (theta_shadows.size() != m)
    throw std::invalid_argument("build_critical: need one shadow per coordinate");
  auto basis = SymbolBasis::transcendental(theta_shadows);
  std::size_t arity = m + 1;
  std::vector<SymbolicVector> out;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<LinForm> es(m);
    for (auto& e : es) e.c.assign(arity, Rat(0));
    es[i].c[0] = 1;
    out.emplace_back(basis, std::move(es));
  }
  std::vector<LinForm> theta(m);
  for (std::size_t i = 0; i < m; ++i) {
    theta[i].c.assign(arity, Rat(0));
    theta[i].c[i + 1] = 1;
  }
  out.emplace_back(basis, std::move(theta));
  return out;
}

AntiFdSampleReport antifd_m_check(const std::vector<SymbolicVector>& gens, std::size_t m,
                                  std::size_t sample_budget, std::uint64_t seed) {
  AntiFdSampleReport rep;
  if (gens.empty() || m == 0) return rep;
  Rng rng(seed);

  auto test_sample = [&](const std::vector<SymbolicVector>& sample) {
    ++rep.samples_run;
    if (!is_discrete(sample)) {
      rep.refuted = true;
      rep.witness = sample;
      return true;
    }
    return false;
  };

  // deterministic first candidate: the leading generators themselves
  {
    std::vector<SymbolicVector> first(gens.begin(),
                                      gens.begin() + std::min(m, gens.size()));
    if (test_sample(first)) return rep;
  }

  for (std::size_t s = 0; rep.samples_run < sample_budget; ++s) {
    std::size_t r = static_cast<std::size_t>(rng.uniform(1, static_cast<long long>(m)));
    std::vector<SymbolicVector> sample;
    for (std::size_t i = 0; i < r; ++i) {
      SymbolicVector v = gens[0] * Int(0);
      bool nonzero = false;
      for (const auto& g : gens) {
        Int c = rng.uniform_int(-3, 3);
        if (c != 0) nonzero = true;
        v = v + g * c;
      }
      if (!nonzero) v = v + gens[0];
      sample.push_back(std::move(v));
    }
    if (test_sample(sample)) return rep;
  }
  return rep;
}

}  // namespace dgt

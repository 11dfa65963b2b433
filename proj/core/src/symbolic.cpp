#include "dgt/symbolic.hpp"

#include <algorithm>

namespace dgt {

std::shared_ptr<const SymbolBasis> SymbolBasis::rational(std::vector<Rat> values) {
  auto b = std::shared_ptr<SymbolBasis>(new SymbolBasis(Mode::Rational, values.size()));
  b->values_ = std::move(values);
  b->shadows_.reserve(b->values_.size());
  for (const auto& v : b->values_) b->shadows_.push_back(to_double(v));
  return b;
}

std::shared_ptr<const SymbolBasis> SymbolBasis::transcendental(std::vector<double> shadows) {
  auto b = std::shared_ptr<SymbolBasis>(new SymbolBasis(Mode::Transcendental, shadows.size()));
  b->shadows_ = std::move(shadows);
  return b;
}

Rat SymbolBasis::rational_value(std::size_t i) const {
  if (mode_ != Mode::Rational)
    throw std::logic_error("SymbolBasis: rational_value in transcendental mode");
  if (i == 0) return Rat(1);
  return values_.at(i - 1);
}

double SymbolBasis::shadow(std::size_t i) const {
  if (i == 0) return 1.0;
  return shadows_.at(i - 1);
}

SymbolicVector::SymbolicVector(SymbolBasisPtr basis, std::vector<LinForm> entries)
    : basis_(std::move(basis)), entries_(std::move(entries)) {
  if (!basis_) throw std::invalid_argument("SymbolicVector: null basis");
  for (auto& e : entries_) {
    if (e.c.size() != basis_->symbol_count() + 1)
      throw std::invalid_argument("SymbolicVector: entry arity mismatch");
  }
  if (entries_.empty()) throw std::invalid_argument("SymbolicVector: zero dimension");
}

std::vector<double> SymbolicVector::shadow() const {
  std::vector<double> out(entries_.size(), 0.0);
  for (std::size_t a = 0; a < entries_.size(); ++a) {
    double acc = 0.0;
    for (std::size_t s = 0; s < entries_[a].c.size(); ++s)
      acc += to_double(entries_[a].c[s]) * basis_->shadow(s);
    out[a] = acc;
  }
  return out;
}

SymbolicVector SymbolicVector::operator+(const SymbolicVector& o) const {
  if (basis_ != o.basis_) throw std::invalid_argument("SymbolicVector: basis mismatch");
  if (dimension() != o.dimension())
    throw std::invalid_argument("SymbolicVector: dimension mismatch");
  std::vector<LinForm> es = entries_;
  for (std::size_t a = 0; a < es.size(); ++a)
    for (std::size_t s = 0; s < es[a].c.size(); ++s) es[a].c[s] += o.entries_[a].c[s];
  return SymbolicVector(basis_, std::move(es));
}

SymbolicVector SymbolicVector::operator*(const Int& k) const {
  std::vector<LinForm> es = entries_;
  for (auto& e : es)
    for (auto& c : e.c) c *= Rat(k);
  return SymbolicVector(basis_, std::move(es));
}

SymbolicVector SymbolicVector::from_rationals(SymbolBasisPtr basis, std::vector<Rat> values) {
  std::size_t arity = basis->symbol_count() + 1;
  std::vector<LinForm> es;
  es.reserve(values.size());
  for (auto& v : values) {
    LinForm f;
    f.c.assign(arity, Rat(0));
    f.c[0] = std::move(v);
    es.push_back(std::move(f));
  }
  return SymbolicVector(std::move(basis), std::move(es));
}

std::size_t rational_rank(std::vector<std::vector<Rat>> m) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      Rat factor = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

std::vector<Rat> flatten_coordinates(const SymbolicVector& v) {
  std::vector<Rat> out;
  if (v.basis()->mode() == SymbolBasis::Mode::Rational) {
    out.reserve(v.dimension());
    for (std::size_t a = 0; a < v.dimension(); ++a) {
      Rat acc = 0;
      for (std::size_t s = 0; s < v.entry(a).c.size(); ++s)
        acc += v.entry(a).c[s] * v.basis()->rational_value(s);
      out.push_back(acc);
    }
    return out;
  }
  for (std::size_t a = 0; a < v.dimension(); ++a)
    for (const auto& c : v.entry(a).c) out.push_back(c);
  return out;
}

namespace {

void require_common_basis(const std::vector<SymbolicVector>& gens) {
  for (std::size_t i = 1; i < gens.size(); ++i) {
    if (gens[i].basis() != gens[0].basis())
      throw std::invalid_argument("generators use different symbol bases");
    if (gens[i].dimension() != gens[0].dimension())
      throw std::invalid_argument("generators have different dimensions");
  }
}

/// Sparse multivariate polynomial in the symbols, exponent vector keyed.
using Mono = std::vector<unsigned>;
using MPoly = std::map<Mono, Rat>;

MPoly mp_from_linform(const LinForm& f, std::size_t nsym) {
  MPoly p;
  if (f.c[0] != 0) p[Mono(nsym, 0)] = f.c[0];
  for (std::size_t s = 1; s <= nsym; ++s) {
    if (f.c[s] != 0) {
      Mono m(nsym, 0);
      m[s - 1] = 1;
      p[m] = f.c[s];
    }
  }
  return p;
}

MPoly mp_mul(const MPoly& a, const MPoly& b) {
  MPoly r;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      Mono m = ma;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      auto [it, inserted] = r.emplace(std::move(m), ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second == 0) r.erase(it);
      }
    }
  }
  return r;
}

void mp_add_in(MPoly& a, const MPoly& b, bool negate) {
  for (const auto& [m, c] : b) {
    Rat v = negate ? Rat(-c) : c;
    auto [it, inserted] = a.emplace(m, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) a.erase(it);
    }
  }
}

/// Formal determinant of the square symbolic submatrix, by cofactor
/// expansion on the first row (desk-scale sizes).
MPoly symbolic_det(const std::vector<std::vector<MPoly>>& m, std::vector<std::size_t> rows,
                   std::vector<std::size_t> cols) {
  if (rows.size() == 1) return m[rows[0]][cols[0]];
  MPoly acc;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const MPoly& head = m[rows[0]][cols[j]];
    if (head.empty()) continue;
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    std::vector<std::size_t> sub_cols;
    for (std::size_t k = 0; k < cols.size(); ++k)
      if (k != j) sub_cols.push_back(cols[k]);
    MPoly minor = symbolic_det(m, sub_rows, sub_cols);
    mp_add_in(acc, mp_mul(head, minor), /*negate=*/(j % 2) == 1);
  }
  return acc;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - (k - i)) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::size_t z_rank(const std::vector<SymbolicVector>& gens) {
  if (gens.empty()) return 0;
  require_common_basis(gens);
  std::vector<std::vector<Rat>> m;
  m.reserve(gens.size());
  for (const auto& g : gens) m.push_back(flatten_coordinates(g));
  return rational_rank(std::move(m));
}

std::size_t real_span_dim(const std::vector<SymbolicVector>& gens) {
  if (gens.empty()) return 0;
  require_common_basis(gens);
  const auto basis = gens[0].basis();
  std::size_t k = gens[0].dimension();

  if (basis->mode() == SymbolBasis::Mode::Rational) {
    std::vector<std::vector<Rat>> m;
    for (const auto& g : gens) m.push_back(flatten_coordinates(g));
    return rational_rank(std::move(m));
  }

  // Transcendental mode: rank of the k x n matrix over the function field.
  std::size_t nsym = basis->symbol_count();
  std::vector<std::vector<MPoly>> m(k, std::vector<MPoly>(gens.size()));
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t a = 0; a < k; ++a) m[a][j] = mp_from_linform(gens[j].entry(a), nsym);

  for (std::size_t r = std::min(k, gens.size()); r >= 1; --r) {
    std::vector<std::size_t> rows(r), cols(r);
    for (std::size_t i = 0; i < r; ++i) rows[i] = i;
    do {
      for (std::size_t i = 0; i < r; ++i) cols[i] = i;
      do {
        if (!symbolic_det(m, rows, cols).empty()) return r;
      } while (next_combination(cols, gens.size()));
    } while (next_combination(rows, k));
  }
  return 0;
}

bool is_discrete(const std::vector<SymbolicVector>& gens) {
  return z_rank(gens) == real_span_dim(gens);
}

TraceWitnessResult discrete_trace_witness(const std::vector<SymbolicVector>& gens,
                                          const std::vector<Rat>& functional) {
  TraceWitnessResult out;
  if (gens.empty()) {
    out.discrete = true;
    out.generator = 0;
    return out;
  }
  require_common_basis(gens);
  if (functional.size() != gens[0].dimension())
    throw std::invalid_argument("discrete_trace_witness: functional arity mismatch");
  std::size_t arity = gens[0].basis()->symbol_count() + 1;
  bool rational_mode = gens[0].basis()->mode() == SymbolBasis::Mode::Rational;
  Rat g = 0;
  for (const auto& v : gens) {
    LinForm val;
    val.c.assign(arity, Rat(0));
    for (std::size_t a = 0; a < v.dimension(); ++a)
      for (std::size_t s = 0; s < arity; ++s) val.c[s] += functional[a] * v.entry(a).c[s];
    Rat value;
    if (rational_mode) {
      value = 0;
      for (std::size_t s = 0; s < arity; ++s)
        value += val.c[s] * v.basis()->rational_value(s);
    } else {
      if (!val.is_rational()) {
        out.discrete = false;
        return out;  // irrational values: not a subgroup of c*Z in Q
      }
      value = val.c[0];
    }
    out.values.push_back(value);
    g = gcd_rat(g, value);
  }
  out.discrete = true;
  out.generator = g;
  return out;
}

TraceWitnessResult discrete_trace_witness(const std::vector<SymbolicVector>& gens,
                                          std::size_t coordinate) {
  if (gens.empty()) return discrete_trace_witness(gens, std::vector<Rat>{});
  std::vector<Rat> f(gens[0].dimension(), Rat(0));
  f.at(coordinate) = 1;
  return discrete_trace_witness(gens, f);
}

std::optional<std::vector<Int>> integer_span_solve(
    const std::vector<std::vector<Rat>>& columns, const std::vector<Rat>& target) {
  std::size_t n = columns.size();
  if (n == 0) {
    for (const auto& t : target)
      if (t != 0) return std::nullopt;
    return std::vector<Int>{};
  }
  std::size_t m = columns[0].size();
  for (const auto& c : columns)
    if (c.size() != m) throw std::invalid_argument("integer_span_solve: ragged columns");
  if (target.size() != m)
    throw std::invalid_argument("integer_span_solve: target dimension mismatch");

  // clear denominators jointly
  Int lcm = 1;
  auto fold = [&lcm](const Rat& q) { lcm = lcm / gcd_int(lcm, den(q)) * den(q); };
  for (const auto& c : columns)
    for (const auto& q : c) fold(q);
  for (const auto& q : target) fold(q);

  std::vector<std::vector<Int>> h(m, std::vector<Int>(n, 0));  // working copy of A
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i)
      h[i][j] = num(columns[j][i]) * (lcm / den(columns[j][i]));
  std::vector<Int> b(m);
  for (std::size_t i = 0; i < m; ++i) b[i] = num(target[i]) * (lcm / den(target[i]));

  // column-style Hermite reduction with a unimodular tracker
  std::vector<std::vector<Int>> u(n, std::vector<Int>(n, 0));
  for (std::size_t j = 0; j < n; ++j) u[j][j] = 1;

  auto col_sub = [&](std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t i = 0; i < m; ++i) h[i][dst] -= q * h[i][src];
    for (std::size_t i = 0; i < n; ++i) u[i][dst] -= q * u[i][src];
  };
  auto col_swap = [&](std::size_t a, std::size_t bcol) {
    for (std::size_t i = 0; i < m; ++i) std::swap(h[i][a], h[i][bcol]);
    for (std::size_t i = 0; i < n; ++i) std::swap(u[i][a], u[i][bcol]);
  };
  auto col_neg = [&](std::size_t a) {
    for (std::size_t i = 0; i < m; ++i) h[i][a] = -h[i][a];
    for (std::size_t i = 0; i < n; ++i) u[i][a] = -u[i][a];
  };

  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
  std::size_t c = 0;
  for (std::size_t r = 0; r < m && c < n; ++r) {
    while (true) {
      std::size_t best = n;
      for (std::size_t j = c; j < n; ++j) {
        if (h[r][j] == 0) continue;
        if (best == n || abs_int(h[r][j]) < abs_int(h[r][best])) best = j;
      }
      if (best == n) break;  // row has no pivot among remaining columns
      col_swap(c, best);
      bool cleared = true;
      for (std::size_t j = c + 1; j < n; ++j) {
        if (h[r][j] == 0) continue;
        Int q = h[r][j] / h[r][c];
        col_sub(j, c, q);
        if (h[r][j] != 0) cleared = false;
      }
      if (cleared) {
        if (h[r][c] < 0) col_neg(c);
        pivots.emplace_back(r, c);
        ++c;
        break;
      }
    }
  }

  // forward-solve against the echelon columns
  std::vector<Int> y(n, 0);
  std::vector<Int> residual = b;
  for (auto [r, j] : pivots) {
    if (residual[r] == 0) continue;
    if (residual[r] % h[r][j] != 0) return std::nullopt;
    Int q = residual[r] / h[r][j];
    y[j] = q;
    for (std::size_t i = 0; i < m; ++i) residual[i] -= q * h[i][j];
  }
  for (const auto& v : residual)
    if (v != 0) return std::nullopt;

  std::vector<Int> x(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) x[i] += u[i][j] * y[j];
  return x;
}

}  // namespace dgt

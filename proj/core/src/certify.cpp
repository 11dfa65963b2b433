#include "dgt/certify.hpp"

#include <algorithm>

namespace dgt {

namespace {

/// Entries whose recurrence pattern is known: the period, or (flagged) the
/// whole finite list. Indices reported are 1-based sequence positions of the
/// first occurrence.
struct Tail {
  std::vector<const LaurentPoly*> entries;
  std::vector<std::size_t> indices;
  bool prefix_relative = false;
};

Tail tail_of(const PolySequence& seq) {
  Tail t;
  if (seq.is_periodic()) {
    for (std::size_t j = 0; j < seq.period().size(); ++j) {
      t.entries.push_back(&seq.period()[j]);
      t.indices.push_back(seq.prefix_size() + j + 1);
    }
  } else {
    t.prefix_relative = true;
    for (std::size_t j = 0; j < seq.prefix_size(); ++j) {
      t.entries.push_back(&seq.prefix()[j]);
      t.indices.push_back(j + 1);
    }
  }
  return t;
}

template <class Pred>
ConditionVerdict exists_in_tail(const PolySequence& seq, Pred&& pred) {
  Tail t = tail_of(seq);
  ConditionVerdict v;
  v.prefix_relative = t.prefix_relative;
  for (std::size_t j = 0; j < t.entries.size(); ++j)
    if (pred(*t.entries[j])) v.evidence.push_back(t.indices[j]);
  v.holds = !v.evidence.empty();
  return v;
}

Int terminal_coeff(const LaurentPoly& p) { return p.coeff(p.min_exp()); }
Int leading_coeff(const LaurentPoly& p) { return p.coeff(p.max_exp()); }

}  // namespace

DaggerVerdict check_dagger(const PolySequence& seq) {
  DaggerVerdict d;
  d.terminal = exists_in_tail(seq, [](const LaurentPoly& p) { return terminal_coeff(p) > 1; });
  d.leading = exists_in_tail(seq, [](const LaurentPoly& p) { return leading_coeff(p) > 1; });
  return d;
}

ConditionVerdict check_content_ae_one(const PolySequence& seq) {
  Tail t = tail_of(seq);
  ConditionVerdict v;
  v.prefix_relative = t.prefix_relative;
  v.holds = true;
  for (std::size_t j = 0; j < t.entries.size(); ++j) {
    if (content(*t.entries[j]) == 1)
      v.evidence.push_back(t.indices[j]);
    else
      v.holds = false;
  }
  return v;
}

ConditionVerdict check_isolani_free(const PolySequence& seq) {
  return exists_in_tail(seq, [](const LaurentPoly& p) {
    IsolaniInfo info = isolani_exponents(p);
    return !info.has_leading && !info.has_terminal;
  });
}

ConditionVerdict check_equal_logs(const PolySequence& seq) {
  // Every tail entry recurs along its residue class, so any entry witnesses
  // an infinite equal-Log subfamily once the tail is periodic.
  Tail t = tail_of(seq);
  ConditionVerdict v;
  v.prefix_relative = t.prefix_relative;
  v.evidence = t.indices;
  v.holds = !t.entries.empty();
  if (t.prefix_relative)
    v.note = "finite data: assumes the listed entries recur";
  return v;
}

bool check_projectively_faithful(const LaurentPoly& p) {
  if (p.is_zero()) throw std::domain_error("check_projectively_faithful: zero polynomial");
  Int g = 0;
  auto lo = p.min_exp();
  for (const auto& [k, c] : p.terms()) g = gcd_int(g, Int(k - lo));
  return g == 1;
}

const char* to_string(Classification c) {
  switch (c) {
    case Classification::AntiFD: return "AntiFD";
    case Classification::ProFD: return "ProFD";
    default: return "Inconclusive";
  }
}

CertReport antifd_verdict(const PolySequence& seq) {
  CertReport r;
  DaggerVerdict d = check_dagger(seq);
  r.terminal_coeff = d.terminal;
  r.leading_coeff = d.leading;
  r.content_one = check_content_ae_one(seq);
  r.isolani_free = check_isolani_free(seq);
  r.equal_logs = check_equal_logs(seq);
  r.prefix_relative = !seq.is_periodic();

  bool iv = r.isolani_free.holds || r.equal_logs.holds;
  if (r.terminal_coeff.holds && r.leading_coeff.holds && r.content_one.holds && iv) {
    r.classification = Classification::AntiFD;
  } else if (!r.content_one.holds) {
    r.classification = Classification::ProFD;
    r.note = "contents exceed 1 persistently: rank-1 tensor factor splits off";
  } else {
    r.classification = Classification::Inconclusive;
    if (!r.terminal_coeff.holds && !r.leading_coeff.holds)
      r.note =
          "endpoint multipliers are all 1: both endpoint traces have range Z "
          "(GICAR/Pascal-type); the certificate conditions cannot apply";
  }
  return r;
}

Bifurcation bifurcate(const PolySequence& seq) {
  Bifurcation b;
  b.prefix_relative = !seq.is_periodic();
  Tail t = tail_of(seq);
  bool pro_fd = false;
  for (const auto* p : t.entries)
    if (content(*p) > 1) pro_fd = true;

  std::size_t materialized = seq.prefix_size() + (seq.is_periodic() ? seq.period().size() : 0);
  for (std::size_t i = 1; i <= materialized; ++i) b.contents.push_back(content(seq.entry(i)));

  if (pro_fd) {
    b.kind = Bifurcation::Kind::ProFd;
    auto divide_by_content = [](const LaurentPoly& p) {
      Int d = content(p);
      LaurentPoly out;
      for (const auto& [k, c] : p.terms()) out.set(k, c / d);
      return out;
    };
    std::vector<LaurentPoly> prefix;
    for (const auto& p : seq.prefix()) prefix.push_back(divide_by_content(p));
    std::optional<PolySequence::Periodic> tail;
    if (seq.is_periodic()) {
      PolySequence::Periodic per;
      for (const auto& p : seq.period()) per.period.push_back(divide_by_content(p));
      tail = std::move(per);
    }
    b.reduced = PolySequence(std::move(prefix), std::move(tail));
    for (const auto* p : t.entries) b.rank1_multipliers.push_back(content(*p));
    b.certificate = "p_i = d_i P_i with d_i = c(p_i); the limit factors through U = lim x d_i";
  } else {
    b.kind = Bifurcation::Kind::DiscreteFiniteRank;
    b.certificate =
        "contents are 1 on the tail: every finite-rank subgroup lands in some "
        "monomial lattice G_n, whose generators are exactly independent";
  }
  return b;
}

namespace {

void require_content_one_tail(const PolySequence& seq) {
  Tail t = tail_of(seq);
  for (const auto* p : t.entries)
    if (content(*p) != 1)
      throw std::invalid_argument("G_n machinery requires content 1 on the tail");
}

bool support_subset_of(const LaurentPoly& f, const LaurentPoly& container) {
  for (const auto& [k, c] : f.terms())
    if (container.coeff(k) == 0) return false;
  return true;
}

/// Numerator of e over Q_n, when e lies in G_n.
std::optional<LaurentPoly> gn_numerator(const LimitElement& e, std::size_t n) {
  const auto& seq = *e.sequence();
  std::size_t r = e.stage();
  LaurentPoly g;
  if (r <= n) {
    g = e.numerator_at(n);
  } else {
    LaurentPoly d = LaurentPoly::one();
    for (std::size_t i = n + 1; i <= r; ++i) d = d * seq.entry(i);
    auto q = divide_exact(e.numerator(), d);
    if (!q) return std::nullopt;
    g = std::move(*q);
  }
  if (!g.is_zero() && !support_subset_of(g, seq.q_product(n))) return std::nullopt;
  return g;
}

}  // namespace

bool in_gn(const LimitElement& e, std::size_t n) {
  require_content_one_tail(*e.sequence());
  return gn_numerator(e, n).has_value();
}

std::vector<Int> gn_coordinates(const LimitElement& e, std::size_t n) {
  require_content_one_tail(*e.sequence());
  auto g = gn_numerator(e, n);
  if (!g) throw std::invalid_argument("gn_coordinates: element is not in G_n");
  std::vector<Int> coords;
  for (auto k : log_set(e.sequence()->q_product(n))) coords.push_back(g->coeff(k));
  return coords;
}

std::size_t find_gn(const std::vector<LimitElement>& gens) {
  if (gens.empty()) return 0;
  require_content_one_tail(*gens[0].sequence());
  // canonical stages are minimal: the first lattice containing an element
  // [f, r] in canonical form is G_r, so the answer is the max stage
  std::size_t n = 0;
  for (const auto& e : gens) n = std::max(n, e.stage());
  for (const auto& e : gens)
    if (!gn_numerator(e, n))
      throw std::logic_error("find_gn: canonical element escaped its lattice");
  return n;
}

bool purity_check(const LimitElement& e, const Int& m, std::size_t n) {
  if (m == 0) throw std::invalid_argument("purity_check: m must be nonzero");
  bool me_in = in_gn(e * m, n);
  bool e_in = in_gn(e, n);
  return !me_in || e_in;
}

GnWitness gn_discreteness_witness(PolySequencePtr seq, std::size_t n) {
  GnWitness w;
  w.stage = n;
  const LaurentPoly& q = seq->q_product(n);
  auto exps = log_set(q);
  std::size_t dim = exps.size();
  std::size_t idx = 0;
  for (auto k : exps) {
    w.basis.push_back(make_element(seq, LaurentPoly::monomial(k, 1), n));
    std::vector<Rat> coords(dim, Rat(0));
    coords[idx] = 1;
    w.coefficient_vectors.push_back(std::move(coords));
    ++idx;
  }
  w.independent = true;  // distinct monomials have distinct supports
  return w;
}

}  // namespace dgt

#include "dgt/limit_element.hpp"

#include <algorithm>

namespace dgt {

const char* to_string(Truth t) {
  switch (t) {
    case Truth::True: return "true";
    case Truth::False: return "false";
    default: return "unknown";
  }
}

namespace {

bool support_subset(const LaurentPoly& f, const LaurentPoly& container) {
  for (const auto& [k, c] : f.terms())
    if (container.coeff(k) == 0) return false;
  return true;
}

void require_same_sequence(const LimitElement& a, const LimitElement& b) {
  if (a.sequence() == b.sequence()) return;
  if (a.sequence() && b.sequence() && *a.sequence() == *b.sequence()) return;
  throw std::invalid_argument("LimitElement: different defining sequences");
}

}  // namespace

LimitElement::LimitElement(PolySequencePtr seq, LaurentPoly f, std::size_t stage)
    : seq_(std::move(seq)), f_(std::move(f)), stage_(stage) {
  if (!seq_) throw std::invalid_argument("LimitElement: null sequence");
  if (f_.is_zero()) {
    stage_ = 0;
    return;
  }
  // canonical form: strip trailing p_n factors while the support condition
  // still holds one stage down
  while (stage_ > 0) {
    auto q = divide_exact(f_, seq_->entry(stage_));
    if (!q || !support_subset(*q, seq_->q_product(stage_ - 1))) break;
    f_ = std::move(*q);
    --stage_;
  }
}

LaurentPoly LimitElement::numerator_at(std::size_t m) const {
  if (m < stage_) throw std::invalid_argument("numerator_at: stage below canonical stage");
  LaurentPoly g = f_;
  for (std::size_t i = stage_ + 1; i <= m; ++i) g = g * seq_->entry(i);
  return g;
}

LimitElement LimitElement::operator+(const LimitElement& o) const {
  require_same_sequence(*this, o);
  std::size_t m = std::max(stage_, o.stage_);
  return LimitElement(seq_, numerator_at(m) + o.numerator_at(m), m);
}

LimitElement LimitElement::operator-(const LimitElement& o) const {
  require_same_sequence(*this, o);
  std::size_t m = std::max(stage_, o.stage_);
  return LimitElement(seq_, numerator_at(m) - o.numerator_at(m), m);
}

LimitElement LimitElement::operator*(const Int& s) const {
  return LimitElement(seq_, f_ * s, stage_);
}

LimitElement LimitElement::operator-() const { return LimitElement(seq_, -f_, stage_); }

LimitElement make_element(PolySequencePtr seq, LaurentPoly f, std::size_t stage) {
  if (!seq) throw std::invalid_argument("make_element: null sequence");
  if (!f.is_zero() && !support_subset(f, seq->q_product(stage)))
    throw std::invalid_argument("make_element: Log f is not contained in Log Q_n");
  return LimitElement(std::move(seq), std::move(f), stage);
}

LimitElement unit_element(PolySequencePtr seq) {
  return LimitElement(std::move(seq), LaurentPoly::one(), 0);
}

bool elem_equal(const LimitElement& a, const LimitElement& b) {
  require_same_sequence(a, b);
  std::size_t m = std::max(a.stage(), b.stage());
  return a.numerator_at(m) == b.numerator_at(m);
}

const std::vector<Rat>& trace_probe_points() {
  static const std::vector<Rat> pts = [] {
    std::vector<Rat> v;
    v.emplace_back(1);
    for (int q = 2; q <= 6; ++q) {
      for (int p = 1; p <= 6; ++p) {
        if (gcd_int(p, q) != 1) continue;
        v.emplace_back(p, q);
        v.emplace_back(q, p);
      }
    }
    return v;
  }();
  return pts;
}

namespace {

/// Exact negative point/endpoint trace of [f, n], if one is visible.
std::optional<TraceWitness> negative_trace(const LimitElement& e, bool allow_zero) {
  const auto& f = e.numerator();
  if (f.is_zero()) {
    if (allow_zero) {
      TraceWitness w;
      w.kind = TraceWitness::Kind::Point;
      w.point = 1;
      w.value = 0;
      return w;
    }
    return std::nullopt;
  }
  const LaurentPoly& q = e.sequence()->q_product(e.stage());
  auto bad = [&](const Rat& v) { return allow_zero ? v <= 0 : v < 0; };

  Rat t0(f.coeff(q.min_exp()), q.coeff(q.min_exp()));
  if (bad(t0)) {
    TraceWitness w;
    w.kind = TraceWitness::Kind::Zero;
    w.value = t0;
    return w;
  }
  Rat ti(f.coeff(q.max_exp()), q.coeff(q.max_exp()));
  if (bad(ti)) {
    TraceWitness w;
    w.kind = TraceWitness::Kind::Infty;
    w.value = ti;
    return w;
  }
  for (const Rat& t : trace_probe_points()) {
    Rat v = eval_rational(f, t) / eval_rational(q, t);
    if (bad(v)) {
      TraceWitness w;
      w.kind = TraceWitness::Kind::Point;
      w.point = t;
      w.value = v;
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace

Verdict is_positive(const LimitElement& e, const SearchCaps& caps) {
  if (e.is_zero()) {
    Verdict v = Verdict::yes();
    v.positive_cert = PositivityCertificate{0, LaurentPoly{}};
    return v;
  }
  if (auto w = negative_trace(e, /*allow_zero=*/false)) {
    Verdict v = Verdict::no();
    v.trace_witness = *w;
    return v;
  }
  const auto& seq = *e.sequence();
  std::size_t hi = std::max(e.stage(), caps.stage_cap);
  if (auto mx = seq.max_index()) hi = std::min<std::size_t>(hi, *mx);
  LaurentPoly prod = e.numerator();
  for (std::size_t k = e.stage(); k <= hi; ++k) {
    if (k > e.stage()) prod = prod * seq.entry(k);
    if (prod.all_nonnegative()) {
      Verdict v = Verdict::yes();
      v.positive_cert = PositivityCertificate{k, prod};
      return v;
    }
  }
  return Verdict::unknown(hi);
}

Verdict is_order_unit(const LimitElement& e, const SearchCaps& caps) {
  if (auto w = negative_trace(e, /*allow_zero=*/true)) {
    Verdict v = Verdict::no();
    v.trace_witness = *w;
    return v;
  }
  LimitElement u = unit_element(e.sequence());
  std::size_t last_cap = caps.stage_cap;
  for (Int m = 1; m <= caps.multiplier_cap; ++m) {
    Verdict v = is_positive(e * m - u, caps);
    if (v.is_true()) {
      v.multiplier = m;
      return v;
    }
    if (v.cap_reached) last_cap = *v.cap_reached;
    // a False here reflects this particular m, not e itself; keep searching
  }
  return Verdict::unknown(last_cap);
}

Rat trace_point(const LimitElement& e, const Rat& t) {
  if (t <= 0) throw std::invalid_argument("trace_point: t must be positive");
  return eval_rational(e.numerator(), t) /
         eval_rational(e.sequence()->q_product(e.stage()), t);
}

Rat trace_zero(const LimitElement& e) {
  const LaurentPoly& q = e.sequence()->q_product(e.stage());
  return Rat(e.numerator().coeff(q.min_exp()), q.coeff(q.min_exp()));
}

Rat trace_infty(const LimitElement& e) {
  const LaurentPoly& q = e.sequence()->q_product(e.stage());
  return Rat(e.numerator().coeff(q.max_exp()), q.coeff(q.max_exp()));
}

namespace {

TraceRange trace_range(const PolySequence& seq, std::size_t n, bool leading) {
  TraceRange r;
  r.prefix_relative = !seq.is_periodic();
  for (std::size_t i = 1; i <= n; ++i) {
    const LaurentPoly& p = seq.entry_normalized(i);
    r.multipliers.push_back(leading ? p.coeff(p.max_exp()) : p.coeff(0));
  }
  if (seq.is_periodic()) {
    bool noncyclic = false;
    for (const auto& p : seq.period()) {
      const LaurentPoly pn = normalize_min_zero(p).first;
      Int m = leading ? pn.coeff(pn.max_exp()) : pn.coeff(0);
      if (m > 1) noncyclic = true;
    }
    r.dense = noncyclic;
  }
  return r;
}

}  // namespace

TraceRange trace_range_zero(const PolySequence& seq, std::size_t n) {
  return trace_range(seq, n, /*leading=*/false);
}

TraceRange trace_range_infty(const PolySequence& seq, std::size_t n) {
  return trace_range(seq, n, /*leading=*/true);
}

bool infinitesimal_test(const LimitElement& e) { return e.is_zero(); }

}  // namespace dgt

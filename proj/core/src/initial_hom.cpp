#include "dgt/initial_hom.hpp"

namespace dgt {

BinomialSequence::BinomialSequence(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
  if (pairs_.empty()) throw std::invalid_argument("BinomialSequence: no pairs");
  for (const auto& [a, b] : pairs_) {
    if (a <= 1 || b <= 1)
      throw std::invalid_argument("BinomialSequence: needs 1 < a and 1 < b");
    if (gcd_int(a, b) != 1)
      throw std::invalid_argument("BinomialSequence: gcd(a, b) must be 1");
  }
}

const BinomialSequence::Pair& BinomialSequence::pair(std::size_t n) const {
  if (n == 0 || n > pairs_.size())
    throw std::out_of_range("BinomialSequence: pair index out of range");
  return pairs_[n - 1];
}

Rat BinomialSequence::prefix_d(std::size_t n) const {
  if (n > pairs_.size()) throw std::out_of_range("BinomialSequence: prefix too long");
  Rat d = 1;
  for (std::size_t i = 0; i < n; ++i)
    d *= Rat(abs_int(pairs_[i].a - pairs_[i].b), pairs_[i].a + pairs_[i].b);
  return d;
}

Rat BinomialSequence::stage_constant(std::size_t n) const {
  if (n > pairs_.size()) throw std::out_of_range("BinomialSequence: prefix too long");
  Int prod = 1;
  for (std::size_t i = 0; i < n; ++i) prod *= pairs_[i].a + pairs_[i].b;
  return Rat(1, prod);
}

LaurentPoly BinomialSequence::poly(std::size_t n) const {
  const auto& [a, b] = pair(n);
  LaurentPoly p = LaurentPoly::constant(a);
  p.set(1, b);
  return p;
}

PolySequencePtr BinomialSequence::as_poly_sequence() const {
  std::vector<LaurentPoly> entries;
  for (std::size_t n = 1; n <= pairs_.size(); ++n) entries.push_back(poly(n));
  return std::make_shared<const PolySequence>(PolySequence::finite(std::move(entries)));
}

std::vector<Rat> chain_nullspace(const Int& a, const Int& b, std::size_t n) {
  std::vector<Rat> w;
  Rat cur = 1;
  for (std::size_t i = 0; i <= n; ++i) {
    w.push_back(cur);
    cur *= Rat(-b, a);
  }
  return w;
}

NonInteractiveVerdict noninteractive_check(const PolySequence& seq, std::size_t depth) {
  NonInteractiveVerdict v;
  for (std::size_t n = 1; n + 1 <= depth; ++n) {
    auto logq = log_set(seq.q_product(n));
    auto logp = log_set(seq.entry(n + 1));
    std::map<LaurentPoly::Exp, LaurentPoly::Exp> seen;  // sum -> source j
    for (auto j : logq) {
      for (auto t : logp) {
        auto [it, inserted] = seen.emplace(j + t, j);
        if (!inserted && it->second != j) {
          v.holds = false;
          v.fail_level = n;
          v.fail_j = it->second;
          v.fail_k = j;
          v.collision = j + t;
          return v;
        }
      }
    }
  }
  return v;
}

DenseRangeVerdict dense_range_verdict_noninteractive(const PolySequence& seq) {
  DenseRangeVerdict v;
  v.prefix_relative = !seq.is_periodic();
  auto no_unit_coeff = [](const LaurentPoly& p) {
    for (const auto& [k, c] : p.terms())
      if (c == 1) return false;
    return true;
  };
  if (seq.is_periodic()) {
    for (std::size_t j = 0; j < seq.period().size(); ++j)
      if (no_unit_coeff(seq.period()[j]))
        v.evidence.push_back(seq.prefix_size() + j + 1);
  } else {
    for (std::size_t j = 0; j < seq.prefix_size(); ++j)
      if (no_unit_coeff(seq.prefix()[j])) v.evidence.push_back(j + 1);
  }
  v.dense = !v.evidence.empty();
  return v;
}

}  // namespace dgt

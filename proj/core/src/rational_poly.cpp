#include "dgt/rational_poly.hpp"

#include <stdexcept>

namespace dgt {

RatPoly RatPoly::operator-() const {
  std::vector<Rat> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + (-o); }

RatPoly RatPoly::operator*(const RatPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const Rat& s) const {
  std::vector<Rat> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
  return RatPoly(std::move(r));
}

RatPoly poly_rem(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::domain_error("poly_rem: division by zero polynomial");
  std::vector<Rat> r = a.coeffs();
  const int db = b.degree();
  while (static_cast<int>(r.size()) - 1 >= db) {
    Rat q = r.back() / b.lead();
    std::size_t shift = r.size() - 1 - static_cast<std::size_t>(db);
    for (int i = 0; i <= db; ++i)
      r[shift + static_cast<std::size_t>(i)] -= q * b.coeff(static_cast<std::size_t>(i));
    while (!r.empty() && r.back() == 0) r.pop_back();
    if (r.empty()) break;
  }
  return RatPoly(std::move(r));
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (Rat(1) / a.lead());
}

namespace {

int sign_of(const Rat& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

int sign_variations(const std::vector<RatPoly>& chain, const Rat& t) {
  int variations = 0;
  int prev = 0;
  for (const auto& p : chain) {
    int s = sign_of(p.eval(t));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

}  // namespace

int count_roots_in_open_interval(const RatPoly& p, const Rat& a, const Rat& b) {
  if (p.is_zero()) throw std::domain_error("count_roots_in_open_interval: zero polynomial");
  if (p.eval(a) == 0 || p.eval(b) == 0)
    throw std::domain_error("count_roots_in_open_interval: root at an endpoint");
  RatPoly g = poly_gcd(p, p.derivative());
  RatPoly sf = p;
  if (g.degree() > 0) {
    // exact division p / g
    std::vector<Rat> q(static_cast<std::size_t>(p.degree() - g.degree() + 1), Rat(0));
    std::vector<Rat> r = p.coeffs();
    while (static_cast<int>(r.size()) - 1 >= g.degree()) {
      Rat c = r.back() / g.lead();
      std::size_t shift = r.size() - 1 - static_cast<std::size_t>(g.degree());
      q[shift] = c;
      for (int i = 0; i <= g.degree(); ++i)
        r[shift + static_cast<std::size_t>(i)] -= c * g.coeff(static_cast<std::size_t>(i));
      while (!r.empty() && r.back() == 0) r.pop_back();
    }
    sf = RatPoly(std::move(q));
  }

  std::vector<RatPoly> chain;
  chain.push_back(sf);
  RatPoly d = sf.derivative();
  if (!d.is_zero()) {
    chain.push_back(d);
    while (true) {
      const RatPoly& s0 = chain[chain.size() - 2];
      const RatPoly& s1 = chain[chain.size() - 1];
      RatPoly r = poly_rem(s0, s1);
      if (r.is_zero()) break;
      chain.push_back(-r);
    }
  }
  return sign_variations(chain, a) - sign_variations(chain, b);
}

}  // namespace dgt

#pragma once

#include <vector>

#include "dgt/numeric.hpp"

namespace dgt {

/// Dense univariate polynomial over Q; coefficient i is the x^i coefficient.
/// Used for Sturm sequences and interval arithmetic on ordinary polynomials.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static RatPoly constant(Rat v) { return RatPoly({std::move(v)}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
  Rat lead() const { return c_.empty() ? Rat(0) : c_.back(); }

  Rat eval(const Rat& t) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  RatPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rat> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Int(i);
    return RatPoly(std::move(d));
  }

  RatPoly operator-() const;
  RatPoly operator+(const RatPoly& o) const;
  RatPoly operator-(const RatPoly& o) const;
  RatPoly operator*(const RatPoly& o) const;
  RatPoly operator*(const Rat& s) const;

  bool operator==(const RatPoly& o) const { return c_ == o.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

/// Remainder of a by b (b nonzero).
RatPoly poly_rem(const RatPoly& a, const RatPoly& b);

/// Monic gcd via the Euclidean algorithm.
RatPoly poly_gcd(RatPoly a, RatPoly b);

/// Number of distinct real roots of p in the open interval (a, b);
/// requires p(a) != 0 and p(b) != 0. Squarefree reduction is applied first.
int count_roots_in_open_interval(const RatPoly& p, const Rat& a, const Rat& b);

}  // namespace dgt

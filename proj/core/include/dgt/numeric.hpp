#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace dgt {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }
inline Rat abs_rat(const Rat& q) { return q < 0 ? Rat(-q) : q; }

inline Int gcd_int(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

/// gcd on rationals: gcd(a/b, c/d) generates the cyclic group containing both.
inline Rat gcd_rat(const Rat& a, const Rat& b) {
  if (a == 0) return abs_rat(b);
  if (b == 0) return abs_rat(a);
  Int n = gcd_int(num(a) * den(b), num(b) * den(a));
  Int d = den(a) * den(b);
  return Rat(n, d);
}

inline Int pow_int(const Int& base, unsigned long long e) {
  Int r = 1, b = base;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

/// t^k for integer k (possibly negative); requires t != 0 when k < 0.
inline Rat pow_rat(const Rat& t, long long k) {
  if (k >= 0) {
    return Rat(pow_int(num(t), static_cast<unsigned long long>(k)),
               pow_int(den(t), static_cast<unsigned long long>(k)));
  }
  if (t == 0) throw std::domain_error("pow_rat: 0 cannot be raised to a negative power");
  unsigned long long e = static_cast<unsigned long long>(-k);
  return Rat(pow_int(den(t), e), pow_int(num(t), e));
}

/// Smallest nonnegative k with a*k == 1 (mod m); requires gcd(a, m) == 1, m >= 1.
inline Int mod_inverse(Int a, const Int& m) {
  if (m == 1) return 0;
  a %= m;
  if (a < 0) a += m;
  Int old_r = a, r = m, old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw std::domain_error("mod_inverse: arguments are not coprime");
  old_s %= m;
  if (old_s < 0) old_s += m;
  return old_s;
}

/// True iff n == base^e for some e >= 0 (n >= 1, base >= 2).
inline bool is_power_of(Int n, const Int& base) {
  if (n < 1) return false;
  while (n > 1) {
    if (n % base != 0) return false;
    n /= base;
  }
  return true;
}

/// A point m/base^e strictly inside (lo, hi); deterministic (minimal e, then
/// smallest numerator). Requires lo < hi and base >= 2.
inline Rat base_point_in(const Rat& lo, const Rat& hi, const Int& base) {
  if (!(lo < hi)) throw std::invalid_argument("base_point_in: empty interval");
  Int p = 1;
  for (int e = 0;; ++e) {
    // want integer m with lo*p < m < hi*p
    Int m = (num(lo) * p) / den(lo);
    while (Rat(m, p) <= lo) ++m;
    if (Rat(m, p) < hi) return Rat(m, p);
    p *= base;
    if (e > 100000) throw std::runtime_error("base_point_in: interval too thin");
  }
}

inline std::string to_string(const Int& n) { return n.str(); }

inline std::string to_string(const Rat& q) {
  if (den(q) == 1) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int n(s.substr(0, slash));
    Int d(s.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("zero denominator");
    return Rat(n, d);
  } catch (const std::exception&) {
    throw std::invalid_argument("parse_rat: cannot parse '" + s + "'");
  }
}

inline double to_double(const Rat& q) { return q.convert_to<double>(); }

/// Deterministic RNG for tests and sampled checks.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  long long uniform(long long lo, long long hi) {
    std::uniform_int_distribution<long long> d(lo, hi);
    return d(eng_);
  }

  Int uniform_int(long long lo, long long hi) { return Int(uniform(lo, hi)); }

  /// Random rational with numerator in [lo, hi] and denominator in [1, dmax].
  Rat uniform_rat(long long lo, long long hi, long long dmax) {
    return Rat(uniform_int(lo, hi), uniform_int(1, dmax));
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace dgt

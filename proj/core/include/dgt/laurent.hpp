#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "dgt/numeric.hpp"

namespace dgt {

/// Laurent polynomial over the integers: the ring Z[x, x^-1] with exact
/// arithmetic. Coefficients are arbitrary-precision; zero coefficients are
/// never stored, so the zero polynomial has empty support.
class LaurentPoly {
 public:
  using Exp = long long;

  LaurentPoly() = default;

  static LaurentPoly constant(Int c) {
    LaurentPoly f;
    f.set(0, std::move(c));
    return f;
  }

  static LaurentPoly monomial(Exp k, Int c) {
    LaurentPoly f;
    f.set(k, std::move(c));
    return f;
  }

  static LaurentPoly one() { return constant(1); }

  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of x^k (zero if absent).
  Int coeff(Exp k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? Int(0) : it->second;
  }

  void set(Exp k, Int c) {
    if (c == 0)
      coeffs_.erase(k);
    else
      coeffs_[k] = std::move(c);
  }

  void add_to(Exp k, const Int& c) {
    auto it = coeffs_.find(k);
    if (it == coeffs_.end()) {
      if (c != 0) coeffs_.emplace(k, c);
      return;
    }
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }

  Exp min_exp() const {
    require_nonzero("min_exp");
    return coeffs_.begin()->first;
  }

  Exp max_exp() const {
    require_nonzero("max_exp");
    return coeffs_.rbegin()->first;
  }

  std::size_t term_count() const { return coeffs_.size(); }

  const std::map<Exp, Int>& terms() const { return coeffs_; }

  bool all_nonnegative() const {
    for (const auto& [k, c] : coeffs_)
      if (c < 0) return false;
    return true;
  }

  bool all_positive() const {
    for (const auto& [k, c] : coeffs_)
      if (c <= 0) return false;
    return true;
  }

  LaurentPoly operator-() const {
    LaurentPoly r;
    for (const auto& [k, c] : coeffs_) r.coeffs_.emplace(k, -c);
    return r;
  }

  LaurentPoly operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [k, c] : o.coeffs_) r.add_to(k, c);
    return r;
  }

  LaurentPoly operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [k, c] : o.coeffs_) r.add_to(k, -c);
    return r;
  }

  LaurentPoly operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [k1, c1] : coeffs_)
      for (const auto& [k2, c2] : o.coeffs_) r.add_to(k1 + k2, c1 * c2);
    return r;
  }

  LaurentPoly operator*(const Int& s) const {
    LaurentPoly r;
    if (s == 0) return r;
    for (const auto& [k, c] : coeffs_) r.coeffs_.emplace(k, c * s);
    return r;
  }

  /// x^s * f.
  LaurentPoly shifted(Exp s) const {
    LaurentPoly r;
    for (const auto& [k, c] : coeffs_) r.coeffs_.emplace(k + s, c);
    return r;
  }

  bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const LaurentPoly& o) const { return coeffs_ != o.coeffs_; }

 private:
  void require_nonzero(const char* who) const {
    if (coeffs_.empty())
      throw std::domain_error(std::string(who) + ": zero polynomial");
  }

  std::map<Exp, Int> coeffs_;
};

/// Log f: the set of exponents with nonzero coefficient.
std::set<LaurentPoly::Exp> log_set(const LaurentPoly& f);

/// gcd of the nonzero coefficients; error on the zero polynomial.
Int content(const LaurentPoly& f);

/// x^(-min Log f) * f together with the applied shift.
std::pair<LaurentPoly, LaurentPoly::Exp> normalize_min_zero(const LaurentPoly& f);

struct IsolaniInfo {
  std::set<LaurentPoly::Exp> exponents;  // i in Log f with i-1 and i+1 absent
  bool has_leading = false;              // max Log f is an isolani
  bool has_terminal = false;             // min Log f is an isolani
};

IsolaniInfo isolani_exponents(const LaurentPoly& f);

/// Same support, every coefficient replaced by 1.
LaurentPoly flatten(const LaurentPoly& f);

/// Exact value of f at t; requires t > 0 when f has negative exponents.
Rat eval_rational(const LaurentPoly& f, const Rat& t);

/// Exact decision of "f(x) > 0 for all x in [a, b]" with 0 < a < b, via a
/// Sturm-sequence root count after clearing powers of x.
bool strictly_positive_on_interval(const LaurentPoly& f, const Rat& a, const Rat& b);

/// If g = f * q for some q in Z[x, x^-1], returns q.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& g, const LaurentPoly& f);

/// Parses the term grammar "c", "c*x^k", "cx^k", "x^-k", joined by +/-.
/// Whitespace-insensitive. Examples: "3 + 2x", "1 + x^3 + x^5", "4x+6".
LaurentPoly parse_poly(const std::string& text);

std::string to_string(const LaurentPoly& f);

}  // namespace dgt

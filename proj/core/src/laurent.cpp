#include "dgt/laurent.hpp"

#include <cctype>
#include <sstream>

#include "dgt/rational_poly.hpp"

namespace dgt {

std::set<LaurentPoly::Exp> log_set(const LaurentPoly& f) {
  std::set<LaurentPoly::Exp> s;
  for (const auto& [k, c] : f.terms()) s.insert(k);
  return s;
}

Int content(const LaurentPoly& f) {
  if (f.is_zero()) throw std::domain_error("content undefined for the zero polynomial");
  Int g = 0;
  for (const auto& [k, c] : f.terms()) g = gcd_int(g, abs_int(c));
  return g;
}

std::pair<LaurentPoly, LaurentPoly::Exp> normalize_min_zero(const LaurentPoly& f) {
  if (f.is_zero()) throw std::domain_error("normalize_min_zero: zero polynomial");
  LaurentPoly::Exp shift = -f.min_exp();
  return {f.shifted(shift), shift};
}

IsolaniInfo isolani_exponents(const LaurentPoly& f) {
  if (f.is_zero()) throw std::domain_error("isolani_exponents: zero polynomial");
  IsolaniInfo info;
  for (const auto& [k, c] : f.terms()) {
    if (f.coeff(k - 1) == 0 && f.coeff(k + 1) == 0) info.exponents.insert(k);
  }
  info.has_leading = info.exponents.count(f.max_exp()) > 0;
  info.has_terminal = info.exponents.count(f.min_exp()) > 0;
  return info;
}

LaurentPoly flatten(const LaurentPoly& f) {
  LaurentPoly r;
  for (const auto& [k, c] : f.terms()) r.set(k, 1);
  return r;
}

Rat eval_rational(const LaurentPoly& f, const Rat& t) {
  if (f.is_zero()) return 0;
  if (f.min_exp() < 0 && t == 0)
    throw std::domain_error("eval_rational: negative exponent at t = 0");
  Rat acc = 0;
  for (const auto& [k, c] : f.terms()) acc += Rat(c) * pow_rat(t, k);
  return acc;
}

bool strictly_positive_on_interval(const LaurentPoly& f, const Rat& a, const Rat& b) {
  if (!(0 < a && a < b))
    throw std::invalid_argument("strictly_positive_on_interval: need 0 < a < b");
  if (f.is_zero()) return false;
  // x^k is positive on (0, inf): clearing the minimal power preserves signs.
  LaurentPoly g = normalize_min_zero(f).first;
  std::vector<Rat> cs(static_cast<std::size_t>(g.max_exp()) + 1, Rat(0));
  for (const auto& [k, c] : g.terms()) cs[static_cast<std::size_t>(k)] = Rat(c);
  RatPoly p(std::move(cs));
  if (p.eval(a) <= 0 || p.eval(b) <= 0) return false;
  return count_roots_in_open_interval(p, a, b) == 0;
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& g, const LaurentPoly& f) {
  if (f.is_zero()) return std::nullopt;
  if (g.is_zero()) return LaurentPoly{};
  // Work with min-zero copies and re-apply the net shift.
  auto [gn, gs] = normalize_min_zero(g);
  auto [fn, fs] = normalize_min_zero(f);
  LaurentPoly rem = gn;
  LaurentPoly quot;
  const Int flead = fn.coeff(fn.max_exp());
  while (!rem.is_zero()) {
    LaurentPoly::Exp dr = rem.max_exp(), df = fn.max_exp();
    if (dr < df) return std::nullopt;
    Int c = rem.coeff(dr);
    if (c % flead != 0) return std::nullopt;
    Int q = c / flead;
    LaurentPoly term = LaurentPoly::monomial(dr - df, q);
    quot = quot + term;
    rem = rem - fn * term;
  }
  // quot * fn == gn; undo shifts: g = f * q means q = quot shifted by fs - gs.
  return quot.shifted(fs - gs);
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t i = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  bool eof() {
    skip_ws();
    return i >= s.size();
  }

  char peek() {
    skip_ws();
    return s[i];
  }

  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("parse_poly: " + why + " at position " +
                                std::to_string(i) + " in '" + s + "'");
  }

  Int parse_uint() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) fail("expected digits");
    return Int(s.substr(start, i - start));
  }

  long long parse_signed_exp() {
    skip_ws();
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
      neg = s[i] == '-';
      ++i;
    }
    Int v = parse_uint();
    long long e = v.convert_to<long long>();
    return neg ? -e : e;
  }

  // term := coeff | coeff '*'? var | var ; var := 'x' ('^' signed_int)?
  LaurentPoly parse_term() {
    skip_ws();
    Int coeff = 1;
    bool saw_coeff = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      coeff = parse_uint();
      saw_coeff = true;
    }
    skip_ws();
    if (i < s.size() && s[i] == '*') {
      ++i;
      skip_ws();
    }
    if (i < s.size() && (s[i] == 'x' || s[i] == 'X')) {
      ++i;
      long long e = 1;
      skip_ws();
      if (i < s.size() && s[i] == '^') {
        ++i;
        e = parse_signed_exp();
      }
      return LaurentPoly::monomial(e, coeff);
    }
    if (!saw_coeff) fail("expected a coefficient or 'x'");
    return LaurentPoly::constant(coeff);
  }

  LaurentPoly parse() {
    LaurentPoly acc;
    bool negate = false;
    skip_ws();
    if (!eof() && (peek() == '+' || peek() == '-')) {
      negate = peek() == '-';
      ++i;
    }
    while (true) {
      LaurentPoly t = parse_term();
      acc = negate ? acc - t : acc + t;
      if (eof()) break;
      char c = peek();
      if (c == '+')
        negate = false;
      else if (c == '-')
        negate = true;
      else
        fail("expected '+' or '-'");
      ++i;
      if (eof()) fail("trailing operator");
    }
    return acc;
  }
};

}  // namespace

LaurentPoly parse_poly(const std::string& text) {
  Parser p(text);
  if (p.eof()) throw std::invalid_argument("parse_poly: empty input");
  return p.parse();
}

std::string to_string(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : f.terms()) {
    Int a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (k == 0) {
      out << a.str();
    } else {
      if (a != 1) out << a.str();
      out << "x";
      if (k != 1) out << "^" << k;
    }
    first = false;
  }
  return out.str();
}

}  // namespace dgt

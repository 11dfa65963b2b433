#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dgt/laurent.hpp"
#include "dgt/rational_poly.hpp"

using namespace dgt;

namespace {

LaurentPoly P(const std::string& s) { return parse_poly(s); }

LaurentPoly random_poly(Rng& rng, int max_deg, long long max_coeff, bool laurent = false) {
  LaurentPoly f;
  long long lo = laurent ? -max_deg : 0;
  for (long long k = lo; k <= max_deg; ++k) {
    if (rng.uniform(0, 2) == 0) continue;
    Int c = rng.uniform_int(-max_coeff, max_coeff);
    if (c != 0) f.set(k, c);
  }
  return f;
}

}  // namespace

TEST_CASE("log_set reads off the support") {
  CHECK(log_set(P("2x+3")) == std::set<long long>{0, 1});
  CHECK(log_set(P("1 + x^3 + x^5")) == std::set<long long>{0, 3, 5});
  CHECK(log_set(LaurentPoly{}).empty());
}

TEST_CASE("content") {
  CHECK(content(P("2x+3")) == 1);
  CHECK(content(P("6x^2 + 9x^3")) == 3);
  CHECK(content(P("2x+2") * P("3+3x")) == 6);  // (2x+2)(3+3x) = 6x^2+12x+6
  CHECK((P("2x+2") * P("3+3x")) == P("6x^2+12x+6"));
  CHECK_THROWS_AS(content(LaurentPoly{}), std::domain_error);
}

TEST_CASE("normalize_min_zero") {
  auto [g1, s1] = normalize_min_zero(P("x^2 + x^5"));
  CHECK(g1 == P("1 + x^3"));
  CHECK(s1 == -2);
  auto [g2, s2] = normalize_min_zero(P("2x+3"));
  CHECK(g2 == P("2x+3"));
  CHECK(s2 == 0);
  auto [g3, s3] = normalize_min_zero(P("x^-1 + 1"));
  CHECK(g3 == P("1 + x"));
  CHECK(s3 == 1);
  CHECK_THROWS_AS(normalize_min_zero(LaurentPoly{}), std::domain_error);
}

TEST_CASE("isolani detection") {
  auto i1 = isolani_exponents(P("1 + x^2"));
  CHECK(i1.exponents == std::set<long long>{0, 2});
  CHECK(i1.has_leading);
  CHECK(i1.has_terminal);

  auto i2 = isolani_exponents(P("3 + x + 2x^2"));
  CHECK(i2.exponents.empty());
  CHECK_FALSE(i2.has_leading);
  CHECK_FALSE(i2.has_terminal);

  auto i3 = isolani_exponents(P("1 + x"));
  CHECK(i3.exponents.empty());

  // interior isolani without leading/terminal ones
  auto i4 = isolani_exponents(P("1 + x + x^3 + x^5 + x^6"));
  CHECK(i4.exponents == std::set<long long>{3});
  CHECK_FALSE(i4.has_leading);
  CHECK_FALSE(i4.has_terminal);
}

TEST_CASE("flatten") {
  CHECK(flatten(P("2x+3")) == P("x+1"));
  CHECK(flatten(P("6x^2+12x+6")) == P("x^2+x+1"));
  CHECK(flatten(LaurentPoly{}) == LaurentPoly{});
}

TEST_CASE("flatten is idempotent and preserves the support") {
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    LaurentPoly f = random_poly(rng, 6, 30, true);
    LaurentPoly fl = flatten(f);
    CHECK(flatten(fl) == fl);
    CHECK(log_set(fl) == log_set(f));
  }
}

TEST_CASE("eval_rational") {
  CHECK(eval_rational(P("2x+3"), Rat(1)) == 5);
  CHECK(eval_rational(P("x^-1"), Rat(1, 2)) == 2);
  CHECK(eval_rational(P("1 - 2x"), Rat(1, 2)) == 0);
}

TEST_CASE("strict positivity on an interval") {
  CHECK(strictly_positive_on_interval(P("6x - 1"), Rat(1, 3), Rat(2, 3)));
  CHECK_FALSE(strictly_positive_on_interval(P("1 - 2x"), Rat(1, 3), Rat(2, 3)));
  CHECK(strictly_positive_on_interval(P("x^2 + 1"), Rat(1, 3), Rat(2, 3)));
  // vanishing at an endpoint is not strict
  CHECK_FALSE(strictly_positive_on_interval(P("3x - 1"), Rat(1, 3), Rat(2, 3)));
  // a double root inside the interval touches zero
  CHECK_FALSE(strictly_positive_on_interval(P("4x^2 - 4x + 1"), Rat(1, 3), Rat(2, 3)));
  CHECK_THROWS_AS(strictly_positive_on_interval(P("1"), Rat(2, 3), Rat(1, 3)),
                  std::invalid_argument);
}

TEST_CASE("positivity decision agrees with a dense sign grid") {
  // one-sided oracle agreement: a grid value <= 0 forces a false verdict, and
  // a true verdict forces the fine grid positive
  Rng rng(7);
  const Rat a(1, 3), b(2, 3);
  int checked = 0;
  for (int i = 0; i < 100; ++i) {
    LaurentPoly f = random_poly(rng, 6, 9);
    if (f.is_zero()) continue;
    ++checked;
    bool verdict = strictly_positive_on_interval(f, a, b);
    bool grid_nonpositive = false;
    for (int j = 0; j <= 400; ++j) {
      Rat t = a + (b - a) * Rat(j, 400);
      if (eval_rational(f, t) <= 0) {
        grid_nonpositive = true;
        break;
      }
    }
    if (grid_nonpositive) CHECK_FALSE(verdict);
    if (verdict) CHECK_FALSE(grid_nonpositive);
  }
  CHECK(checked > 50);
}

TEST_CASE("Gauss lemma on random pairs") {
  Rng rng(42);
  for (int i = 0; i < 200; ++i) {
    LaurentPoly f = random_poly(rng, 8, 100, true);
    LaurentPoly g = random_poly(rng, 8, 100, true);
    if (f.is_zero() || g.is_zero()) continue;
    CHECK(content(f * g) == content(f) * content(g));
  }
}

TEST_CASE("supports under multiplication") {
  Rng rng(43);
  for (int i = 0; i < 100; ++i) {
    LaurentPoly f = random_poly(rng, 5, 20, true);
    LaurentPoly g = random_poly(rng, 5, 20, true);
    if (f.is_zero() || g.is_zero()) continue;
    auto prod_support = log_set(f * g);
    std::set<long long> minkowski;
    for (auto kf : log_set(f))
      for (auto kg : log_set(g)) minkowski.insert(kf + kg);
    for (auto k : prod_support) CHECK(minkowski.count(k) == 1);
    // equality for positive coefficients
    LaurentPoly fp = flatten(f), gp = flatten(g);
    CHECK(log_set(fp * gp) == minkowski);
  }
}

TEST_CASE("exact division") {
  LaurentPoly f = P("2x+3"), g = P("1+x^2");
  auto q = divide_exact(f * g, f);
  REQUIRE(q.has_value());
  CHECK(*q == g);
  CHECK_FALSE(divide_exact(P("x^2 + 1"), P("2x+3")).has_value());
  CHECK_FALSE(divide_exact(P("4x^2 + 2"), P("4x + 4")).has_value());
  // Laurent shifts divide out as well
  auto q2 = divide_exact(P("x^-1 + x"), P("x^-1"));
  REQUIRE(q2.has_value());
  CHECK(*q2 == P("1 + x^2"));
}

TEST_CASE("parser grammar") {
  CHECK(P("3 + 2x") == P("2*x^1 + 3"));
  CHECK(P("1 + x^3 + x^5").coeff(5) == 1);
  CHECK(P("x^-2").min_exp() == -2);
  CHECK(P("-x + 1") == P("1 - x"));
  CHECK(P("2 - 3x^2").coeff(2) == -3);
  CHECK_THROWS_AS(parse_poly("2x +"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("y + 1"), std::invalid_argument);
}

TEST_CASE("printer round-trips through the parser") {
  Rng rng(99);
  for (int i = 0; i < 100; ++i) {
    LaurentPoly f = random_poly(rng, 7, 50, true);
    CHECK(parse_poly(to_string(f)) == f);
  }
}

TEST_CASE("Sturm root counting") {
  // (x-1)(x-2)(x-3) has exactly two roots in (1/2, 5/2)
  RatPoly p({Rat(-6), Rat(11), Rat(-6), Rat(1)});
  CHECK(count_roots_in_open_interval(p, Rat(1, 2), Rat(5, 2)) == 2);
  CHECK(count_roots_in_open_interval(p, Rat(7, 2), Rat(9, 2)) == 0);
  // repeated roots are counted once
  RatPoly sq = p * p;
  CHECK(count_roots_in_open_interval(sq, Rat(1, 2), Rat(5, 2)) == 2);
}

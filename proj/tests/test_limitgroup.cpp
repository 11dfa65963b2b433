#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <thread>

#include "dgt/limit_element.hpp"
#include "dgt/matrix_system.hpp"

using namespace dgt;

namespace {

PolySequencePtr seq_of(const std::string& p) {
  return std::make_shared<const PolySequence>(PolySequence::constant(parse_poly(p)));
}

const PolySequencePtr k23 = seq_of("2x+3");

}  // namespace

TEST_CASE("sequence validation") {
  CHECK_THROWS_AS(PolySequence::constant(parse_poly("3")), std::invalid_argument);
  CHECK_THROWS_AS(PolySequence::constant(parse_poly("x - 1")), std::invalid_argument);
  CHECK_THROWS_AS(PolySequence({}, std::nullopt), std::invalid_argument);
}

TEST_CASE("q_product") {
  CHECK(k23->q_product(0) == LaurentPoly::one());
  CHECK(k23->q_product(2) == parse_poly("4x^2 + 12x + 9"));
  auto two = std::make_shared<const PolySequence>(
      PolySequence::finite({parse_poly("1+x^2"), parse_poly("1+x^4")}));
  CHECK(two->q_product(2) == parse_poly("1 + x^2 + x^4 + x^6"));
}

TEST_CASE("make_element support condition and canonical form") {
  CHECK_NOTHROW(make_element(k23, parse_poly("x"), 1));
  CHECK_THROWS_AS(make_element(k23, parse_poly("x^2"), 1), std::invalid_argument);
  LimitElement e = make_element(k23, parse_poly("2x+3"), 1);
  CHECK(e.stage() == 0);
  CHECK(e.numerator() == LaurentPoly::one());
  // zero canonicalizes to stage 0
  CHECK(make_element(k23, LaurentPoly{}, 3).stage() == 0);
}

TEST_CASE("elem_equal") {
  CHECK(elem_equal(make_element(k23, LaurentPoly::one(), 0),
                   make_element(k23, parse_poly("2x+3"), 1)));
  CHECK_FALSE(elem_equal(make_element(k23, parse_poly("x"), 1),
                         make_element(k23, LaurentPoly::one(), 1)));
  LimitElement f = make_element(k23, parse_poly("2x^2+3x"), 2);  // x * p_2 at stage 2
  CHECK(elem_equal(f, make_element(k23, parse_poly("x"), 1)));
}

TEST_CASE("is_positive: coefficientwise witness") {
  Verdict v = is_positive(make_element(k23, parse_poly("x"), 1));
  CHECK(v.is_true());
  REQUIRE(v.positive_cert.has_value());
  CHECK(v.positive_cert->stage == 1);
  CHECK(v.positive_cert->product == parse_poly("x"));
}

TEST_CASE("is_positive: endpoint trace refutation") {
  Verdict v = is_positive(make_element(k23, parse_poly("3 - 2x"), 1));
  CHECK(v.is_false());
  REQUIRE(v.trace_witness.has_value());
  CHECK(v.trace_witness->kind == TraceWitness::Kind::Infty);
  CHECK(v.trace_witness->value == Rat(-1));  // -2 / 2
}

TEST_CASE("is_positive: stabilization after multiplications") {
  // 1 - x + x^2 is positive on (0, inf); with entries 1+x the product
  // clears the negative coefficient after one step
  auto ones = seq_of("1+x");
  LimitElement e = make_element(ones, parse_poly("1 - x + x^2"), 2);
  // independent grid check that every point trace is positive
  for (const Rat& t : trace_probe_points()) CHECK(trace_point(e, t) > 0);
  Verdict v = is_positive(e);
  CHECK(v.is_true());
  REQUIRE(v.positive_cert.has_value());
  CHECK(v.positive_cert->stage == 3);
  CHECK(v.positive_cert->product.all_nonnegative());
  // certificate re-verifies: product equals f * p_3 exactly
  CHECK(v.positive_cert->product == parse_poly("1 - x + x^2") * parse_poly("1+x"));
}

TEST_CASE("is_positive is monotone in the cap") {
  auto ones = seq_of("1+x");
  LimitElement e = make_element(ones, parse_poly("1 - x + x^2"), 2);
  SearchCaps small{2, 16};  // cap below the stabilization stage
  Verdict v_small = is_positive(e, small);
  CHECK(v_small.value == Truth::Unknown);
  SearchCaps big{8, 16};
  CHECK(is_positive(e, big).is_true());
  // zero is positive with an empty certificate
  CHECK(is_positive(make_element(k23, LaurentPoly{}, 0)).is_true());
}

TEST_CASE("is_order_unit") {
  CHECK(is_order_unit(unit_element(k23)).is_true());
  // a vanishing endpoint trace blocks order-unit-ness exactly
  Verdict v = is_order_unit(make_element(k23, parse_poly("x"), 1));
  CHECK(v.is_false());
  REQUIRE(v.trace_witness.has_value());
  CHECK(v.trace_witness->kind == TraceWitness::Kind::Zero);
  CHECK(v.trace_witness->value == 0);
  // 1 + x is an order unit: m (1+x) - (2x+3) becomes nonnegative
  Verdict u = is_order_unit(make_element(k23, parse_poly("1+x"), 1), SearchCaps{8, 16});
  CHECK(u.is_true());
  REQUIRE(u.multiplier.has_value());
  Int m = *u.multiplier;
  Verdict re = is_positive(make_element(k23, parse_poly("1+x"), 1) * m - unit_element(k23),
                           SearchCaps{8, 16});
  CHECK(re.is_true());
}

TEST_CASE("trace evaluation") {
  CHECK(trace_point(unit_element(k23), Rat(7, 5)) == 1);
  LimitElement x1 = make_element(k23, parse_poly("x"), 1);
  CHECK(trace_point(x1, Rat(1)) == Rat(1, 5));
  CHECK(trace_zero(x1) == 0);
  CHECK(trace_infty(x1) == Rat(1, 2));
  CHECK(trace_zero(unit_element(k23)) == 1);
  CHECK(trace_infty(unit_element(k23)) == 1);
  // [2x+3, 1] collapses to the unit
  LimitElement u2 = make_element(k23, parse_poly("2x+3"), 1);
  CHECK(trace_zero(u2) == 1);
  CHECK(trace_infty(u2) == 1);
}

TEST_CASE("traces are representative independent") {
  Rng rng(5);
  for (int i = 0; i < 30; ++i) {
    LaurentPoly f;
    for (long long k = 0; k <= 2; ++k) {
      Int c = rng.uniform_int(-4, 4);
      if (c != 0) f.set(k, c);
    }
    LimitElement e(k23, f, 2);
    LimitElement lifted(k23, f * k23->entry(3), 3);
    CHECK(trace_point(e, Rat(2, 3)) == trace_point(lifted, Rat(2, 3)));
    CHECK(trace_zero(e) == trace_zero(lifted));
    CHECK(trace_infty(e) == trace_infty(lifted));
  }
}

TEST_CASE("endpoint trace ranges") {
  TraceRange z = trace_range_zero(*k23, 3);
  CHECK(z.multipliers == std::vector<Int>{3, 3, 3});
  CHECK(z.dense.has_value());
  CHECK(*z.dense);
  TraceRange inf = trace_range_infty(*k23, 3);
  CHECK(inf.multipliers == std::vector<Int>{2, 2, 2});
  CHECK(*inf.dense);

  auto ones = seq_of("1+x");
  TraceRange z1 = trace_range_zero(*ones, 4);
  CHECK(z1.multipliers == std::vector<Int>{1, 1, 1, 1});
  CHECK_FALSE(*z1.dense);

  auto alt = std::make_shared<const PolySequence>(PolySequence(
      {}, PolySequence::Periodic{{parse_poly("1+x"), parse_poly("2+2x")}}));
  TraceRange za = trace_range_zero(*alt, 4);
  CHECK(za.multipliers == std::vector<Int>{1, 2, 1, 2});
  CHECK(*za.dense);
}

TEST_CASE("endpoint traces are additive and positive on certified positives") {
  Rng rng(17);
  for (int i = 0; i < 30; ++i) {
    LaurentPoly f, g;
    for (long long k = 0; k <= 1; ++k) {
      f.set(k, rng.uniform_int(-5, 5));
      g.set(k, rng.uniform_int(-5, 5));
    }
    LimitElement ef(k23, f, 1), eg(k23, g, 1);
    CHECK(trace_zero(ef + eg) == trace_zero(ef) + trace_zero(eg));
    CHECK(trace_infty(ef + eg) == trace_infty(ef) + trace_infty(eg));
    if (is_positive(ef).is_true()) {
      CHECK(trace_zero(ef) >= 0);
      CHECK(trace_infty(ef) >= 0);
    }
  }
}

TEST_CASE("infinitesimal test certifies a trivial kernel") {
  CHECK(infinitesimal_test(make_element(k23, LaurentPoly{}, 2)));
  CHECK_FALSE(infinitesimal_test(make_element(k23, parse_poly("x"), 1)));
  LimitElement f = make_element(k23, parse_poly("1+x"), 1);
  CHECK(infinitesimal_test(f - f));
  CHECK(elem_equal(f - f, make_element(k23, LaurentPoly{}, 0)));
}

TEST_CASE("matrix limits") {
  IntMat a = {{1, 1}, {1, 2}};
  MatrixSystem sys({}, {a});

  SUBCASE("all-ones under strictly positive matrices") {
    MatrixSystem pos({}, {IntMat{{1, 1}, {1, 2}}});
    auto v = matrix_order_unit(pos, {1, 1}, 0, 10);
    CHECK(v.value == Truth::True);
    CHECK(v.cert->stage == 0);
  }
  SUBCASE("(1,-1) stays unresolved") {
    auto v = matrix_positive(sys, {1, -1}, 0, 12);
    CHECK(v.value == Truth::Unknown);
    CHECK(v.cap_reached == 12);
  }
  SUBCASE("zero vector") {
    CHECK(matrix_positive(sys, {0, 0}, 0, 4).value == Truth::True);
    CHECK(matrix_order_unit(sys, {0, 0}, 0, 4).value == Truth::False);
    CHECK(simplified_positive(sys, {0, 0}, 0, 4).value == Truth::True);
  }
  SUBCASE("eventual strict positivity") {
    // (2, -1) pushes to (1, 0) then (1, 1): order unit at stage 2
    auto v = matrix_order_unit(sys, {2, -1}, 0, 8);
    CHECK(v.value == Truth::True);
    CHECK(v.cert->stage == 2);
    CHECK(simplified_positive(sys, {2, -1}, 0, 8).value == Truth::True);
  }
}

TEST_CASE("matrix system validation and rescaling") {
  CHECK_THROWS_AS(MatrixSystem({IntMat{{1, -1}}}, {}), std::invalid_argument);
  MatrixSystem sys({}, {IntMat{{1, 1}, {1, 2}}});
  auto scaled = sys.divisible_rescale(2);
  CHECK(scaled.strict_ordering());
  CHECK(scaled.denominator_module() == 2);
  CHECK(scaled.divisible_rescale(3).denominator_module() == 6);
  CHECK_THROWS_AS(sys.divisible_rescale(1), std::invalid_argument);
  MatrixSystem zero_row({IntMat{{0, 0}, {1, 1}}}, {});
  CHECK_THROWS_AS(zero_row.require_no_zero_rows(), std::invalid_argument);
}

TEST_CASE("q_product cache is safe under concurrent readers") {
  auto seq = seq_of("2x+3");
  std::atomic<bool> ok{true};
  std::vector<std::thread> readers;
  for (int t = 0; t < 4; ++t) {
    readers.emplace_back([&] {
      for (int n = 0; n < 60; ++n) {
        const LaurentPoly& q = seq->q_product(static_cast<std::size_t>(n % 24));
        if (q.coeff(0) <= 0) ok = false;
      }
    });
  }
  for (auto& r : readers) r.join();
  CHECK(ok);
  LaurentPoly expect = LaurentPoly::one();
  for (int i = 0; i < 5; ++i) expect = expect * parse_poly("2x+3");
  CHECK(seq->q_product(5) == expect);
}

TEST_CASE("strictly positive matrices promote nonzero nonnegative vectors") {
  Rng rng(23);
  MatrixSystem pos({}, {IntMat{{2, 1}, {1, 3}}});
  for (int i = 0; i < 20; ++i) {
    IntVec g{rng.uniform_int(0, 5), rng.uniform_int(0, 5)};
    if (g[0] == 0 && g[1] == 0) continue;
    auto v = matrix_order_unit(pos, g, 0, 4);
    CHECK(v.value == Truth::True);
    CHECK(v.cert->stage <= 1);
  }
}

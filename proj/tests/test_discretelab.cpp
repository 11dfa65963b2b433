#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dgt/function_basis.hpp"
#include "dgt/lab.hpp"

using namespace dgt;

namespace {

constexpr double kPi = 3.14159265358979312;

SymbolicVector rational_vec(const SymbolBasisPtr& b, std::vector<long long> values) {
  std::vector<Rat> rs(values.begin(), values.end());
  return SymbolicVector::from_rationals(b, std::move(rs));
}

}  // namespace

TEST_CASE("z_rank") {
  auto b = SymbolBasis::rational({});
  CHECK(z_rank({rational_vec(b, {1, 0}), rational_vec(b, {0, 1})}) == 2);
  CHECK(z_rank({rational_vec(b, {1, 0}), rational_vec(b, {2, 0})}) == 1);
  auto ex = build_example_2_4(6, kPi);
  CHECK(z_rank(ex) == 6);
}

TEST_CASE("real_span_dim") {
  auto b = SymbolBasis::rational({});
  CHECK(real_span_dim({rational_vec(b, {1, 0}), rational_vec(b, {0, 1})}) == 2);

  auto t = SymbolBasis::transcendental({kPi});
  LinForm one{{Rat(1), Rat(0)}}, beta{{Rat(0), Rat(1)}};
  SymbolicVector v1(t, {one}), v2(t, {beta});
  CHECK(real_span_dim({v1, v2}) == 1);
  CHECK(z_rank({v1, v2}) == 2);

  CHECK(real_span_dim(build_example_2_4(6, kPi)) == 2);
}

TEST_CASE("is_discrete via the Kronecker criterion") {
  // coefficient vectors of {1, x, x^2} are independent: discrete
  auto b = SymbolBasis::rational({});
  std::vector<SymbolicVector> monomials;
  for (int i = 0; i < 3; ++i) {
    std::vector<long long> coords(3, 0);
    coords[static_cast<std::size_t>(i)] = 1;
    monomials.push_back(rational_vec(b, coords));
  }
  CHECK(is_discrete(monomials));

  auto t = SymbolBasis::transcendental({kPi});
  LinForm one{{Rat(1), Rat(0)}}, beta{{Rat(0), Rat(1)}};
  CHECK_FALSE(is_discrete({SymbolicVector(t, {one}), SymbolicVector(t, {beta})}));

  CHECK_FALSE(is_discrete(build_example_2_4(6, kPi)));
}

TEST_CASE("discreteness verdicts match brute-force small-vector search") {
  // discrete: brute force finds nothing below a fixed positive floor
  auto b = SymbolBasis::rational({});
  std::vector<SymbolicVector> lattice = {rational_vec(b, {1, 0}), rational_vec(b, {0, 1})};
  for (long long bound : {5LL, 10LL, 20LL})
    CHECK_FALSE(min_norm_witness(lattice, bound, 0.5).has_value());

  // non-discrete: witnesses appear at every tested threshold
  auto ex = build_example_2_4(6, kPi);
  for (double delta : {0.1, 0.01}) {
    auto w = min_norm_witness(ex, 20, delta);
    REQUIRE(w.has_value());
    CHECK(w->norm < delta);
    // the witness re-verifies against the shadows
    double x = 0, y = 0;
    for (std::size_t i = 0; i < ex.size(); ++i) {
      auto sh = ex[i].shadow();
      x += double(w->coefficients[i]) * sh[0];
      y += double(w->coefficients[i]) * sh[1];
    }
    CHECK(std::max(std::fabs(x), std::fabs(y)) == doctest::Approx(w->norm).epsilon(1e-9));
  }
}

TEST_CASE("rank caps") {
  auto ex = build_example_2_4(5, kPi);
  CHECK(z_rank(ex) <= ex.size());
  CHECK(real_span_dim(ex) <= std::min<std::size_t>(z_rank(ex), 2));
}

TEST_CASE("discrete_trace_witness") {
  auto ex = build_example_2_4(6, kPi);
  auto tw = discrete_trace_witness(ex, 1);
  CHECK(tw.discrete);
  CHECK(tw.generator == Rat(1, 32));

  auto b = SymbolBasis::rational({});
  auto tw2 = discrete_trace_witness({rational_vec(b, {1, 0}), rational_vec(b, {0, 1})}, 0);
  CHECK(tw2.discrete);
  CHECK(tw2.generator == 1);

  // irrational values: not inside any c*Z in the rationals
  auto tw3 = discrete_trace_witness(ex, 0);
  CHECK_FALSE(tw3.discrete);
}

TEST_CASE("density_check") {
  auto b = SymbolBasis::rational({});
  std::vector<SymbolicVector> lattice = {rational_vec(b, {1, 0}), rational_vec(b, {0, 1})};
  std::vector<std::pair<Rat, Rat>> box = {{Rat(0), Rat(1)}, {Rat(0), Rat(1)}};
  CHECK(density_check(lattice, box, Rat(2, 5), 3).dense);
  CHECK_FALSE(density_check(lattice, box, Rat(1, 25), 3).dense);

  auto t = SymbolBasis::transcendental({std::sqrt(2.0)});
  LinForm a{{Rat(1), Rat(0)}}, c{{Rat(0), Rat(1)}};
  SymbolicVector line(t, {a, c});  // (1, sqrt 2): a single generator
  CHECK_FALSE(density_check({line}, box, Rat(1, 20), 6).dense);
}

TEST_CASE("density of the planar example") {
  auto ex = build_example_2_4(6, kPi);
  std::vector<std::pair<Rat, Rat>> box = {{Rat(0), Rat(1)}, {Rat(0), Rat(1)}};
  CHECK(density_check(ex, box, Rat(1, 20), 12).dense);
}

TEST_CASE("verify_split") {
  auto t = SymbolBasis::transcendental({kPi});
  auto rv = [&](long long x, long long y) {
    return SymbolicVector::from_rationals(t, {Rat(x), Rat(y)});
  };
  LinForm beta{{Rat(0), Rat(1)}}, zero{{Rat(0), Rat(0)}}, one{{Rat(1), Rat(0)}};

  SUBCASE("H itself discrete: empty K") {
    std::vector<SymbolicVector> h = {rv(1, 0), rv(0, 1)};
    auto rep = verify_split(h, {}, h);
    CHECK(rep.generates);
    CHECK(rep.f_discrete);
    CHECK(rep.disjoint);
    CHECK(rep.valid);
  }
  SUBCASE("dense line plus a transversal lattice vector") {
    // K spans a dense subgroup of the x-axis, F = {(0,1)}
    SymbolicVector k1(t, {one, zero}), k2(t, {beta, zero});
    SymbolicVector f1 = rv(0, 1);
    std::vector<SymbolicVector> h = {k1, k2, f1};
    auto rep = verify_split(h, {k1, k2}, {f1});
    CHECK(rep.generates);
    CHECK(rep.f_discrete);
    CHECK(rep.disjoint);
    CHECK(rep.k_dense_in_span);
    CHECK(rep.valid);
  }
  SUBCASE("disjointness violation is reported") {
    SymbolicVector k1(t, {one, zero});
    auto rep = verify_split({k1}, {k1}, {k1});
    CHECK_FALSE(rep.disjoint);
    CHECK_FALSE(rep.valid);
  }
  SUBCASE("generation mismatch is reported") {
    auto rep = verify_split({rv(1, 0)}, {}, {rv(2, 0)});
    CHECK_FALSE(rep.generates);
    CHECK_FALSE(rep.valid);
  }
}

TEST_CASE("build_example_2_4 instances") {
  auto one_gen = build_example_2_4(1, kPi);
  REQUIRE(one_gen.size() == 1);
  auto sh = one_gen[0].shadow();
  CHECK(sh[0] == doctest::Approx(1.0));
  CHECK(sh[1] == doctest::Approx(1.0));

  auto three = build_example_2_4(3, kPi);
  auto s2 = three[2].shadow();
  CHECK(s2[0] == doctest::Approx(kPi * kPi));
  CHECK(s2[1] == doctest::Approx(0.25));

  CHECK_THROWS_AS(build_example_2_4(0, kPi), std::invalid_argument);
}

TEST_CASE("critical groups") {
  CHECK_THROWS_AS(build_critical(0, {}), std::invalid_argument);
  auto g1 = build_critical(1, {kPi});
  CHECK(z_rank(g1) == 2);
  CHECK(real_span_dim(g1) == 1);
  CHECK_FALSE(is_discrete(g1));

  auto g2 = build_critical(2, {kPi, 2.71828182845905});
  CHECK(z_rank(g2) == 3);
  CHECK(real_span_dim(g2) == 2);
}

TEST_CASE("antifd_m_check on the critical group") {
  auto g2 = build_critical(2, {kPi, 2.71828182845905});
  auto ok = antifd_m_check(g2, 2, 25);
  CHECK_FALSE(ok.refuted);
  CHECK(ok.samples_run >= 25);

  auto bad = antifd_m_check(g2, 3, 25);
  CHECK(bad.refuted);
  CHECK(bad.witness.size() == 3);

  // an honest lattice survives any m
  auto b = SymbolBasis::rational({});
  std::vector<SymbolicVector> z2 = {rational_vec(b, {1, 0}), rational_vec(b, {0, 1})};
  CHECK_FALSE(antifd_m_check(z2, 4, 25).refuted);
}

TEST_CASE("lemma42_constant") {
  Interval iv(Rat(1, 3), Rat(2, 3));
  SUBCASE("a single function gives its own sup floor") {
    auto k = lemma42_constant({RatPoly::constant(Rat(1))}, iv, 8, 17);
    REQUIRE(k.has_value());
    CHECK(*k == 1);  // the sphere is two points and the sup is exactly 1
  }
  SUBCASE("the pair {1, x}") {
    // 1-D calculus oracle: the minimum over the l1 sphere of
    // sup |l1 + l2 t| on [1/3, 2/3] is 1/9, attained at (1/3, -2/3)
    auto k = lemma42_constant({RatPoly::constant(Rat(1)), RatPoly({Rat(0), Rat(1)})}, iv, 200, 33);
    REQUIRE(k.has_value());
    CHECK(*k > 0);
    CHECK(*k <= Rat(1, 9));
    CHECK(*k > Rat(1, 20));  // the grid should land reasonably close
  }
  SUBCASE("dependent input rejected") {
    CHECK_THROWS_AS(lemma42_constant({RatPoly::constant(Rat(1)), RatPoly::constant(Rat(2))},
                                     iv, 8, 17),
                    std::invalid_argument);
  }
  SUBCASE("a too-coarse grid fails to certify rather than lying") {
    auto k = lemma42_constant({RatPoly::constant(Rat(1)), RatPoly({Rat(0), Rat(1)})}, iv, 2, 3);
    CHECK_FALSE(k.has_value());
  }
}

TEST_CASE("lemma42 bound certifies perturbation independence") {
  Interval iv(Rat(1, 3), Rat(2, 3));
  std::vector<RatPoly> fs = {RatPoly::constant(Rat(1)), RatPoly({Rat(0), Rat(1)})};
  auto k = lemma42_constant(fs, iv, 200, 33);
  REQUIRE(k.has_value());
  // the certified bound really is a lower bound on random sphere points
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    Rat l1 = rng.uniform_rat(-20, 20, 7);
    Rat l2 = rng.uniform_rat(-20, 20, 7);
    Rat norm1 = abs_rat(l1) + abs_rat(l2);
    if (norm1 == 0) continue;
    l1 /= norm1;
    l2 /= norm1;
    Rat sup = std::max(abs_rat(Rat(l1 + l2 * iv.lo)), abs_rat(Rat(l1 + l2 * iv.hi)));
    CHECK(sup >= *k);
  }
  // random polynomial perturbations with sup norm at most K/2 keep exact
  // linear independence of the family
  for (int i = 0; i < 50; ++i) {
    std::vector<RatPoly> perturbed;
    for (const auto& f : fs) {
      // a + bx scaled so that |a| + |b| stays below K/2: sup bound on [0,1]
      Rat a = rng.uniform_rat(-9, 9, 5), b = rng.uniform_rat(-9, 9, 5);
      Rat mass = abs_rat(a) + abs_rat(b);
      Rat scale = mass == 0 ? Rat(0) : *k / (Rat(4) * mass);
      RatPoly noise({Rat(a * scale), Rat(b * scale)});
      CHECK(sup_bound(noise, iv) <= *k / 2);
      perturbed.push_back(f + noise);
    }
    std::vector<std::vector<Rat>> rows;
    for (const auto& p : perturbed)
      rows.push_back({p.coeff(0), p.coeff(1)});
    CHECK(rational_rank(rows) == 2);
  }
}

TEST_CASE("approximate_in_span") {
  Interval iv(Rat(1, 3), Rat(2, 3));
  auto gens = monomial_generators(8);
  SUBCASE("integer constants are exact") {
    auto res = approximate_in_span(RatPoly::constant(Rat(2)), gens, iv, Rat(1, 20), Int(16));
    REQUIRE(res.has_value());
    CHECK(res->certified_error == 0);
    CHECK(res->coefficients[0] == 2);
  }
  SUBCASE("the constant 1/2 within 5 percent") {
    auto res = approximate_in_span(RatPoly::constant(Rat(1, 2)), gens, iv, Rat(1, 20), Int(64));
    REQUIRE(res.has_value());
    CHECK(res->certified_error <= Rat(1, 20));
    // re-verify on a fine independent grid
    Rat worst = 0;
    for (int j = 0; j <= 300; ++j) {
      Rat t = iv.lo + (iv.hi - iv.lo) * Rat(j, 300);
      worst = std::max(worst, abs_rat(Rat(res->combination.eval(t) - Rat(1, 2))));
    }
    CHECK(worst <= Rat(1, 20));
  }
  SUBCASE("intervals containing integers are rejected") {
    CHECK_THROWS_AS(approximate_in_span(RatPoly::constant(Rat(1, 2)), gens,
                                        Interval(Rat(1, 2), Rat(3, 2)), Rat(1, 20), Int(16)),
                    std::invalid_argument);
  }
  SUBCASE("failure reports the caps") {
    ApproximationFailure f;
    auto res = approximate_in_span(RatPoly::constant(Rat(1, 2)), monomial_generators(1), iv,
                                   Rat(1, 100), Int(2), &f);
    CHECK_FALSE(res.has_value());
    CHECK(f.height_cap == 2);
    CHECK(f.degree_cap == 2);
    CHECK(f.best_error > Rat(1, 100));
  }
}

TEST_CASE("interval helpers") {
  Interval iv(Rat(1, 3), Rat(2, 3));
  RatPoly p({Rat(1), Rat(-2)});  // 1 - 2x
  CHECK(sup_bound(p, iv) >= Rat(1, 3));
  CHECK(lipschitz_bound(p, iv) == 2);
  CHECK(iv.contains_integer() == false);
  CHECK(Interval(Rat(1, 2), Rat(3, 2)).contains_integer());
  CHECK(Interval(Rat(5, 2), Rat(17, 6)).contains_integer() == false);
}

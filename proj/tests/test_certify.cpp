#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dgt/certify.hpp"
#include "dgt/counterexample.hpp"
#include "dgt/lab.hpp"
#include "dgt/report.hpp"

using namespace dgt;

namespace {

PolySequencePtr seq_of(const std::string& p) {
  return std::make_shared<const PolySequence>(PolySequence::constant(parse_poly(p)));
}

PolySequencePtr with_prefix(const std::string& prefix, const std::string& period) {
  return std::make_shared<const PolySequence>(PolySequence(
      {parse_poly(prefix)}, PolySequence::Periodic{{parse_poly(period)}}));
}

}  // namespace

TEST_CASE("dagger condition") {
  auto d1 = check_dagger(*seq_of("2x+3"));
  CHECK(d1.terminal.holds);
  CHECK(d1.leading.holds);

  auto d2 = check_dagger(*seq_of("1+x"));
  CHECK_FALSE(d2.terminal.holds);
  CHECK_FALSE(d2.leading.holds);

  auto alt = std::make_shared<const PolySequence>(PolySequence(
      {}, PolySequence::Periodic{{parse_poly("1+2x"), parse_poly("2+x")}}));
  auto d3 = check_dagger(*alt);
  CHECK(d3.terminal.holds);
  CHECK(d3.leading.holds);
}

TEST_CASE("content condition") {
  CHECK(check_content_ae_one(*seq_of("2x+3")).holds);
  CHECK_FALSE(check_content_ae_one(*seq_of("2+2x")).holds);
  CHECK(check_content_ae_one(*with_prefix("2+2x", "2x+3")).holds);  // almost all
}

TEST_CASE("isolani and equal-log conditions") {
  CHECK(check_isolani_free(*seq_of("2x+3")).holds);
  CHECK(check_isolani_free(*seq_of("3 + x + 2x^2")).holds);
  CHECK_FALSE(check_isolani_free(*seq_of("1 + x^2")).holds);
  CHECK(check_equal_logs(*seq_of("2x+3")).holds);

  CHECK(check_projectively_faithful(parse_poly("2x+3")));
  CHECK_FALSE(check_projectively_faithful(parse_poly("1 + x^3")));
  CHECK(check_projectively_faithful(parse_poly("1 + x^3 + x^5")));
}

TEST_CASE("bifurcation") {
  SUBCASE("contents exceed one persistently") {
    Bifurcation b = bifurcate(*seq_of("4x+6"));
    CHECK(b.kind == Bifurcation::Kind::ProFd);
    REQUIRE(b.reduced.has_value());
    CHECK(b.reduced->entry(1) == parse_poly("2x+3"));
    CHECK(b.contents == std::vector<Int>{2});
    CHECK(b.rank1_multipliers == std::vector<Int>{2});
  }
  SUBCASE("content one gives the discreteness certificate") {
    Bifurcation b = bifurcate(*seq_of("2x+3"));
    CHECK(b.kind == Bifurcation::Kind::DiscreteFiniteRank);
  }
  SUBCASE("prefix exceptions do not trigger the factorization") {
    Bifurcation b = bifurcate(*with_prefix("4x+6", "2x+3"));
    CHECK(b.kind == Bifurcation::Kind::DiscreteFiniteRank);
  }
}

TEST_CASE("the four-condition verdict") {
  CertReport flagship = antifd_verdict(*seq_of("2x+3"));
  CHECK(flagship.classification == Classification::AntiFD);
  CHECK(flagship.terminal_coeff.holds);
  CHECK(flagship.leading_coeff.holds);
  CHECK(flagship.content_one.holds);
  CHECK((flagship.isolani_free.holds || flagship.equal_logs.holds));

  CertReport gicar = antifd_verdict(*seq_of("1+x"));
  CHECK(gicar.classification == Classification::Inconclusive);
  CHECK_FALSE(gicar.terminal_coeff.holds);
  CHECK_FALSE(gicar.leading_coeff.holds);
  CHECK(gicar.note.find("GICAR") != std::string::npos);

  CertReport profd = antifd_verdict(*seq_of("2+2x"));
  CHECK(profd.classification == Classification::ProFD);
}

TEST_CASE("the verdict and the bifurcation agree on condition (iii)") {
  for (const char* s : {"2x+3", "1+x", "2+2x", "3 + x + 2x^2", "4x+6"}) {
    CertReport r = antifd_verdict(*seq_of(s));
    Bifurcation b = bifurcate(*seq_of(s));
    if (r.classification == Classification::AntiFD)
      CHECK(b.kind == Bifurcation::Kind::DiscreteFiniteRank);
    CHECK(r.content_one.holds == (b.kind == Bifurcation::Kind::DiscreteFiniteRank));
  }
}

TEST_CASE("order-ideal conditions depend only on the supports") {
  // conditions (iv)(a) and (iv)(b) are invariant under flattening
  for (const char* s : {"2x+3", "1 + x^2", "3 + x + 2x^2", "1 + x^3 + x^5"}) {
    auto original = seq_of(s);
    auto flat = std::make_shared<const PolySequence>(
        PolySequence::constant(flatten(parse_poly(s))));
    CHECK(check_isolani_free(*original).holds == check_isolani_free(*flat).holds);
    CHECK(check_equal_logs(*original).holds == check_equal_logs(*flat).holds);
  }
}

TEST_CASE("monomial lattice membership") {
  auto k23 = seq_of("2x+3");
  CHECK(in_gn(make_element(k23, parse_poly("x"), 1), 1));
  // x/Q_2 is not in G_1
  CHECK_FALSE(in_gn(make_element(k23, parse_poly("x"), 2), 1));
  // elements of lower stage embed upward
  CHECK(in_gn(make_element(k23, parse_poly("x"), 1), 3));
  CHECK(in_gn(unit_element(k23), 0));

  auto coords = gn_coordinates(make_element(k23, parse_poly("x"), 1), 1);
  CHECK(coords == std::vector<Int>{0, 1});
  auto lifted = gn_coordinates(make_element(k23, parse_poly("x"), 1), 2);
  // x/Q_1 = x(2x+3)/Q_2 = (2x^2+3x)/Q_2
  CHECK(lifted == std::vector<Int>{0, 3, 2});

  auto content2 = seq_of("2+2x");
  CHECK_THROWS_AS(in_gn(make_element(content2, parse_poly("x"), 1), 1),
                  std::invalid_argument);
}

TEST_CASE("find_gn and purity") {
  auto k23 = seq_of("2x+3");
  std::vector<LimitElement> gens = {unit_element(k23),
                                    make_element(k23, parse_poly("x^2"), 2)};
  CHECK(find_gn(gens) == 2);
  std::vector<LimitElement> gens2 = {unit_element(k23),
                                     make_element(k23, parse_poly("x"), 2)};
  CHECK(find_gn(gens2) == 2);  // x/Q_2 does not reduce and is not in G_1

  LimitElement e = make_element(k23, parse_poly("x"), 1);
  CHECK(purity_check(e, 2, 1));
  CHECK_THROWS_AS(purity_check(e, 0, 1), std::invalid_argument);

  // the divisibility step: 2[x,1] lies in G_1 and so does [x,1]
  CHECK(in_gn(e * Int(2), 1));
  CHECK(in_gn(e, 1));
}

TEST_CASE("random finite sets land in a lattice that is exactly discrete") {
  auto k23 = seq_of("2x+3");
  Rng rng(31);
  auto basis = SymbolBasis::rational({});
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<LimitElement> set;
    for (int j = 0; j < 3; ++j) {
      std::size_t stage = static_cast<std::size_t>(rng.uniform(0, 4));
      const auto& q = k23->q_product(stage);
      LaurentPoly f;
      for (const auto& [k, c] : q.terms()) {
        Int v = rng.uniform_int(-3, 3);
        if (v != 0) f.set(k, v);
      }
      set.push_back(make_element(k23, f, stage));
    }
    std::size_t n = find_gn(set);
    std::vector<SymbolicVector> vectors;
    for (const auto& e : set) {
      auto coords = gn_coordinates(e, n);
      std::vector<Rat> rs(coords.begin(), coords.end());
      vectors.push_back(SymbolicVector::from_rationals(basis, std::move(rs)));
    }
    CHECK(is_discrete(vectors));
  }
}

TEST_CASE("gn discreteness witness") {
  auto k23 = seq_of("2x+3");
  auto w = gn_discreteness_witness(k23, 1);
  CHECK(w.stage == 1);
  REQUIRE(w.basis.size() == 2);
  CHECK(w.independent);
  CHECK(elem_equal(w.basis[0], make_element(k23, LaurentPoly::one(), 1)));
  CHECK(w.coefficient_vectors.size() == 2);

  auto w0 = gn_discreteness_witness(k23, 0);
  CHECK(w0.basis.size() == 1);

  auto sparse = seq_of("1 + x^2");
  auto w2 = gn_discreteness_witness(sparse, 1);
  CHECK(w2.basis.size() == 2);  // exponents {0, 2}
}

TEST_CASE("mixed counterexample models") {
  MixedModel q_model(MixedModelKind::Q);
  SUBCASE("q(1-2x) vanishes at one half") {
    MixedElement e;
    e.q_rational = 1;
    auto [a, b] = q_model.value_at(e, Rat(1, 2));
    CHECK(a == 0);
    CHECK(b == 0);
    CHECK_FALSE(q_model.strictly_positive(e));
  }
  SUBCASE("the unit is strictly positive") {
    MixedElement one;
    one.integer_part = LaurentPoly::one();
    CHECK(q_model.strictly_positive(one));
  }
  SUBCASE("divisibility probes") {
    for (Int n = 2; n <= 10; ++n) {
      CHECK(divisibility_probe(q_model, n));
      CHECK_FALSE(divisibility_probe(MixedModel(MixedModelKind::Sqrt2Z), n));
      CHECK(divisibility_probe(MixedModel(MixedModelKind::QSqrt2), n));
    }
  }
  SUBCASE("membership") {
    MixedElement e;
    e.q_rational = Rat(1, 3);
    CHECK(q_model.contains(e));
    e.q_sqrt2 = 1;
    CHECK_FALSE(q_model.contains(e));
    CHECK(MixedModel(MixedModelKind::QSqrt2).contains(e));
    e.q_rational = 0;
    e.q_sqrt2 = 3;
    CHECK(MixedModel(MixedModelKind::Sqrt2Z).contains(e));
    e.q_sqrt2 = Rat(1, 2);
    CHECK_FALSE(MixedModel(MixedModelKind::Sqrt2Z).contains(e));
  }
}

TEST_CASE("cone miss check") {
  for (auto kind : {MixedModelKind::Q, MixedModelKind::Sqrt2Z, MixedModelKind::QSqrt2}) {
    auto rep = positive_cone_miss_check(MixedModel(kind), 50);
    CHECK(rep.samples == 50);
    CHECK(rep.all_missed);
    CHECK(rep.unit_positive);
  }
}

TEST_CASE("condition profiles per variant") {
  auto q = condition_profile(MixedModel(MixedModelKind::Q));
  CHECK_FALSE(q.cond_a);
  CHECK(q.cond_b);

  auto s = condition_profile(MixedModel(MixedModelKind::Sqrt2Z));
  CHECK(s.cond_a);
  CHECK_FALSE(s.cond_b);

  auto qs = condition_profile(MixedModel(MixedModelKind::QSqrt2));
  CHECK_FALSE(qs.cond_a);
  CHECK_FALSE(qs.cond_b);
}

TEST_CASE("sign arithmetic with sqrt two") {
  CHECK(MixedModel::sign_with_sqrt2(Rat(1), Rat(0)) == 1);
  CHECK(MixedModel::sign_with_sqrt2(Rat(0), Rat(-2)) == -1);
  CHECK(MixedModel::sign_with_sqrt2(Rat(-3), Rat(2)) == -1);   // 2 sqrt2 < 3
  CHECK(MixedModel::sign_with_sqrt2(Rat(-2), Rat(2)) == 1);    // 2 sqrt2 > 2
  CHECK(MixedModel::sign_with_sqrt2(Rat(0), Rat(0)) == 0);
}

TEST_CASE("report serialization round-trips") {
  CertReport r = antifd_verdict(
      *std::make_shared<const PolySequence>(PolySequence::constant(parse_poly("2x+3"))));
  std::string text = serialize_cert_report(r);
  CertReport back = parse_cert_report(text);
  CHECK(cert_report_equal(r, back));

  CertReport inconclusive = antifd_verdict(
      *std::make_shared<const PolySequence>(PolySequence::constant(parse_poly("1+x"))));
  CHECK(cert_report_equal(inconclusive, parse_cert_report(serialize_cert_report(inconclusive))));
}

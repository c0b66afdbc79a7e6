#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gradedproj/magic.hpp"

using namespace gradedproj;

namespace {

RingHandle p1() {
  FgAbelianGroup z(1, {});
  return GradedRing::make(z, {"x", "y"}, {z.element({1}, {}), z.element({1}, {})}, {});
}

RingHandle weighted23() {
  FgAbelianGroup z(1, {});
  return GradedRing::make(z, {"x", "y"}, {z.element({2}, {}), z.element({3}, {})}, {});
}

HomogeneousElement elem(const RingHandle& r, const std::string& text) {
  Polynomial p = r->parse(text);
  Homogeneity h = r->homogeneity(p);
  REQUIRE(h.kind == Homogeneity::Kind::homogeneous);
  return {p, h.degree};
}

PotionElement frac(const SubmonoidHandle& s, const std::string& num, std::vector<unsigned> w) {
  const GradedRing& r = *s->ring();
  HomogeneousElement den = s->witness_product(w);
  return make_potion(s, den.degree, r.parse(num), std::move(w));
}

}  // namespace

TEST_CASE("potion generators on the projective line") {
  RingHandle a = p1();
  auto s = HomogeneousSubmonoid::make(a, {elem(a, "x")});
  auto t = HomogeneousSubmonoid::make(a, {elem(a, "y")});
  PotionGen g = find_potion_gen(s, t);
  REQUIRE(g.entries.size() == 1);
  CHECK(g.entries[0].n == 1);

  // e_y = y/x up to the chosen difference representation.
  std::vector<PotionElement> es = gen_submonoid_elements(g);
  REQUIRE(es.size() == 1);
  CHECK(potion_eq(es[0], frac(s, "y", {1})));
}

TEST_CASE("potion generators need a torsion quotient degreewise") {
  RingHandle w = weighted23();
  auto s = HomogeneousSubmonoid::make(w, {elem(w, "x")});
  auto t = HomogeneousSubmonoid::make(w, {elem(w, "y")});
  // deg y = 3, M[bar S] = 2Z, quotient Z/2: least n with n*3 in 2Z is 2.
  PotionGen g = find_potion_gen(s, t);
  REQUIRE(g.entries.size() == 1);
  CHECK(g.entries[0].n == 2);
  std::vector<PotionElement> es = gen_submonoid_elements(g);
  CHECK(potion_eq(es[0], frac(s, "y^2", {3})));

  // S must be relevant.
  FgAbelianGroup z2(2, {});
  RingHandle p = GradedRing::make(z2, {"x", "y"}, {z2.element({1, 0}, {}), z2.element({0, 1}, {})}, {});
  auto bad = HomogeneousSubmonoid::make(p, {elem(p, "x")});
  auto tp = HomogeneousSubmonoid::make(p, {elem(p, "y")});
  CHECK_THROWS_AS(find_potion_gen(bad, tp), std::invalid_argument);
}

TEST_CASE("localization equivalence round trips on P^1") {
  RingHandle a = p1();
  auto s = HomogeneousSubmonoid::make(a, {elem(a, "x")});
  auto t = HomogeneousSubmonoid::make(a, {elem(a, "y")});
  LocalizationEquiv eq(find_potion_gen(s, t));

  // forward(embed(u)) is the canonical map, and u = y/x maps to y/x in A_(xy).
  PotionElement u = frac(s, "y", {1});
  PotionElement fu = eq.forward(eq.embed(u));
  CHECK(potion_eq(fu, frac(eq.st(), "y", {1, 0})));

  // x/y over ST pulls back to 1/e_y: numerator 1 with denominator exponent 1.
  LocalizationElement back = eq.backward(frac(eq.st(), "x", {0, 1}));
  CHECK(back.denom_exps == std::vector<unsigned>{1});
  CHECK(eq.loc_eq(back, {potion_one(s), {1}}));
  CHECK(potion_eq(eq.forward(back), frac(eq.st(), "x", {0, 1})));

  Sampler rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    PotionElement q = rng.potion(eq.st());
    CHECK(potion_eq(eq.forward(eq.backward(q)), q));
    PotionElement p = rng.potion(s);
    LocalizationElement lp = eq.embed(p);
    CHECK(eq.loc_eq(eq.backward(eq.forward(lp)), lp));
  }
}

TEST_CASE("localization equivalence round trips, weighted") {
  RingHandle w = weighted23();
  auto s = HomogeneousSubmonoid::make(w, {elem(w, "x")});
  auto t = HomogeneousSubmonoid::make(w, {elem(w, "y")});
  LocalizationEquiv eq(find_potion_gen(s, t));
  REQUIRE(eq.potion_gen().entries[0].n == 2);
  CHECK(potion_eq(eq.loc_generators()[0], frac(s, "y^2", {3})));

  Sampler rng(9);
  for (int trial = 0; trial < 15; ++trial) {
    PotionElement q = rng.potion(eq.st());
    CHECK(potion_eq(eq.forward(eq.backward(q)), q));
    PotionElement p = rng.potion(s);
    LocalizationElement lp = eq.embed(p);
    CHECK(eq.loc_eq(eq.backward(eq.forward(lp)), lp));
  }

  // Multiplication commutes with forward.
  LocalizationElement a{frac(s, "y^2", {3}), {1}};
  LocalizationElement b{frac(s, "x", {1}), {0}};
  CHECK(potion_eq(eq.forward(eq.loc_mul(a, b)),
                  potion_mul(eq.forward(a), eq.forward(b))));
}

TEST_CASE("open immersion certificate") {
  RingHandle a = p1();
  auto s = HomogeneousSubmonoid::make(a, {elem(a, "x")});
  auto t = HomogeneousSubmonoid::make(a, {elem(a, "y")});
  OpenImmersionCertificate cert = open_immersion_certificate(s, t);
  CHECK(cert.verdict.find("localization") != std::string::npos);
  REQUIRE(cert.elements.size() == 1);
  CHECK(potion_eq(cert.elements[0], frac(s, "y", {1})));
}

TEST_CASE("sum cover compatibility") {
  RingHandle a = p1();
  SumCoverReport rep = sum_cover_check(a, {elem(a, "x"), elem(a, "y")}, 0, 10);
  CHECK(rep.ok);
  REQUIRE(rep.pairs.size() == 1);
  CHECK(rep.pairs[0].compatible);
  CHECK(rep.pairs[0].samples == 10);

  // Mixed degrees are a precondition failure, not a counterexample.
  RingHandle w = weighted23();
  SumCoverReport bad = sum_cover_check(w, {elem(w, "x"), elem(w, "y")}, 0, 5);
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.error.empty());
}

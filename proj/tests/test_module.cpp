#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gradedproj/graded_module.hpp"

using namespace gradedproj;

namespace {

RingHandle p1() {
  FgAbelianGroup z(1, {});
  return GradedRing::make(z, {"x", "y"}, {z.element({1}, {}), z.element({1}, {})}, {});
}

HomogeneousElement elem(const RingHandle& r, const std::string& text) {
  Polynomial p = r->parse(text);
  Homogeneity h = r->homogeneity(p);
  REQUIRE(h.kind == Homogeneity::Kind::homogeneous);
  return {p, h.degree};
}

SubmonoidHandle mono(const RingHandle& r, const std::string& text) {
  return HomogeneousSubmonoid::make(r, {elem(r, text)});
}

}  // namespace

TEST_CASE("shift bookkeeping") {
  RingHandle a = p1();
  const FgAbelianGroup& z = a->group();
  GroupElement one = z.element({1}, {});
  GradedModule q = GradedModule::make(a, {z.zero(), one}, {{a->parse("x"), a->parse("-1")}});

  CHECK(shift(q, z.zero()) == q);
  CHECK(shift(shift(q, one), z.neg(one)) == q);
  // A(1): the free rank-1 module with generator degree -1.
  GradedModule free1 = GradedModule::make(a, {z.zero()}, {});
  CHECK(shift(free1, one).gen_degrees()[0] == z.neg(one));

  // Degree-inconsistent relations are rejected.
  CHECK_THROWS_AS(GradedModule::make(a, {z.zero(), z.zero()}, {{a->parse("x"), a->parse("x^2")}}),
                  std::invalid_argument);
}

TEST_CASE("module potion equality with saturation") {
  RingHandle a = p1();
  const FgAbelianGroup& z = a->group();
  // Q = A/(x,y): one generator, relations x*e and y*e.
  GradedModule q = GradedModule::make(a, {z.zero()}, {{a->parse("x")}, {a->parse("y")}});
  SubmonoidHandle s = mono(a, "x");
  ModulePotionKernel kernel(q, s);

  // y/x: annihilated because x * y * e lies in the relation module.
  ModulePotionElement yx = make_module_potion(q, s, z.element({1}, {}), {a->parse("y")}, {1});
  CHECK(kernel.is_zero(yx));
  // Even 1/1 dies: x * 1 * e is a relation.
  ModulePotionElement one = make_module_potion(q, s, z.zero(), {a->parse("1")}, {0});
  CHECK(kernel.is_zero(one));
  CHECK(kernel.eq(yx, one));

  // In the free module the kernel agrees with potion_eq componentwise.
  GradedModule free2 = GradedModule::make(a, {z.zero(), z.zero()}, {});
  ModulePotionKernel fk(free2, s);
  Sampler rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    PotionElement p = rng.potion(s), r = rng.potion(s);
    Polynomial pn = p.rep.num.nvars() == 2 ? p.rep.num : Polynomial(2);
    Polynomial rn = r.rep.num.nvars() == 2 ? r.rep.num : Polynomial(2);
    ModulePotionElement mp = make_module_potion(free2, s, p.rep.deg, {pn, pn}, p.rep.den_witness);
    ModulePotionElement mr = make_module_potion(free2, s, r.rep.deg, {rn, rn}, r.rep.den_witness);
    CHECK(fk.eq(mp, mr) == potion_eq(p, r));
  }
}

TEST_CASE("twist generators") {
  RingHandle a = p1();
  const FgAbelianGroup& z = a->group();
  GroupElement one = z.element({1}, {});

  // P^1, S = <x>, alpha = 1: u = x/1.
  SubmonoidHandle s = mono(a, "x");
  TwistGenerator u = twist_generator(s, one);
  CHECK(u.num.poly == a->parse("x"));
  CHECK(u.den.poly == a->parse("1"));
  CHECK(z.sub(u.num.degree, u.den.degree) == one);

  // alpha = 0: u = 1.
  TwistGenerator triv = twist_generator(s, z.zero());
  CHECK(triv.num.poly == a->parse("1"));
  CHECK(triv.den.poly == a->parse("1"));

  // Weighted degrees 2 and 3, S = <x,y>, alpha = 1: u = y/x via 1 = 3 - 2.
  FgAbelianGroup zz(1, {});
  RingHandle w = GradedRing::make(zz, {"x", "y"}, {zz.element({2}, {}), zz.element({3}, {})}, {});
  SubmonoidHandle sw = HomogeneousSubmonoid::make(w, {elem(w, "x"), elem(w, "y")});
  TwistGenerator uw = twist_generator(sw, zz.element({1}, {}));
  CHECK(uw.num.poly == w->parse("y"));
  CHECK(uw.den.poly == w->parse("x"));
  // u is invertible in A_S: u * (den/num) = 1 on the nose.
  CHECK(uw.num.poly * uw.den.poly == uw.den.poly * uw.num.poly);

  // Maximal relevance is required: <x> alone only reaches 2Z.
  CHECK_THROWS_AS(twist_generator(mono(w, "x"), zz.element({1}, {})), std::invalid_argument);
}

TEST_CASE("negligibility over a family") {
  RingHandle a = p1();
  const FgAbelianGroup& z = a->group();
  RelevantFamily f = RelevantFamily::make(a, {mono(a, "x"), mono(a, "y")});

  GradedModule q = GradedModule::make(a, {z.zero()}, {{a->parse("x")}, {a->parse("y")}});
  NegligibilityReport rep = is_negligible_on_family(q, f);
  CHECK(rep.negligible);
  CHECK(rep.entries.size() == 2);
  CHECK(rep.entries[0].vanishes);
  CHECK(rep.entries[1].vanishes);

  GradedModule free1 = GradedModule::make(a, {z.zero()}, {});
  CHECK_FALSE(is_negligible_on_family(free1, f).negligible);

  GradedModule zero = GradedModule::make(a, {}, {});
  CHECK(is_negligible_on_family(zero, f).negligible);

  // Negligible over F stays negligible over a subfamily.
  RelevantFamily sub = RelevantFamily::make(a, {mono(a, "x")});
  CHECK(is_negligible_on_family(q, sub).negligible);
}

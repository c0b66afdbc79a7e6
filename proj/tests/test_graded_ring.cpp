#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gradedproj/graded_ring.hpp"

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

RingHandle mod2_line() {
  FgAbelianGroup g(0, {2});
  return GradedRing::make(g, {"x"}, {g.element({}, {1})}, {});
}

RingHandle cross() {
  FgAbelianGroup z(1, {});
  RingHandle r = GradedRing::make(z, {"x", "y"}, {z.element({1}, {}), z.element({1}, {})},
                                  {parse_polynomial("x*y", {"x", "y"})});
  return r;
}

}  // namespace

TEST_CASE("monomial degrees") {
  RingHandle a = p1();
  const FgAbelianGroup& z = a->group();
  CHECK(a->monomial_degree({2, 1}) == z.element({3}, {}));

  RingHandle w = weighted23();
  CHECK(w->monomial_degree({1, 1}) == z.element({5}, {}));
  CHECK(w->monomial_degree({3, 0}) == w->monomial_degree({0, 2}));

  RingHandle m = mod2_line();
  const FgAbelianGroup& z2 = m->group();
  CHECK(m->monomial_degree({3}) == z2.element({}, {1}));
  CHECK(m->monomial_degree({2}) == z2.zero());
}

TEST_CASE("homogeneity and components") {
  RingHandle a = p1();
  const FgAbelianGroup& z = a->group();
  Polynomial p = a->parse("x^2 + x*y");
  Homogeneity h = a->homogeneity(p);
  CHECK(h.kind == Homogeneity::Kind::homogeneous);
  CHECK(h.degree == z.element({2}, {}));

  Polynomial q = a->parse("x^2 + y");
  CHECK(a->homogeneity(q).kind == Homogeneity::Kind::mixed);
  CHECK(a->homogeneity(Polynomial(2)).kind == Homogeneity::Kind::zero);
  CHECK(a->is_homogeneous_of(Polynomial(2), z.element({7}, {})));
  CHECK_FALSE(a->is_homogeneous_of(q, z.element({2}, {})));

  auto comps = a->homogeneous_components(q);
  CHECK(comps.size() == 2);
  CHECK(comps.at(z.element({1}, {})).poly == a->parse("y"));
  CHECK(comps.at(z.element({2}, {})).poly == a->parse("x^2"));
  Polynomial sum(2);
  for (const auto& [d, c] : comps) sum = sum + c.poly;
  CHECK(sum == q);

  // In the Z/2-graded line x^3 and x are in the same component.
  RingHandle m = mod2_line();
  auto mc = m->homogeneous_components(m->parse("x^3 + x + x^2"));
  CHECK(mc.size() == 2);
  CHECK(mc.at(m->group().element({}, {1})).poly == m->parse("x^3 + x"));
}

TEST_CASE("quotient ring normal forms") {
  RingHandle c = cross();
  CHECK(c->is_zero_in_ring(c->parse("x*y")));
  CHECK(c->eq(c->parse("x*(x+y)"), c->parse("x^2")));
  CHECK_FALSE(c->eq(c->parse("x"), c->parse("y")));
  CHECK(c->normal_form(c->parse("x^2*y + x")) == c->parse("x"));

  // Ideal generators must be homogeneous.
  FgAbelianGroup z(1, {});
  CHECK_THROWS_AS(GradedRing::make(z, {"x", "y"}, {z.element({1}, {}), z.element({1}, {})},
                                   {parse_polynomial("x + y^2", {"x", "y"})}),
                  std::invalid_argument);
}

TEST_CASE("monomial enumeration by degree") {
  RingHandle a = p1();
  const FgAbelianGroup& z = a->group();
  auto ms = a->monomials_of_degree(z.element({2}, {}), 12);
  CHECK(ms.size() == 3);

  RingHandle w = weighted23();
  auto w6 = w->monomials_of_degree(z.element({6}, {}), 12);
  CHECK(w6 == std::vector<Monomial>{{0, 2}, {3, 0}});
  CHECK(w->monomials_of_degree(z.element({1}, {}), 12).empty());
  // Degree bound cuts the list.
  CHECK(w->monomials_of_degree(z.element({6}, {}), 2).size() == 1);

  RingHandle m = mod2_line();
  auto odd = m->monomials_of_degree(m->group().element({}, {1}), 5);
  CHECK(odd == std::vector<Monomial>{{1}, {3}, {5}});
}

TEST_CASE("graded homomorphisms") {
  RingHandle a = p1();
  FgAbelianGroup z(1, {});
  RingHandle line = GradedRing::make(z, {"x", "y"}, {z.element({1}, {}), z.element({1}, {})},
                                     {parse_polynomial("y", {"x", "y"})});

  GradedRingHom pi = GradedRingHom::make(a, line, {line->parse("x"), line->parse("y")});
  CHECK(line->is_zero_in_ring(pi.apply(a->parse("y^2 + x*y"))));
  CHECK(line->eq(pi.apply(a->parse("x^2 + y")), line->parse("x^2")));

  GradedRingHom id = GradedRingHom::identity(a);
  GradedRingHom both = pi.compose_after(id);
  CHECK(line->eq(both.apply(a->parse("x + y")), line->parse("x")));

  // Image degree mismatch is rejected.
  RingHandle w = weighted23();
  CHECK_THROWS_AS(GradedRingHom::make(w, a, {a->parse("x"), a->parse("y")}),
                  std::invalid_argument);
  // Ideal must map into the ideal.
  RingHandle c = cross();
  CHECK_THROWS_AS(GradedRingHom::make(c, a, {a->parse("x"), a->parse("y")}),
                  std::invalid_argument);
  GradedRingHom ok = GradedRingHom::make(c, line, {line->parse("x"), line->parse("y")});
  CHECK(line->is_zero_in_ring(ok.apply(c->parse("x*y"))));
}

TEST_CASE("presentation comparison") {
  CHECK(p1()->same_presentation(*p1()));
  CHECK_FALSE(p1()->same_presentation(*weighted23()));
  CHECK_FALSE(p1()->same_presentation(*cross()));
}

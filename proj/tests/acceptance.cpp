// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "gradedproj/graded_module.hpp"
#include "gradedproj/report.hpp"

using namespace gradedproj;

namespace {

int failures = 0;

void verdict(int n, const std::string& what, bool ok) {
  std::cout << "criterion " << n << " (" << what << "): " << (ok ? "PASS" : "FAIL") << "\n";
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool snf_valid(const IntMatrix& a, const SmithDecomposition& s) {
  if (!(s.u * a * s.v == s.d)) return false;
  if (int_abs(s.u.determinant()) != 1 || int_abs(s.v.determinant()) != 1) return false;
  const std::size_t steps = std::min(a.rows(), a.cols());
  for (std::size_t i = 0; i + 1 < steps; ++i) {
    if (s.d.at(i, i) < 0) return false;
    if (s.d.at(i, i) != 0 && s.d.at(i + 1, i + 1) % s.d.at(i, i) != 0) return false;
    if (s.d.at(i, i) == 0 && s.d.at(i + 1, i + 1) != 0) return false;
  }
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j && s.d.at(i, j) != 0) return false;
  return true;
}

// Brute-force torsion-quotient oracle over a bounded coefficient span.
bool torsion_oracle(const FgAbelianGroup& g, const std::vector<GroupElement>& gens,
                    int bound = 12) {
  std::set<GroupElement> span;
  std::vector<int> coeff(gens.size(), -bound);
  for (;;) {
    GroupElement acc = g.zero();
    for (std::size_t i = 0; i < gens.size(); ++i)
      acc = g.add(acc, g.scale(coeff[i], gens[i]));
    span.insert(acc);
    std::size_t i = 0;
    while (i < gens.size() && coeff[i] == bound) coeff[i++] = -bound;
    if (i == gens.size()) break;
    ++coeff[i];
  }
  for (std::size_t v = 0; v < g.dim(); ++v) {
    std::vector<Int> coords(g.dim(), Int(0));
    coords[v] = 1;
    GroupElement m = g.element(coords);
    bool ok = false;
    for (int n = 1; n <= 60 && !ok; ++n)
      if (span.count(g.scale(n, m))) ok = true;
    if (!ok) return false;
  }
  return true;
}

HomogeneousElement elem(const RingHandle& r, const std::string& text) {
  Polynomial p = r->parse(text);
  Homogeneity h = r->homogeneity(p);
  if (h.kind != Homogeneity::Kind::homogeneous) throw std::logic_error("inhomogeneous element");
  return {p, h.degree};
}

SubmonoidHandle mono(const RingHandle& r, const std::string& text) {
  return HomogeneousSubmonoid::make(r, {elem(r, text)});
}

PotionElement frac(const SubmonoidHandle& s, const std::string& num, std::vector<unsigned> w) {
  HomogeneousElement den = s->witness_product(w);
  return make_potion(s, den.degree, s->ring()->parse(num), std::move(w));
}

RingHandle ring_p1() {
  FgAbelianGroup z(1, {});
  return GradedRing::make(z, {"x", "y"}, {z.element({1}, {}), z.element({1}, {})}, {});
}

RingHandle ring_weighted() {
  FgAbelianGroup z(1, {});
  return GradedRing::make(z, {"x", "y"}, {z.element({2}, {}), z.element({3}, {})}, {});
}

RingHandle ring_p1xp1() {
  FgAbelianGroup z2(2, {});
  return GradedRing::make(z2, {"x0", "x1", "y0", "y1"},
                          {z2.element({1, 0}, {}), z2.element({1, 0}, {}),
                           z2.element({0, 1}, {}), z2.element({0, 1}, {})},
                          {});
}

RingHandle ring_mod2() {
  FgAbelianGroup g(0, {2});
  return GradedRing::make(g, {"x"}, {g.element({}, {1})}, {});
}

RingHandle ring_cross() {
  FgAbelianGroup z(1, {});
  return GradedRing::make(z, {"x", "y"}, {z.element({1}, {}), z.element({1}, {})},
                          {parse_polynomial("x*y", {"x", "y"})});
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void criterion_1() {
  auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> dim(1, 4), entry(-5, 5);
  bool ok = true;
  for (int trial = 0; trial < 200 && ok; ++trial) {
    IntMatrix a(dim(rng), dim(rng));
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) a.at(i, j) = entry(rng);
    if (!snf_valid(a, smith_normal_form(a))) ok = false;
  }
  ok = ok && seconds_since(start) < 5.0;
  verdict(1, "Smith normal form, 200 random matrices under 5s", ok);
}

void criterion_2() {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> rank(0, 2), ngens(0, 3), entry(-3, 3), pick(0, 2);
  const std::vector<std::vector<Int>> torsion_options = {{}, {2}, {2, 4}, {3}};
  std::uniform_int_distribution<std::size_t> topt(0, torsion_options.size() - 1);
  bool ok = true;
  for (int trial = 0; trial < 50 && ok; ++trial) {
    FgAbelianGroup g(rank(rng), torsion_options[topt(rng)]);
    std::vector<GroupElement> gens;
    int count = ngens(rng);
    for (int i = 0; i < count; ++i) {
      std::vector<Int> coords(g.dim());
      for (Int& c : coords) c = entry(rng);
      gens.push_back(g.element(coords));
    }
    bool fast = is_torsion_quotient({g, gens});
    if (fast != torsion_oracle(g, gens)) ok = false;
  }
  verdict(2, "relevance decision matches the brute-force oracle on 50 instances", ok);
}

void criterion_3() {
  struct Example {
    RingHandle ring;
    SubmonoidHandle sub;
  };
  std::vector<Example> examples;
  examples.push_back({ring_p1(), mono(ring_p1(), "x")});
  {
    RingHandle w = ring_weighted();
    examples.push_back({w, HomogeneousSubmonoid::make(w, {elem(w, "x"), elem(w, "y")})});
  }
  examples.push_back({ring_p1xp1(), mono(ring_p1xp1(), "x0*y0")});
  examples.push_back({ring_mod2(), mono(ring_mod2(), "x")});
  examples.push_back({ring_cross(), mono(ring_cross(), "x")});

  bool ok = true;
  for (const Example& ex : examples) {
    Sampler rng(1);
    for (int trial = 0; trial < 100 && ok; ++trial) {
      PotionElement p = rng.potion(ex.sub), q = rng.potion(ex.sub), r = rng.potion(ex.sub);
      if (!potion_eq(p, p)) ok = false;
      if (potion_eq(p, q) != potion_eq(q, p)) ok = false;
      if (!potion_eq(potion_add(p, q), potion_add(q, p))) ok = false;
      if (!potion_eq(potion_mul(p, q), potion_mul(q, p))) ok = false;
      if (!potion_eq(potion_mul(potion_mul(p, q), r), potion_mul(p, potion_mul(q, r)))) ok = false;
      if (!potion_eq(potion_mul(p, potion_add(q, r)),
                     potion_add(potion_mul(p, q), potion_mul(p, r))))
        ok = false;
      if (!potion_is_zero(potion_add(p, potion_neg(p)))) ok = false;
      if (!potion_eq(potion_mul(p, potion_one(ex.sub)), p)) ok = false;
    }
  }
  verdict(3, "potion ring axioms, 100 random triples per example ring", ok);
}

void criterion_4() {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  for (const RingHandle& r : {ring_p1(), ring_weighted()}) {
    SubmonoidHandle s = mono(r, "x"), t = mono(r, "y");
    LocalizationEquiv eq(find_potion_gen(s, t));
    Sampler rng(0);
    for (int trial = 0; trial < 20 && ok; ++trial) {
      PotionElement q = rng.potion(eq.st());
      if (!potion_eq(eq.forward(eq.backward(q)), q)) ok = false;
      LocalizationElement lp = eq.embed(rng.potion(s));
      if (!eq.loc_eq(eq.backward(eq.forward(lp)), lp)) ok = false;
    }
  }
  ok = ok && seconds_since(start) < 10.0;
  verdict(4, "localization equivalence round trips under 10s", ok);
}

void criterion_5() {
  bool ok = true;

  RingHandle a = ring_p1();
  RelevantFamily fa = RelevantFamily::make(a, {mono(a, "x"), mono(a, "y")});
  ChartAtlas atlas = build_atlas(fa, 0, 10);
  ok = ok && atlas.ok && atlas.overlaps.size() == 2;
  ok = ok && atlas.overlaps[0].cert.elements.size() == 1 &&
       potion_eq(atlas.overlaps[0].cert.elements[0], frac(fa.members[0], "y", {1}));

  RingHandle r = ring_p1xp1();
  std::vector<SubmonoidHandle> members;
  for (const char* g : {"x0*y0", "x0*y1", "x1*y0", "x1*y1"}) members.push_back(mono(r, g));
  ChartAtlas big = build_atlas(RelevantFamily::make(r, members), 0, 6);
  ok = ok && big.ok && big.family.members.size() == 4 && big.overlaps.size() == 12 &&
       big.cocycles.size() == 4;
  for (const TripleVerdict& t : big.cocycles) ok = ok && t.ok;

  FgAbelianGroup z(1, {});
  RingHandle left = GradedRing::make(z, {"x0", "x1"}, {z.element({1}, {}), z.element({1}, {})}, {});
  RingHandle right = GradedRing::make(z, {"y0", "y1"}, {z.element({1}, {}), z.element({1}, {})}, {});
  ProductGrading pg(left, right);
  ProductChartResult pr = product_chart_check(pg, mono(left, "x0"), mono(right, "y0"), 0, 10);
  ok = ok && pr.verdict == "pass";

  verdict(5, "atlas reproduction and the product chart claim", ok);
}

void criterion_6() {
  RingHandle a = ring_p1();
  FgAbelianGroup z(1, {});
  RingHandle line = GradedRing::make(z, {"x", "y"}, {z.element({1}, {}), z.element({1}, {})},
                                     {parse_polynomial("y", {"x", "y"})});
  GradedRingHom pi = GradedRingHom::make(a, line, {line->parse("x"), line->parse("y")});
  bool ok = closed_immersion_check(pi, mono(a, "x"), 0, 20, 12).verdict == "surjective" &&
            closed_immersion_check(pi, mono(a, "y"), 0, 20, 12).verdict == "surjective";
  verdict(6, "closed-immersion lifts within degree bound 12 on both charts", ok);
}

void criterion_7() {
  bool ok = true;
  RingHandle a = ring_p1();
  const FgAbelianGroup& z = a->group();
  TwistGenerator u = twist_generator(mono(a, "x"), z.element({1}, {}));
  ok = ok && u.num.poly == a->parse("x") && u.den.poly == a->parse("1");

  RingHandle w = ring_weighted();
  SubmonoidHandle sw = HomogeneousSubmonoid::make(w, {elem(w, "x"), elem(w, "y")});
  TwistGenerator uw = twist_generator(sw, w->group().element({1}, {}));
  ok = ok && uw.num.poly == w->parse("y") && uw.den.poly == w->parse("x");
  ok = ok && w->group().sub(uw.num.degree, uw.den.degree) == w->group().element({1}, {});
  // Inverses: u * u^-1 = 1 at the fraction level (num*den' = den*num').
  ok = ok && uw.num.poly * uw.den.poly == uw.den.poly * uw.num.poly;
  verdict(7, "twist generators with verified inverses", ok);
}

void criterion_8() {
  RingHandle a = ring_p1();
  const FgAbelianGroup& z = a->group();
  RelevantFamily f = RelevantFamily::make(a, {mono(a, "x"), mono(a, "y")});
  GradedModule q = GradedModule::make(a, {z.zero()}, {{a->parse("x")}, {a->parse("y")}});
  GradedModule free1 = GradedModule::make(a, {z.zero()}, {});
  bool ok = is_negligible_on_family(q, f).negligible &&
            !is_negligible_on_family(free1, f).negligible;
  verdict(8, "negligibility of A/(x,y) and non-negligibility of A", ok);
}

void criterion_9() {
  bool ok = true;
  std::vector<SubmonoidHandle> subs;
  subs.push_back(mono(ring_p1(), "x"));
  {
    RingHandle w = ring_weighted();
    subs.push_back(HomogeneousSubmonoid::make(w, {elem(w, "x"), elem(w, "y")}));
  }
  subs.push_back(mono(ring_p1xp1(), "x0*y0"));
  subs.push_back(mono(ring_mod2(), "x"));
  subs.push_back(mono(ring_cross(), "x"));
  for (const SubmonoidHandle& s : subs) {
    if (!potion_is_zero(potion_mul(potion_zero(s), potion_one(s)))) ok = false;
    if (potion_eq(potion_one(s), potion_zero(s))) ok = false;
  }
  verdict(9, "0 * 1 = 0 in every example potion ring", ok);
}

void criterion_10() {
  const std::string dir = GRADEDPROJ_CORPUS_DIR;
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"p1-relevance.json", "check-relevance"}, {"z2-not-relevant.json", "check-relevance"},
      {"mod2-relevance.json", "check-relevance"}, {"p1-potion-eq.json", "potion-eq"},
      {"cross-potion-eq.json", "potion-eq"},     {"p1-magic2.json", "magic2"},
      {"weighted-magic2.json", "magic2"},        {"p1-magic4.json", "magic4"},
      {"p1-atlas.json", "atlas"},                {"p1xp1-atlas.json", "atlas"},
      {"p1-functorial.json", "functorial"},      {"p1-closed-immersion.json", "closed-immersion"},
      {"p1xp1-product-check.json", "product-check"}, {"p1-twist.json", "twist"},
      {"weighted-twist.json", "twist"},          {"p1-negligible.json", "negligible"},
      {"p1-free-not-negligible.json", "negligible"}};
  bool ok = true;
  for (const auto& [file, command] : cases) {
    std::string text = slurp(dir + "/" + file);
    Report first = run_command(command, parse_problem(text));
    Report second = run_command(command, parse_problem(text));
    if (first.machine.dump(2) != second.machine.dump(2)) ok = false;
    if (first.exit_code != second.exit_code) ok = false;
  }
  verdict(10, "byte-identical machine reports across two runs of the corpus", ok);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  std::cout << (failures == 0 ? "all criteria passed" : "some criteria FAILED") << "\n";
  return failures == 0 ? 0 : 1;
}

#include "gradedproj/atlas.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gradedproj {

namespace {

Polynomial lift_nvars(const Polynomial& p, std::size_t nvars) {
  if (p.nvars() == nvars) return p;
  if (p.is_zero()) return Polynomial(nvars);
  throw std::logic_error("polynomial variable count mismatch");
}

}  // namespace

RelevantFamily RelevantFamily::make(RingHandle ring, std::vector<SubmonoidHandle> members) {
  for (const SubmonoidHandle& m : members) {
    if (!m) throw std::invalid_argument("family member is null");
    if (m->ring().get() != ring.get() && !m->ring()->same_presentation(*ring))
      throw std::invalid_argument("family member lives over a different ring");
    if (!is_relevant(*m)) throw std::invalid_argument("family member is not relevant");
  }
  return {std::move(ring), std::move(members)};
}

ChartAtlas build_atlas(const RelevantFamily& f, std::uint64_t seed, unsigned samples) {
  ChartAtlas atlas;
  atlas.family = f;
  atlas.seed = seed;
  const std::size_t n = f.members.size();

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      atlas.overlaps.push_back({i, j, open_immersion_certificate(f.members[i], f.members[j])});
    }

  // SS = S and ST = TS, realized by generator-matching equivalences and
  // checked by round trips on samples.
  bool symmetry = true;
  const unsigned sym_samples = std::max(1u, samples / 4);
  for (std::size_t i = 0; i < n && symmetry; ++i) {
    SubmonoidHandle ss = product(f.members[i], f.members[i]).sub;
    PotionEquiv eq = PotionEquiv::from_matching(f.members[i], ss);
    Sampler rng(seed + 17 * i + 1);
    for (unsigned k = 0; k < sym_samples; ++k) {
      PotionElement p = rng.potion(f.members[i]);
      if (!potion_eq(eq.backward(eq.forward(p)), p)) symmetry = false;
    }
  }
  for (std::size_t i = 0; i < n && symmetry; ++i)
    for (std::size_t j = i + 1; j < n && symmetry; ++j) {
      SubmonoidHandle st = product(f.members[i], f.members[j]).sub;
      SubmonoidHandle ts = product(f.members[j], f.members[i]).sub;
      PotionEquiv eq = PotionEquiv::from_matching(st, ts);
      Sampler rng(seed + 101 * i + j + 2);
      for (unsigned k = 0; k < sym_samples; ++k) {
        PotionElement p = rng.potion(st);
        if (!potion_eq(eq.backward(eq.forward(p)), p)) symmetry = false;
        PotionElement q = rng.potion(ts);
        if (!potion_eq(eq.forward(eq.backward(q)), q)) symmetry = false;
      }
    }
  atlas.symmetry_ok = symmetry;

  // Triple condition: the two composites A_(S) -> A_(ST) -> A_(STU) and
  // A_(S) -> A_(SU) -> A_(STU) agree.
  bool all_triples = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        SubmonoidHandle stu = product_many({f.members[i], f.members[j], f.members[k]}).sub;
        SubmonoidHandle st = product(f.members[i], f.members[j]).sub;
        SubmonoidHandle su = product(f.members[i], f.members[k]).sub;
        Sampler rng(seed + 10007 * i + 103 * j + k + 3);
        bool ok = true;
        for (unsigned m = 0; m < samples; ++m) {
          PotionElement a = rng.potion(f.members[i]);
          PotionElement via_st = potion_map(potion_map(a, st), stu);
          PotionElement via_su = potion_map(potion_map(a, su), stu);
          if (!potion_eq(via_st, via_su)) {
            ok = false;
            break;
          }
        }
        atlas.cocycles.push_back({i, j, k, ok, samples});
        all_triples = all_triples && ok;
      }

  atlas.ok = symmetry && all_triples;
  return atlas;
}

SubmonoidHandle map_submonoid(const GradedRingHom& psi, const HomogeneousSubmonoid& sub) {
  const RingHandle& target = psi.target();
  std::vector<HomogeneousElement> gens;
  std::vector<std::optional<Factorization>> facts;
  for (std::size_t i = 0; i < sub.generators().size(); ++i) {
    const HomogeneousElement& g = sub.generators()[i];
    Polynomial image = substitute(lift_nvars(g.poly, psi.source()->nvars()), psi.images());
    if (target->is_zero_in_ring(image))
      throw std::invalid_argument("submonoid generator maps to zero");
    gens.push_back({image, g.degree});
    Factorization f = sub.factorizations()[i];
    for (FactorPower& fp : f.factors) fp.factor = substitute(fp.factor, psi.images());
    facts.push_back(std::move(f));
  }
  return HomogeneousSubmonoid::make(target, std::move(gens), std::move(facts));
}

PotionElement map_potion(const GradedRingHom& psi, const SubmonoidHandle& image,
                         const PotionElement& a) {
  Polynomial num = substitute(lift_nvars(a.rep.num, psi.source()->nvars()), psi.images());
  return make_potion(image, a.rep.deg, std::move(num), a.rep.den_witness);
}

FunctorialityReport functoriality_map(const GradedRingHom& psi, const RelevantFamily& f,
                                      std::uint64_t seed, unsigned samples) {
  FunctorialityReport report;
  report.seed = seed;
  const std::size_t n = f.members.size();
  report.entries.resize(n);

  for (std::size_t i = 0; i < n; ++i) {
    FunctorialityEntry& e = report.entries[i];
    e.member = i;
    try {
      e.image = map_submonoid(psi, *f.members[i]);
    } catch (const std::invalid_argument& err) {
      e.warning = err.what();
      continue;
    }
    if (!is_relevant(*e.image)) {
      e.image = nullptr;
      e.warning = "image submonoid is not relevant";
      continue;
    }
    e.ok = true;
  }

  // Compatibility with the overlap maps: psi commutes with the canonical
  // maps into the pairwise products, on samples.
  bool all_ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    FunctorialityEntry& e = report.entries[i];
    if (!e.ok) continue;
    bool compatible = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !report.entries[j].ok) continue;
      SubmonoidHandle st = product(f.members[i], f.members[j]).sub;
      SubmonoidHandle psi_st = map_submonoid(psi, *st);
      Sampler rng(seed + 1009 * i + j + 4);
      const unsigned pair_samples = std::max(1u, samples / 4);
      for (unsigned m = 0; m < pair_samples; ++m) {
        PotionElement a = rng.potion(f.members[i]);
        PotionElement via_target = potion_map(map_potion(psi, e.image, a), psi_st);
        PotionElement via_source = map_potion(psi, psi_st, potion_map(a, st));
        if (!potion_eq(via_target, via_source)) compatible = false;
      }
    }
    e.overlaps_compatible = compatible;
    all_ok = all_ok && compatible;
  }
  report.ok = all_ok;
  return report;
}

ClosedImmersionResult closed_immersion_check(const GradedRingHom& psi, const SubmonoidHandle& s,
                                             std::uint64_t seed, unsigned samples,
                                             unsigned degree_bound) {
  const GradedRing& source = *psi.source();
  const GradedRing& target = *psi.target();
  for (std::size_t v = 0; v < target.nvars(); ++v) {
    Polynomial var = Polynomial::variable(target.nvars(), v);
    bool declared = false;
    for (const Polynomial& im : psi.images())
      if (im == var) declared = true;
    if (!declared)
      throw std::invalid_argument("homomorphism is not surjective on variables: " +
                                  target.var_names()[v]);
  }

  // A generator mapping to zero makes the target potion the zero ring, and
  // the map onto it is trivially surjective.
  for (const HomogeneousElement& g : s->generators()) {
    Polynomial im = substitute(lift_nvars(g.poly, source.nvars()), psi.images());
    if (target.is_zero_in_ring(im)) return {"surjective", samples, samples};
  }

  SubmonoidHandle image = map_submonoid(psi, *s);
  ClosedImmersionResult result;
  result.samples = samples;
  Sampler rng(seed);

  for (unsigned trial = 0; trial < samples; ++trial) {
    PotionElement b = rng.potion(image);
    Polynomial want = target.normal_form(lift_nvars(b.rep.num, target.nvars()));

    // Solve for source-monomial coefficients whose image reduces to `want`.
    std::vector<Monomial> basis = source.monomials_of_degree(b.rep.deg, degree_bound);
    std::vector<Polynomial> reduced;
    std::map<Monomial, std::size_t> rows;
    for (const Monomial& m : basis) {
      Polynomial r = target.normal_form(substitute(Polynomial::term(source.nvars(), m, 1),
                                                   psi.images()));
      for (const auto& [mono, c] : r.terms()) rows.emplace(mono, rows.size());
      reduced.push_back(std::move(r));
    }
    for (const auto& [mono, c] : want.terms()) rows.emplace(mono, rows.size());

    std::vector<std::vector<Rat>> mat(rows.size(), std::vector<Rat>(basis.size(), Rat(0)));
    std::vector<Rat> rhs(rows.size(), Rat(0));
    for (std::size_t col = 0; col < basis.size(); ++col)
      for (const auto& [mono, c] : reduced[col].terms()) mat[rows.at(mono)][col] = c;
    for (const auto& [mono, c] : want.terms()) rhs[rows.at(mono)] = c;

    std::vector<Rat> x;
    if (!solve_rational_linear(mat, rhs, x)) continue;
    Polynomial lift(source.nvars());
    for (std::size_t col = 0; col < basis.size(); ++col)
      if (!(x[col] == Rat(0))) lift = lift + Polynomial::term(source.nvars(), basis[col], x[col]);
    if (target.eq(substitute(lift, psi.images()), want)) ++result.lifted;
  }

  result.verdict = result.lifted == samples ? "surjective" : "inconclusive";
  return result;
}

ProductGrading::ProductGrading(const RingHandle& left, const RingHandle& right)
    : left_(left), right_(right) {
  const FgAbelianGroup& gl = left->group();
  const FgAbelianGroup& gr = right->group();
  std::vector<Int> moduli = gl.invariants();
  moduli.insert(moduli.end(), gr.invariants().begin(), gr.invariants().end());

  std::vector<Int> invariants;
  const std::size_t k = moduli.size();
  if (k == 0) {
    torsion_change_ = IntMatrix::identity(0);
  } else {
    IntMatrix diag(k, k);
    for (std::size_t i = 0; i < k; ++i) diag.at(i, i) = moduli[i];
    SmithDecomposition snf = smith_normal_form(diag);
    torsion_change_ = snf.u;
    for (std::size_t i = 0; i < k; ++i)
      if (snf.d.at(i, i) != 1) {
        kept_.push_back(i);
        invariants.push_back(snf.d.at(i, i));
      }
  }
  FgAbelianGroup group(gl.rank() + gr.rank(), invariants);

  std::vector<std::string> names = left->var_names();
  for (std::string name : right->var_names()) {
    std::string chosen = name;
    while (std::find(names.begin(), names.end(), chosen) != names.end()) chosen += "_2";
    if (chosen != name) renames_.emplace_back(name, chosen);
    names.push_back(chosen);
  }

  const std::size_t n1 = left->nvars(), n2 = right->nvars(), n = n1 + n2;
  std::vector<std::size_t> left_map(n1), right_map(n2);
  for (std::size_t i = 0; i < n1; ++i) left_map[i] = i;
  for (std::size_t i = 0; i < n2; ++i) right_map[i] = n1 + i;

  std::vector<GroupElement> degrees;
  group_ = group;
  for (const GroupElement& d : left->var_degrees()) degrees.push_back(embed(d, true));
  for (const GroupElement& d : right->var_degrees()) degrees.push_back(embed(d, false));

  std::vector<Polynomial> ideal;
  for (const Polynomial& p : left->ideal().generators)
    ideal.push_back(remap_variables(p, n, left_map));
  for (const Polynomial& p : right->ideal().generators)
    ideal.push_back(remap_variables(p, n, right_map));

  ring_ = GradedRing::make(group, std::move(names), std::move(degrees), std::move(ideal));
}

GroupElement ProductGrading::embed(const GroupElement& a, bool from_left) const {
  const FgAbelianGroup& gl = left_->group();
  const FgAbelianGroup& gr = right_->group();
  std::vector<Int> free(gl.rank() + gr.rank(), 0);
  std::vector<Int> torsion_concat(gl.invariants().size() + gr.invariants().size(), 0);
  const std::size_t free_off = from_left ? 0 : gl.rank();
  const std::size_t tor_off = from_left ? 0 : gl.invariants().size();
  for (std::size_t i = 0; i < a.free_part.size(); ++i) free[free_off + i] = a.free_part[i];
  for (std::size_t i = 0; i < a.torsion_part.size(); ++i)
    torsion_concat[tor_off + i] = a.torsion_part[i];

  std::vector<Int> torsion;
  for (std::size_t r : kept_) {
    Int acc = 0;
    for (std::size_t c = 0; c < torsion_concat.size(); ++c)
      acc += torsion_change_.at(r, c) * torsion_concat[c];
    torsion.push_back(acc);
  }
  return group_.element(std::move(free), std::move(torsion));
}

GroupElement ProductGrading::embed_left(const GroupElement& a) const { return embed(a, true); }
GroupElement ProductGrading::embed_right(const GroupElement& b) const { return embed(b, false); }

Polynomial ProductGrading::remap_left(const Polynomial& p) const {
  std::vector<std::size_t> map(left_->nvars());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = i;
  return remap_variables(p, ring_->nvars(), map);
}

Polynomial ProductGrading::remap_right(const Polynomial& p) const {
  std::vector<std::size_t> map(right_->nvars());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = left_->nvars() + i;
  return remap_variables(p, ring_->nvars(), map);
}

namespace {

struct TaggedFraction {
  Polynomial num;    // over the product ring
  unsigned power;    // denominator u^power for u = product of chart generators
};

// Rewrites a potion element over the chart to the common denominator u^k.
TaggedFraction common_denominator(const PotionElement& a) {
  const HomogeneousSubmonoid& sub = *a.sub;
  unsigned k = 0;
  for (unsigned w : a.rep.den_witness) k = std::max(k, w);
  Polynomial num = lift_nvars(a.rep.num, sub.ring()->nvars());
  for (std::size_t g = 0; g < sub.generators().size(); ++g) {
    unsigned extra = k - a.rep.den_witness[g];
    if (extra > 0) num = num * sub.generators()[g].poly.pow(extra);
  }
  return {std::move(num), k};
}

}  // namespace

ProductChartResult product_chart_check(const ProductGrading& pg, const SubmonoidHandle& s,
                                       const SubmonoidHandle& t, std::uint64_t seed,
                                       unsigned samples, unsigned degree_bound) {
  const RingHandle& ab = pg.ring();

  // Chart submonoid S*T: pairwise products of the embedded generators (one
  // side alone when the other is trivial).
  std::vector<HomogeneousElement> sg, tg;
  for (const HomogeneousElement& g : s->generators())
    sg.push_back({pg.remap_left(g.poly), pg.embed_left(g.degree)});
  for (const HomogeneousElement& g : t->generators())
    tg.push_back({pg.remap_right(g.poly), pg.embed_right(g.degree)});

  std::vector<HomogeneousElement> chart_gens;
  std::vector<std::optional<Factorization>> chart_facts;
  if (sg.empty()) {
    chart_gens = tg;
    chart_facts.assign(tg.size(), std::nullopt);
  } else if (tg.empty()) {
    chart_gens = sg;
    chart_facts.assign(sg.size(), std::nullopt);
  } else {
    for (const HomogeneousElement& a : sg)
      for (const HomogeneousElement& b : tg) {
        chart_gens.push_back({a.poly * b.poly, ab->group().add(a.degree, b.degree)});
        Factorization f;
        f.factors = {{a.poly, 1}, {b.poly, 1}};
        chart_facts.push_back(std::move(f));
      }
  }
  SubmonoidHandle chart = HomogeneousSubmonoid::make(ab, chart_gens, chart_facts);

  ProductChartResult result;
  result.chart = chart;
  result.samples = samples;

  // Subalgebra generators: images of the canonical fractions m / s_i^b of
  // A_(S) (numerator monomials of matching degree), balanced against the
  // first generator of the other side, and symmetrically for T.
  std::vector<TaggedFraction> tags;
  Polynomial u = Polynomial::constant(ab->nvars(), 1);
  for (const HomogeneousElement& g : chart_gens) u = u * g.poly;

  auto fraction_of = [&](const PotionElement& p) { return common_denominator(p); };
  auto push_tag = [&](const PotionElement& p) {
    // Skip units and duplicates.
    for (const Rat& c : {Rat(0), Rat(1), Rat(-1)}) {
      if (potion_eq(p, potion_constant(chart, c))) return;
    }
    TaggedFraction f = fraction_of(p);
    f.num = ab->normal_form(f.num);
    for (const TaggedFraction& have : tags)
      if (have.power == f.power && have.num == f.num) return;
    if (tags.size() < 16) tags.push_back(std::move(f));
  };

  auto side_fractions = [&](const std::vector<HomogeneousElement>& own,
                            const std::vector<HomogeneousElement>& other, bool left_side) {
    const GradedRing& ring = left_side ? *pg.left() : *pg.right();
    for (std::size_t i = 0; i < own.size(); ++i) {
      for (unsigned b = 1; b <= 3; ++b) {
        const HomogeneousElement& src = left_side ? s->generators()[i] : t->generators()[i];
        GroupElement target_deg = ring.group().scale(Int(b), src.degree);
        unsigned src_deg = 0;
        for (const auto& [mono, c] : src.poly.terms())
          src_deg = std::max(src_deg, total_degree(mono));
        unsigned tot_bound = std::min(degree_bound, b * src_deg + 2);
        for (const Monomial& m : ring.monomials_of_degree(target_deg, tot_bound)) {
          Polynomial num = left_side ? pg.remap_left(Polynomial::term(ring.nvars(), m, 1))
                                     : pg.remap_right(Polynomial::term(ring.nvars(), m, 1));
          // Balance with the other side's first generator.
          std::vector<unsigned> witness(chart_gens.size(), 0);
          std::size_t den_index;
          if (other.empty()) {
            den_index = i;
          } else if (left_side) {
            den_index = i * other.size();  // (s_i, t_0)
            num = num * tg[0].poly.pow(b);
          } else {
            den_index = i;                 // (s_0, t_i)
            num = num * sg[0].poly.pow(b);
          }
          witness[den_index] = b;
          HomogeneousElement den = chart->witness_product(witness);
          push_tag(make_potion(chart, den.degree, num, witness));
        }
      }
    }
  };
  side_fractions(sg, tg, true);
  side_fractions(tg, sg, false);

  // Membership ideal: product-ring ideal, tag relations tag_l * u^{k_l} -
  // n_l, and z*u - 1; eliminate the ring variables and z, keep the tags.
  const std::size_t n = ab->nvars();
  const std::size_t total = n + tags.size() + 1;
  const std::size_t zvar = total - 1;
  std::vector<std::size_t> ring_map(n);
  for (std::size_t i = 0; i < n; ++i) ring_map[i] = i;

  std::vector<Polynomial> gens;
  for (const Polynomial& p : ab->ideal().generators)
    gens.push_back(remap_variables(p, total, ring_map));
  Polynomial u_big = remap_variables(u, total, ring_map);
  for (std::size_t l = 0; l < tags.size(); ++l) {
    Polynomial tag = Polynomial::variable(total, n + l);
    gens.push_back(tag * u_big.pow(tags[l].power) -
                   remap_variables(tags[l].num, total, ring_map));
  }
  gens.push_back(Polynomial::variable(total, zvar) * u_big - Polynomial::constant(total, 1));

  std::vector<std::size_t> elim = ring_map;
  elim.push_back(zvar);
  MonomialOrder order = MonomialOrder::eliminating(total, elim);
  std::vector<Polynomial> gb = groebner_basis(gens, order);

  Sampler rng(seed);
  for (unsigned trial = 0; trial < samples; ++trial) {
    PotionElement p = rng.potion(chart);
    TaggedFraction f = fraction_of(p);
    Polynomial probe = remap_variables(f.num, total, ring_map) *
                       Polynomial::variable(total, zvar).pow(f.power);
    Polynomial nf = normal_form(probe, gb, order);
    bool only_tags = true;
    for (const auto& [mono, c] : nf.terms())
      for (std::size_t v = 0; v < total; ++v)
        if (mono[v] > 0 && (v < n || v == zvar)) only_tags = false;
    if (only_tags) ++result.decomposed;
  }

  result.verdict = result.decomposed == samples ? "pass" : "inconclusive";
  return result;
}

}  // namespace gradedproj

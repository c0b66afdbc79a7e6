#include "gradedproj/magic.hpp"

#include <stdexcept>

namespace gradedproj {

PotionGen find_potion_gen(const SubmonoidHandle& s, const SubmonoidHandle& t) {
  if (!is_relevant(*s))
    throw std::invalid_argument("find_potion_gen requires a relevant submonoid S");
  const FgAbelianGroup& group = s->ring()->group();
  std::optional<Int> bound = torsion_exponent(deg_group_bar(*s));
  if (!bound) throw std::logic_error("relevant submonoid with infinite torsion exponent");

  std::vector<GroupElement> divisor_degs;
  for (const DivisorGenerator& d : s->divisor_generators()) divisor_degs.push_back(d.degree);

  PotionGen out;
  out.s = s;
  out.t = t;
  for (std::size_t j = 0; j < t->generators().size(); ++j) {
    const GroupElement& delta = t->generators()[j].degree;
    bool found = false;
    for (Int n = 1; n <= *bound && !found; ++n) {
      auto rep = represent_as_difference(group, group.scale(n, delta), divisor_degs);
      if (!rep) continue;
      PotionGenEntry e;
      e.t_gen = j;
      e.n = static_cast<unsigned>(n);
      e.s_exps.reserve(rep->plus.size());
      for (const Int& v : rep->plus) e.s_exps.push_back(static_cast<unsigned>(v));
      for (const Int& v : rep->minus) e.s1_exps.push_back(static_cast<unsigned>(v));
      e.i = s->divisor_witness_product(e.s_exps).degree;
      e.i1 = s->divisor_witness_product(e.s1_exps).degree;
      // deg(t^n) = i - i'
      if (!(group.scale(n, delta) == group.sub(e.i, e.i1)))
        throw std::logic_error("potion gen degree equation violated");
      out.entries.push_back(std::move(e));
      found = true;
    }
    if (!found)
      throw std::logic_error("no exponent within the torsion bound; S not relevant after all");
  }
  return out;
}

std::vector<PotionElement> gen_submonoid_elements(const PotionGen& g) {
  BarPotionEquiv bar(g.s);
  std::vector<PotionElement> out;
  for (const PotionGenEntry& e : g.entries) {
    const HomogeneousElement& t = g.t->generators()[e.t_gen];
    HomogeneousElement s1 = g.s->divisor_witness_product(e.s1_exps);
    Polynomial num = t.poly.pow(e.n) * s1.poly;
    PotionElement over_bar = make_potion(bar.bar(), e.i, std::move(num), e.s_exps);
    out.push_back(bar.forward(over_bar));
  }
  return out;
}

LocalizationEquiv::LocalizationEquiv(PotionGen gen)
    : gen_(std::move(gen)),
      bar_s_(gen_.s),
      st_prod_(product(gen_.s, gen_.t)),
      st_(st_prod_.sub),
      bar_st_(st_),
      e_(gen_submonoid_elements(gen_)) {
  // Inverse images s_t / (t^{n_t} s'_t) of the e_t inside A_(ST), assembled
  // over bar(ST).
  const HomogeneousSubmonoid& st = *st_;
  const SubmonoidHandle& bst = bar_st_.bar();
  for (const PotionGenEntry& e : gen_.entries) {
    const HomogeneousElement& t = gen_.t->generators()[e.t_gen];
    // witness of t^n over ST generators, expanded into divisors
    std::vector<unsigned> st_witness(st.generators().size(), 0);
    st_witness[st_prod_.right_map[e.t_gen]] = e.n;
    Rat unit = 1;
    std::vector<unsigned> divisors = st.expand_witness_to_divisors(st_witness, unit);
    // add the divisors of s' (each bar(S) divisor generator also generates
    // bar(ST))
    for (std::size_t d = 0; d < e.s1_exps.size(); ++d) {
      if (e.s1_exps[d] == 0) continue;
      auto idx = st.divisor_index_of(gen_.s->divisor_generators()[d].poly);
      if (!idx) throw std::logic_error("bar(S) divisor generator missing from bar(ST)");
      divisors[*idx] += e.s1_exps[d];
    }
    HomogeneousElement s_elem = gen_.s->divisor_witness_product(e.s_exps);
    Polynomial num = s_elem.poly * (Rat(1) / unit);
    PotionElement over_bar = make_potion(bst, e.i, std::move(num), std::move(divisors));
    inv_e_.push_back(bar_st_.forward(over_bar));
  }
}

LocalizationElement LocalizationEquiv::embed(const PotionElement& over_s) const {
  return {over_s, std::vector<unsigned>(gen_.entries.size(), 0)};
}

PotionElement LocalizationEquiv::forward(const LocalizationElement& a) const {
  PotionElement out = potion_map(a.p, st_);
  for (std::size_t t = 0; t < gen_.entries.size(); ++t)
    if (a.denom_exps[t] > 0) out = potion_mul(out, potion_pow(inv_e_[t], a.denom_exps[t]));
  return out;
}

LocalizationElement LocalizationEquiv::backward(const PotionElement& over_st) const {
  if (!same_submonoid(over_st.sub, st_))
    throw std::invalid_argument("backward: element not over A_(ST)");
  const GradedRing& ring = *st_->ring();

  // T-generator exponents in the denominator witness.
  std::vector<unsigned> witness = over_st.rep.den_witness;
  std::vector<unsigned> k(gen_.entries.size(), 0);
  Polynomial multiplier = Polynomial::constant(ring.nvars(), 1);
  for (std::size_t idx = 0; idx < gen_.entries.size(); ++idx) {
    const PotionGenEntry& e = gen_.entries[idx];
    std::size_t st_index = st_prod_.right_map[e.t_gen];
    unsigned b = witness[st_index];
    if (b == 0) continue;
    unsigned kk = (b + e.n - 1) / e.n;
    unsigned c = kk * e.n - b;
    k[idx] = kk;
    const HomogeneousElement& t = gen_.t->generators()[e.t_gen];
    HomogeneousElement s1 = gen_.s->divisor_witness_product(e.s1_exps);
    multiplier = multiplier * t.poly.pow(c) * s1.poly.pow(kk);
    witness[st_index] = 0;  // the t-part moves into the e_t denominators
  }

  // Remaining witness entries form the S-part of the denominator.
  std::vector<unsigned> s_witness(gen_.s->generators().size(), 0);
  for (std::size_t i = 0; i < gen_.s->generators().size(); ++i) {
    std::size_t st_index = st_prod_.left_map[i];
    s_witness[i] = witness[st_index];
    witness[st_index] = 0;
  }
  for (unsigned left : witness)
    if (left != 0) throw std::logic_error("backward: unclassified denominator generator");

  // Denominator over bar(S): expansion of the S-part plus s_t^{k_t}.
  Rat unit = 1;
  std::vector<unsigned> bar_witness = gen_.s->expand_witness_to_divisors(s_witness, unit);
  for (std::size_t idx = 0; idx < gen_.entries.size(); ++idx)
    for (std::size_t d = 0; d < bar_witness.size(); ++d)
      bar_witness[d] += k[idx] * gen_.entries[idx].s_exps[d];

  Polynomial num = over_st.rep.num;
  if (num.nvars() != ring.nvars()) num = Polynomial(ring.nvars());
  num = num * multiplier * (Rat(1) / unit);
  // num and den were multiplied by the same homogeneous element, so the
  // common degree is that of the new denominator.
  HomogeneousElement den = bar_s_.bar()->witness_product(bar_witness);
  PotionElement over_bar = make_potion(bar_s_.bar(), den.degree, std::move(num), bar_witness);
  return {bar_s_.forward(over_bar), k};
}

bool LocalizationEquiv::loc_eq(const LocalizationElement& a, const LocalizationElement& b,
                               unsigned power_bound) const {
  // E(x) = prod e_t^{exps}
  auto denom = [&](const LocalizationElement& x) {
    PotionElement acc = potion_one(gen_.s);
    for (std::size_t t = 0; t < gen_.entries.size(); ++t)
      if (x.denom_exps[t] > 0) acc = potion_mul(acc, potion_pow(e_[t], x.denom_exps[t]));
    return acc;
  };
  PotionElement z = potion_sub(potion_mul(a.p, denom(b)), potion_mul(b.p, denom(a)));
  PotionElement all = potion_one(gen_.s);
  for (const PotionElement& e : e_) all = potion_mul(all, e);
  PotionElement scaled = z;
  for (unsigned m = 0; m <= power_bound; ++m) {
    if (potion_is_zero(scaled)) return true;
    scaled = potion_mul(scaled, all);
  }
  return false;
}

LocalizationElement LocalizationEquiv::loc_mul(const LocalizationElement& a,
                                               const LocalizationElement& b) const {
  LocalizationElement out{potion_mul(a.p, b.p), a.denom_exps};
  for (std::size_t t = 0; t < out.denom_exps.size(); ++t) out.denom_exps[t] += b.denom_exps[t];
  return out;
}

OpenImmersionCertificate open_immersion_certificate(const SubmonoidHandle& s,
                                                    const SubmonoidHandle& t) {
  OpenImmersionCertificate out;
  out.gen = find_potion_gen(s, t);
  out.elements = gen_submonoid_elements(out.gen);
  out.verdict =
      "A_(S) -> A_(ST) is the localization of A_(S) at the listed elements";
  return out;
}

SumCoverReport sum_cover_check(const RingHandle& ring,
                               const std::vector<HomogeneousElement>& elements,
                               std::uint64_t seed, unsigned samples) {
  SumCoverReport report;
  report.seed = seed;
  if (elements.empty()) {
    report.error = "empty element list";
    return report;
  }
  const FgAbelianGroup& group = ring->group();
  for (const HomogeneousElement& f : elements) {
    if (f.poly.is_zero()) {
      report.error = "zero element in the family";
      return report;
    }
    if (!ring->is_homogeneous_of(f.poly, f.degree)) {
      report.error = "element not homogeneous of its degree: " + ring->print(f.poly);
      return report;
    }
    if (!(f.degree == elements[0].degree)) {
      report.error = "elements of mixed degrees";
      return report;
    }
  }
  std::vector<SubmonoidHandle> charts;
  for (const HomogeneousElement& f : elements) {
    SubmonoidHandle sf = HomogeneousSubmonoid::make(ring, {f});
    if (!is_relevant(*sf)) {
      report.error = "family member not relevant: " + ring->print(f.poly);
      return report;
    }
    charts.push_back(sf);
  }
  Polynomial gp(ring->nvars());
  for (const HomogeneousElement& f : elements) gp = gp + f.poly;
  if (gp.is_zero()) {
    report.error = "sum of the family vanishes";
    return report;
  }
  HomogeneousElement g{gp, elements[0].degree};
  SubmonoidHandle sg = HomogeneousSubmonoid::make(ring, {g});

  report.ok = true;
  for (std::size_t i = 0; i < charts.size(); ++i) {
    for (std::size_t j = i + 1; j < charts.size(); ++j) {
      // A_(g) -> A_(f_i g) -> A_(f_i f_j g) versus the route through f_j.
      SubmonoidProduct gi = product(sg, charts[i]);
      SubmonoidProduct gj = product(sg, charts[j]);
      SubmonoidProduct gij = product(gi.sub, charts[j]);
      SubmonoidProduct gji = product(gj.sub, charts[i]);
      PotionEquiv align = PotionEquiv::from_matching(gji.sub, gij.sub);

      // Magic 1 maps from the f-charts into the overlap ring as well.
      (void)potion_map(potion_one(charts[i]), gi.sub);
      (void)potion_map(potion_one(charts[j]), gj.sub);

      SumCoverPairVerdict verdict;
      verdict.i = i;
      verdict.j = j;
      verdict.samples = samples;
      verdict.compatible = true;
      Sampler sampler(seed + 1000 * i + j);
      for (unsigned n = 0; n < samples; ++n) {
        PotionElement x = sampler.potion(sg);
        PotionElement via_i = potion_map(potion_map(x, gi.sub), gij.sub);
        PotionElement via_j = align.forward(potion_map(potion_map(x, gj.sub), gji.sub));
        if (!potion_eq(via_i, via_j)) {
          verdict.compatible = false;
          report.ok = false;
          break;
        }
      }
      report.pairs.push_back(verdict);
    }
  }
  return report;
}

}  // namespace gradedproj

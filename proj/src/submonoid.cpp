#include "gradedproj/submonoid.hpp"

#include <stdexcept>

namespace gradedproj {

namespace {

Polynomial monic(const Polynomial& p, const MonomialOrder& order) {
  Term lt = leading_term(p, order);
  return p * (Rat(1) / lt.coeff);
}

// Monomial generators factor exactly into variables.
std::optional<Factorization> auto_factor(const GradedRing& ring, const Polynomial& p) {
  if (p.term_count() != 1) return std::nullopt;
  const auto& [m, c] = *p.terms().begin();
  Factorization f;
  f.unit = c;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] > 0) f.factors.push_back({Polynomial::variable(p.nvars(), i), m[i]});
  return f;
}

}  // namespace

SubmonoidHandle HomogeneousSubmonoid::make(RingHandle ring,
                                           std::vector<HomogeneousElement> generators,
                                           std::vector<std::optional<Factorization>> facts) {
  auto sub = std::shared_ptr<HomogeneousSubmonoid>(new HomogeneousSubmonoid());
  const MonomialOrder order = MonomialOrder::grevlex(ring->nvars());
  sub->ring_ = ring;
  facts.resize(generators.size());

  for (std::size_t g = 0; g < generators.size(); ++g) {
    HomogeneousElement& gen = generators[g];
    if (gen.poly.is_zero()) throw std::invalid_argument("submonoid generator must be nonzero");
    if (!ring->is_homogeneous_of(gen.poly, gen.degree))
      throw std::invalid_argument("submonoid generator is not homogeneous of its degree: " +
                                  ring->print(gen.poly));

    std::optional<Factorization> fact = facts[g];
    if (!fact) fact = auto_factor(*ring, gen.poly);
    if (!fact) {
      // Declared irreducible; trusted.
      Factorization self;
      self.unit = 1;
      self.factors.push_back({gen.poly, 1});
      fact = self;
      if (!gen.poly.is_constant()) sub->trusted_irreducibility_ = true;
    }
    // Verify the factorization multiplies back exactly and factors are
    // homogeneous.
    Polynomial prod = Polynomial::constant(ring->nvars(), fact->unit);
    for (const FactorPower& fp : fact->factors) {
      if (ring->homogeneity(fp.factor).kind != Homogeneity::Kind::homogeneous)
        throw std::invalid_argument("declared factor is not homogeneous: " +
                                    ring->print(fp.factor));
      prod = prod * fp.factor.pow(fp.multiplicity);
    }
    if (!(prod == gen.poly))
      throw std::invalid_argument("factorization does not multiply back to generator: " +
                                  ring->print(gen.poly));
    sub->generators_.push_back(gen);
    sub->factorizations_.push_back(*fact);
  }

  // Divisor closure generators: monic factors, constants folded away,
  // deduplicated. Each keeps one parent and the cofactor within it.
  for (std::size_t g = 0; g < sub->generators_.size(); ++g) {
    const Factorization& fact = sub->factorizations_[g];
    std::vector<unsigned> exps;
    Rat unit = fact.unit;
    for (const FactorPower& fp : fact.factors) {
      if (fp.factor.is_constant()) {
        Rat c = fp.factor.is_zero() ? Rat(0) : fp.factor.terms().begin()->second;
        for (unsigned i = 0; i < fp.multiplicity; ++i) unit *= c;
        continue;
      }
      Polynomial nf = monic(fp.factor, order);
      Rat lead = leading_term(fp.factor, order).coeff;
      for (unsigned i = 0; i < fp.multiplicity; ++i) unit *= lead;
      std::size_t idx;
      auto found = sub->divisor_index_of(nf);
      if (found) {
        idx = *found;
      } else {
        DivisorGenerator d;
        d.poly = nf;
        d.degree = ring->homogeneity(nf).degree;
        d.parent = g;
        // cofactor = generator / factor, assembled from the remaining factors
        Polynomial cof = Polynomial::constant(ring->nvars(), fact.unit);
        bool removed = false;
        for (const FactorPower& fq : fact.factors) {
          unsigned mult = fq.multiplicity;
          if (!removed && fq.factor == fp.factor) {
            --mult;
            removed = true;
          }
          cof = cof * fq.factor.pow(mult);
        }
        // one monic copy was removed, so scale by its leading coefficient
        d.cofactor = cof * lead;
        d.cofactor_degree = ring->group().sub(sub->generators_[g].degree, d.degree);
        idx = sub->divisor_generators_.size();
        sub->divisor_generators_.push_back(std::move(d));
      }
      if (exps.size() <= idx) exps.resize(sub->divisor_generators_.size(), 0);
      exps[idx] += fp.multiplicity;
    }
    exps.resize(std::max(exps.size(), sub->divisor_generators_.size()), 0);
    sub->generator_divisor_exps_.push_back(std::move(exps));
    sub->generator_units_.push_back(unit);
  }
  for (auto& e : sub->generator_divisor_exps_) e.resize(sub->divisor_generators_.size(), 0);

  // Saturation basis at the product of all generators.
  if (sub->generators_.empty()) {
    sub->saturation_basis_ = ring->ideal().groebner;
  } else {
    Polynomial g = Polynomial::constant(ring->nvars(), 1);
    for (const HomogeneousElement& e : sub->generators_) g = g * e.poly;
    sub->saturation_basis_ = saturate(ring->ideal().generators, g);
  }
  return sub;
}

HomogeneousElement HomogeneousSubmonoid::witness_product(
    const std::vector<unsigned>& witness) const {
  if (witness.size() != generators_.size())
    throw std::invalid_argument("witness length mismatch");
  Polynomial p = Polynomial::constant(ring_->nvars(), 1);
  GroupElement d = ring_->group().zero();
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (witness[i] == 0) continue;
    p = p * generators_[i].poly.pow(witness[i]);
    d = ring_->group().add(d, ring_->group().scale(Int(witness[i]), generators_[i].degree));
  }
  return {p, d};
}

HomogeneousElement HomogeneousSubmonoid::divisor_witness_product(
    const std::vector<unsigned>& witness) const {
  if (witness.size() != divisor_generators_.size())
    throw std::invalid_argument("divisor witness length mismatch");
  Polynomial p = Polynomial::constant(ring_->nvars(), 1);
  GroupElement d = ring_->group().zero();
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (witness[i] == 0) continue;
    p = p * divisor_generators_[i].poly.pow(witness[i]);
    d = ring_->group().add(d, ring_->group().scale(Int(witness[i]), divisor_generators_[i].degree));
  }
  return {p, d};
}

SubmonoidHandle HomogeneousSubmonoid::bar_as_submonoid() const {
  std::vector<HomogeneousElement> gens;
  std::vector<std::optional<Factorization>> facts;
  for (const DivisorGenerator& d : divisor_generators_) {
    gens.push_back({d.poly, d.degree});
    Factorization self;
    self.factors.push_back({d.poly, 1});
    facts.push_back(self);
  }
  return make(ring_, std::move(gens), std::move(facts));
}

std::optional<std::size_t> HomogeneousSubmonoid::generator_index_of(const Polynomial& p) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].poly == p) return i;
  return std::nullopt;
}

std::optional<std::size_t> HomogeneousSubmonoid::divisor_index_of(const Polynomial& p) const {
  for (std::size_t i = 0; i < divisor_generators_.size(); ++i)
    if (divisor_generators_[i].poly == p) return i;
  return std::nullopt;
}

std::vector<unsigned> HomogeneousSubmonoid::expand_witness_to_divisors(
    const std::vector<unsigned>& witness, Rat& unit) const {
  std::vector<unsigned> out(divisor_generators_.size(), 0);
  unit = 1;
  for (std::size_t g = 0; g < witness.size(); ++g) {
    if (witness[g] == 0) continue;
    for (std::size_t d = 0; d < divisor_generators_.size(); ++d)
      out[d] += witness[g] * generator_divisor_exps_[g][d];
    for (unsigned i = 0; i < witness[g]; ++i) unit *= generator_units_[g];
  }
  return out;
}

std::vector<GroupElement> deg_monoid(const HomogeneousSubmonoid& s) {
  std::vector<GroupElement> out;
  for (const HomogeneousElement& g : s.generators()) out.push_back(g.degree);
  return out;
}

SubgroupPresentation deg_group(const HomogeneousSubmonoid& s) {
  return {s.ring()->group(), deg_monoid(s)};
}

SubgroupPresentation deg_group_bar(const HomogeneousSubmonoid& s) {
  std::vector<GroupElement> degs;
  for (const DivisorGenerator& d : s.divisor_generators()) degs.push_back(d.degree);
  return {s.ring()->group(), degs};
}

bool is_relevant(const HomogeneousSubmonoid& s) { return is_torsion_quotient(deg_group_bar(s)); }

bool is_maximally_relevant(const HomogeneousSubmonoid& s) {
  QuotientInvariants q = quotient_invariants(deg_group_bar(s));
  return q.free_rank == 0 && q.invariants.empty();
}

SubmonoidProduct product(const SubmonoidHandle& s, const SubmonoidHandle& t) {
  return product_many({s, t});
}

SubmonoidProduct product_many(const std::vector<SubmonoidHandle>& parts) {
  if (parts.empty()) throw std::invalid_argument("product of empty list");
  const RingHandle& ring = parts[0]->ring();
  for (const auto& p : parts)
    if (p->ring().get() != ring.get() && !p->ring()->same_presentation(*ring))
      throw std::invalid_argument("product of submonoids over different rings");

  std::vector<HomogeneousElement> gens;
  std::vector<std::optional<Factorization>> facts;
  std::vector<std::vector<std::size_t>> maps;
  for (const auto& part : parts) {
    std::vector<std::size_t> map;
    for (std::size_t i = 0; i < part->generators().size(); ++i) {
      const HomogeneousElement& g = part->generators()[i];
      std::size_t idx = gens.size();
      bool dup = false;
      for (std::size_t j = 0; j < gens.size(); ++j)
        if (gens[j].poly == g.poly) {
          idx = j;
          dup = true;
          break;
        }
      if (!dup) {
        gens.push_back(g);
        facts.push_back(part->factorizations()[i]);
      }
      map.push_back(idx);
    }
    maps.push_back(std::move(map));
  }
  SubmonoidProduct out;
  out.sub = HomogeneousSubmonoid::make(ring, std::move(gens), std::move(facts));
  out.left_map = maps[0];
  out.right_map = maps.size() > 1 ? maps[1] : std::vector<std::size_t>{};
  return out;
}

std::optional<std::vector<std::size_t>> inclusion_map(const HomogeneousSubmonoid& from,
                                                      const HomogeneousSubmonoid& into) {
  std::vector<std::size_t> map;
  for (const HomogeneousElement& g : from.generators()) {
    auto idx = into.generator_index_of(g.poly);
    if (!idx) return std::nullopt;
    map.push_back(*idx);
  }
  return map;
}

}  // namespace gradedproj

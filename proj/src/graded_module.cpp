#include "gradedproj/graded_module.hpp"

#include <stdexcept>

namespace gradedproj {

GradedModule GradedModule::make(RingHandle ring, std::vector<GroupElement> gen_degrees,
                                std::vector<std::vector<Polynomial>> relations) {
  const FgAbelianGroup& group = ring->group();
  for (const std::vector<Polynomial>& rel : relations) {
    if (rel.size() != gen_degrees.size())
      throw std::invalid_argument("relation length does not match the generator count");
    bool have_deg = false;
    GroupElement rel_deg = group.zero();
    for (std::size_t j = 0; j < rel.size(); ++j) {
      Homogeneity h = ring->homogeneity(rel[j]);
      if (h.kind == Homogeneity::Kind::zero) continue;
      if (h.kind == Homogeneity::Kind::mixed)
        throw std::invalid_argument("relation entry is not homogeneous");
      GroupElement total = group.add(h.degree, gen_degrees[j]);
      if (have_deg && !(total == rel_deg))
        throw std::invalid_argument("relation entries disagree on the relation degree");
      rel_deg = total;
      have_deg = true;
    }
  }
  GradedModule q;
  q.ring_ = std::move(ring);
  q.gen_degrees_ = std::move(gen_degrees);
  q.relations_ = std::move(relations);
  return q;
}

GradedModule shift(const GradedModule& q, const GroupElement& alpha) {
  const FgAbelianGroup& group = q.ring()->group();
  std::vector<GroupElement> degrees;
  for (const GroupElement& d : q.gen_degrees()) degrees.push_back(group.sub(d, alpha));
  return GradedModule::make(q.ring(), std::move(degrees), q.relations());
}

ModulePotionElement make_module_potion(const GradedModule& q, const SubmonoidHandle& s,
                                       const GroupElement& deg, std::vector<Polynomial> num,
                                       std::vector<unsigned> den_witness) {
  if (num.size() != q.rank())
    throw std::invalid_argument("module numerator length does not match the generator count");
  const GradedRing& ring = *q.ring();
  const FgAbelianGroup& group = ring.group();
  HomogeneousElement den = s->witness_product(den_witness);
  if (!(den.degree == deg)) throw std::invalid_argument("module denominator degree mismatch");
  for (std::size_t j = 0; j < num.size(); ++j)
    if (!ring.is_homogeneous_of(num[j], group.sub(deg, q.gen_degrees()[j])))
      throw std::invalid_argument("module numerator entry has the wrong degree");
  return {deg, std::move(num), std::move(den_witness)};
}

ModulePotionKernel::ModulePotionKernel(GradedModule q, SubmonoidHandle s)
    : q_(std::move(q)), s_(std::move(s)), order_(MonomialOrder::grevlex(0)) {
  const GradedRing& ring = *q_.ring();
  const std::size_t n = ring.nvars();
  const std::size_t total = n + q_.rank();
  order_ = MonomialOrder::grevlex(total);

  std::vector<std::size_t> ring_map(n);
  for (std::size_t i = 0; i < n; ++i) ring_map[i] = i;

  // Encoded presentation: ring ideal, relations as e-linear polynomials, and
  // all products e_a * e_b so the e-degree-1 slice is exactly the module.
  std::vector<Polynomial> gens;
  for (const Polynomial& p : ring.ideal().generators)
    gens.push_back(remap_variables(p, total, ring_map));
  for (const std::vector<Polynomial>& rel : q_.relations()) {
    Polynomial enc(total);
    for (std::size_t j = 0; j < rel.size(); ++j)
      enc = enc + remap_variables(rel[j], total, ring_map) * Polynomial::variable(total, n + j);
    gens.push_back(std::move(enc));
  }
  for (std::size_t a = 0; a < q_.rank(); ++a)
    for (std::size_t b = a; b < q_.rank(); ++b)
      gens.push_back(Polynomial::variable(total, n + a) * Polynomial::variable(total, n + b));

  Polynomial g = Polynomial::constant(n, 1);
  for (const HomogeneousElement& e : s_->generators()) g = g * e.poly;
  if (s_->generators().empty())
    saturated_ = groebner_basis(gens, order_);
  else
    saturated_ = saturate(gens, remap_variables(g, total, ring_map));
}

Polynomial ModulePotionKernel::encode(const std::vector<Polynomial>& vec) const {
  const std::size_t n = q_.ring()->nvars();
  const std::size_t total = n + q_.rank();
  std::vector<std::size_t> ring_map(n);
  for (std::size_t i = 0; i < n; ++i) ring_map[i] = i;
  Polynomial enc(total);
  for (std::size_t j = 0; j < vec.size(); ++j)
    enc = enc + remap_variables(vec[j], total, ring_map) * Polynomial::variable(total, n + j);
  return enc;
}

bool ModulePotionKernel::is_zero(const ModulePotionElement& a) const {
  return normal_form(encode(a.num), saturated_, order_).is_zero();
}

bool ModulePotionKernel::eq(const ModulePotionElement& a, const ModulePotionElement& b) const {
  HomogeneousElement da = s_->witness_product(a.den_witness);
  HomogeneousElement db = s_->witness_product(b.den_witness);
  std::vector<Polynomial> diff;
  for (std::size_t j = 0; j < q_.rank(); ++j) diff.push_back(a.num[j] * db.poly - b.num[j] * da.poly);
  return normal_form(encode(diff), saturated_, order_).is_zero();
}

TwistGenerator twist_generator(const SubmonoidHandle& s, const GroupElement& alpha) {
  if (!is_maximally_relevant(*s))
    throw std::invalid_argument("twist generators need a maximally relevant submonoid");
  const FgAbelianGroup& group = s->ring()->group();
  std::vector<GroupElement> degs;
  for (const DivisorGenerator& d : s->divisor_generators()) degs.push_back(d.degree);
  auto rep = represent_as_difference(group, alpha, degs);
  if (!rep) throw std::logic_error("difference representation missing despite maximal relevance");

  std::vector<unsigned> plus(degs.size(), 0), minus(degs.size(), 0);
  for (std::size_t i = 0; i < degs.size(); ++i) {
    plus[i] = static_cast<unsigned>(rep->plus[i]);
    minus[i] = static_cast<unsigned>(rep->minus[i]);
  }
  TwistGenerator u;
  u.alpha = alpha;
  u.num = s->divisor_witness_product(plus);
  u.den = s->divisor_witness_product(minus);
  u.num_exps = std::move(plus);
  u.den_exps = std::move(minus);
  if (!(group.sub(u.num.degree, u.den.degree) == alpha))
    throw std::logic_error("twist generator degree mismatch");
  return u;
}

NegligibilityReport is_negligible_on_family(const GradedModule& q, const RelevantFamily& f) {
  NegligibilityReport report;
  report.negligible = true;
  for (std::size_t i = 0; i < f.members.size(); ++i) {
    ModulePotionKernel kernel(q, f.members[i]);
    bool vanishes = true;
    for (std::size_t j = 0; j < q.rank() && vanishes; ++j) {
      std::vector<Polynomial> unit(q.rank(), Polynomial(q.ring()->nvars()));
      unit[j] = Polynomial::constant(q.ring()->nvars(), 1);
      ModulePotionElement ej{q.gen_degrees()[j], std::move(unit),
                             std::vector<unsigned>(f.members[i]->generators().size(), 0)};
      if (!kernel.is_zero(ej)) vanishes = false;
    }
    report.entries.push_back({i, vanishes});
    report.negligible = report.negligible && vanishes;
  }
  return report;
}

}  // namespace gradedproj

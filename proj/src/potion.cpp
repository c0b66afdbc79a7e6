#include "gradedproj/potion.hpp"

#include <sstream>
#include <stdexcept>

namespace gradedproj {

bool same_submonoid(const SubmonoidHandle& a, const SubmonoidHandle& b) {
  if (a.get() == b.get()) return true;
  if (!a->ring()->same_presentation(*b->ring())) return false;
  if (a->generators().size() != b->generators().size()) return false;
  for (std::size_t i = 0; i < a->generators().size(); ++i)
    if (!(a->generators()[i].poly == b->generators()[i].poly)) return false;
  return true;
}

PotionElement make_potion(SubmonoidHandle sub, const GroupElement& deg, Polynomial num,
                          std::vector<unsigned> den_witness) {
  const GradedRing& ring = *sub->ring();
  if (!ring.is_homogeneous_of(num, deg))
    throw std::invalid_argument("potion numerator not homogeneous of the declared degree: " +
                                ring.print(num));
  HomogeneousElement den = sub->witness_product(den_witness);
  if (!(den.degree == deg))
    throw std::invalid_argument("potion denominator degree does not match declared degree");
  return {std::move(sub), {deg, std::move(num), den.poly, std::move(den_witness)}};
}

PotionElement potion_zero(SubmonoidHandle sub) {
  const std::size_t n = sub->generators().size();
  GroupElement zero = sub->ring()->group().zero();
  return make_potion(std::move(sub), zero, Polynomial(0), std::vector<unsigned>(n, 0));
}

PotionElement potion_one(SubmonoidHandle sub) { return potion_constant(std::move(sub), 1); }

PotionElement potion_constant(SubmonoidHandle sub, const Rat& c) {
  const std::size_t n = sub->generators().size();
  GroupElement zero = sub->ring()->group().zero();
  Polynomial num = Polynomial::constant(sub->ring()->nvars(), c);
  return make_potion(std::move(sub), zero, std::move(num), std::vector<unsigned>(n, 0));
}

namespace {

void check_same(const PotionElement& a, const PotionElement& b) {
  if (!same_submonoid(a.sub, b.sub))
    throw std::invalid_argument("potion elements over different submonoids");
  if (a.rep.num.nvars() == 0 || b.rep.num.nvars() == 0) return;
}

Polynomial lift_nvars(const Polynomial& p, std::size_t nvars) {
  if (p.nvars() == nvars) return p;
  // the zero polynomial is created with 0 variables by potion_zero
  if (!p.is_zero()) throw std::invalid_argument("variable count mismatch");
  return Polynomial(nvars);
}

}  // namespace

bool potion_eq(const PotionElement& a, const PotionElement& b) {
  check_same(a, b);
  const GradedRing& ring = *a.sub->ring();
  Polynomial na = lift_nvars(a.rep.num, ring.nvars());
  Polynomial nb = lift_nvars(b.rep.num, ring.nvars());
  Polynomial z = na * b.rep.den - nb * a.rep.den;
  if (ring.is_zero_in_ring(z)) return true;
  return normal_form(z, a.sub->saturation_basis(), MonomialOrder::grevlex(ring.nvars()))
      .is_zero();
}

bool potion_is_zero(const PotionElement& a) { return potion_eq(a, potion_zero(a.sub)); }

PotionElement potion_add(const PotionElement& a, const PotionElement& b) {
  check_same(a, b);
  const GradedRing& ring = *a.sub->ring();
  const FgAbelianGroup& g = ring.group();
  Polynomial na = lift_nvars(a.rep.num, ring.nvars());
  Polynomial nb = lift_nvars(b.rep.num, ring.nvars());
  std::vector<unsigned> witness = a.rep.den_witness;
  for (std::size_t i = 0; i < witness.size(); ++i) witness[i] += b.rep.den_witness[i];
  return make_potion(a.sub, g.add(a.rep.deg, b.rep.deg), na * b.rep.den + nb * a.rep.den,
                     std::move(witness));
}

PotionElement potion_neg(const PotionElement& a) {
  PotionElement out = a;
  out.rep.num = -out.rep.num;
  return out;
}

PotionElement potion_sub(const PotionElement& a, const PotionElement& b) {
  return potion_add(a, potion_neg(b));
}

PotionElement potion_mul(const PotionElement& a, const PotionElement& b) {
  check_same(a, b);
  const GradedRing& ring = *a.sub->ring();
  const FgAbelianGroup& g = ring.group();
  Polynomial na = lift_nvars(a.rep.num, ring.nvars());
  Polynomial nb = lift_nvars(b.rep.num, ring.nvars());
  std::vector<unsigned> witness = a.rep.den_witness;
  for (std::size_t i = 0; i < witness.size(); ++i) witness[i] += b.rep.den_witness[i];
  return make_potion(a.sub, g.add(a.rep.deg, b.rep.deg), na * nb, std::move(witness));
}

PotionElement potion_pow(const PotionElement& a, unsigned e) {
  PotionElement out = potion_one(a.sub);
  PotionElement base = a;
  while (e > 0) {
    if (e & 1u) out = potion_mul(out, base);
    base = potion_mul(base, base);
    e >>= 1u;
  }
  return out;
}

PotionElement transport(const PotionElement& a, const SubmonoidHandle& target,
                        const std::vector<GenExpr>& exprs) {
  const HomogeneousSubmonoid& src = *a.sub;
  if (exprs.size() != src.generators().size())
    throw std::invalid_argument("transport: one certificate per source generator required");
  // verify certificates
  for (std::size_t i = 0; i < exprs.size(); ++i) {
    HomogeneousElement prod = target->witness_product(exprs[i].exps);
    if (!(prod.poly * exprs[i].unit == src.generators()[i].poly))
      throw std::invalid_argument("transport certificate failed exact verification");
  }
  std::vector<unsigned> witness(target->generators().size(), 0);
  Rat unit = 1;
  for (std::size_t i = 0; i < exprs.size(); ++i) {
    unsigned w = a.rep.den_witness[i];
    if (w == 0) continue;
    for (std::size_t j = 0; j < witness.size(); ++j) witness[j] += w * exprs[i].exps[j];
    for (unsigned k = 0; k < w; ++k) unit *= exprs[i].unit;
  }
  Polynomial num = lift_nvars(a.rep.num, src.ring()->nvars()) * (Rat(1) / unit);
  return make_potion(target, a.rep.deg, std::move(num), std::move(witness));
}

std::optional<std::vector<GenExpr>> inclusion_exprs(const HomogeneousSubmonoid& from,
                                                    const HomogeneousSubmonoid& into) {
  std::vector<GenExpr> out;
  for (const HomogeneousElement& g : from.generators()) {
    auto idx = into.generator_index_of(g.poly);
    if (!idx) return std::nullopt;
    GenExpr e;
    e.exps.assign(into.generators().size(), 0);
    e.exps[*idx] = 1;
    out.push_back(std::move(e));
  }
  return out;
}

PotionElement potion_map(const PotionElement& a, const SubmonoidHandle& product_sub) {
  auto exprs = inclusion_exprs(*a.sub, *product_sub);
  if (!exprs)
    throw std::invalid_argument("potion_map: source generators not contained in product");
  return transport(a, product_sub, *exprs);
}

BarPotionEquiv::BarPotionEquiv(SubmonoidHandle s) : s_(std::move(s)), bar_(s_->bar_as_submonoid()) {}

PotionElement BarPotionEquiv::forward(const PotionElement& over_bar) const {
  if (!same_submonoid(over_bar.sub, bar_))
    throw std::invalid_argument("bar equiv forward: element not over bar(S)");
  const GradedRing& ring = *s_->ring();
  const FgAbelianGroup& g = ring.group();
  Polynomial num = lift_nvars(over_bar.rep.num, ring.nvars());
  GroupElement deg = over_bar.rep.deg;
  std::vector<unsigned> witness(s_->generators().size(), 0);
  for (std::size_t i = 0; i < over_bar.rep.den_witness.size(); ++i) {
    unsigned w = over_bar.rep.den_witness[i];
    if (w == 0) continue;
    const DivisorGenerator& d = s_->divisor_generators()[i];
    num = num * d.cofactor.pow(w);
    deg = g.add(deg, g.scale(Int(w), d.cofactor_degree));
    witness[d.parent] += w;
  }
  return make_potion(s_, deg, std::move(num), std::move(witness));
}

PotionElement BarPotionEquiv::backward(const PotionElement& over_s) const {
  if (!same_submonoid(over_s.sub, s_))
    throw std::invalid_argument("bar equiv backward: element not over S");
  Rat unit = 1;
  std::vector<unsigned> witness = s_->expand_witness_to_divisors(over_s.rep.den_witness, unit);
  Polynomial num =
      lift_nvars(over_s.rep.num, s_->ring()->nvars()) * (Rat(1) / unit);
  return make_potion(bar_, over_s.rep.deg, std::move(num), std::move(witness));
}

PotionEquiv::PotionEquiv(SubmonoidHandle s, SubmonoidHandle t, std::vector<GenExpr> s_over_t,
                         std::vector<GenExpr> t_over_s)
    : s_(std::move(s)), t_(std::move(t)), s_over_t_(std::move(s_over_t)),
      t_over_s_(std::move(t_over_s)) {
  // transport() re-verifies on every use; verify once here to fail fast
  for (std::size_t i = 0; i < s_->generators().size(); ++i) {
    HomogeneousElement prod = t_->witness_product(s_over_t_.at(i).exps);
    if (!(prod.poly * s_over_t_[i].unit == s_->generators()[i].poly))
      throw std::invalid_argument("potion equiv: S-over-T certificate failed");
  }
  for (std::size_t i = 0; i < t_->generators().size(); ++i) {
    HomogeneousElement prod = s_->witness_product(t_over_s_.at(i).exps);
    if (!(prod.poly * t_over_s_[i].unit == t_->generators()[i].poly))
      throw std::invalid_argument("potion equiv: T-over-S certificate failed");
  }
}

PotionEquiv PotionEquiv::from_matching(SubmonoidHandle s, SubmonoidHandle t) {
  auto st = inclusion_exprs(*s, *t);
  auto ts = inclusion_exprs(*t, *s);
  if (!st || !ts)
    throw std::invalid_argument("potion equiv: generator sets do not match one-to-one");
  return PotionEquiv(std::move(s), std::move(t), std::move(*st), std::move(*ts));
}

PotionElement PotionEquiv::forward(const PotionElement& a) const {
  return transport(a, t_, s_over_t_);
}

PotionElement PotionEquiv::backward(const PotionElement& b) const {
  return transport(b, s_, t_over_s_);
}

std::string describe(const PotionElement& a) {
  const GradedRing& ring = *a.sub->ring();
  std::ostringstream os;
  os << "(" << ring.print(a.rep.num) << ")/(" << ring.print(a.rep.den) << ")";
  return os.str();
}

}  // namespace gradedproj

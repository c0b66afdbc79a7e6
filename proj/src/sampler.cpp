#include "gradedproj/sampler.hpp"

namespace gradedproj {

unsigned Sampler::uniform(unsigned lo, unsigned hi) {
  std::uniform_int_distribution<unsigned> d(lo, hi);
  return d(rng_);
}

Rat Sampler::coefficient() {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
  int n = num(rng_);
  if (n == 0) n = 1;
  return Rat(n, den(rng_));
}

Polynomial Sampler::homogeneous(const GradedRing& ring, const GroupElement& degree,
                                unsigned bound) {
  std::vector<Monomial> monos = ring.monomials_of_degree(degree, bound);
  Polynomial p(ring.nvars());
  if (monos.empty()) return p;
  unsigned terms = uniform(1, static_cast<unsigned>(std::min<std::size_t>(monos.size(), 3)));
  for (unsigned i = 0; i < terms; ++i) {
    const Monomial& m = monos[uniform(0, static_cast<unsigned>(monos.size() - 1))];
    p.add_term(m, coefficient());
  }
  if (p.is_zero()) p.add_term(monos[0], 1);
  return p;
}

PotionElement Sampler::potion(const SubmonoidHandle& sub, unsigned witness_bound) {
  const GradedRing& ring = *sub->ring();
  std::vector<unsigned> witness(sub->generators().size(), 0);
  for (auto& w : witness) w = uniform(0, witness_bound);
  HomogeneousElement den = sub->witness_product(witness);
  unsigned bound = total_degree(leading_term(den.poly, MonomialOrder::grevlex(ring.nvars())).mono) + 2;
  Polynomial num = homogeneous(ring, den.degree, bound);
  if (num.is_zero()) num = den.poly * coefficient();
  return make_potion(sub, den.degree, std::move(num), std::move(witness));
}

}  // namespace gradedproj

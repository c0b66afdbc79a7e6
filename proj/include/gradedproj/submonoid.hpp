#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "gradedproj/graded_ring.hpp"

namespace gradedproj {

// gen = unit * prod factor_i ^ multiplicity_i, verified by exact
// multiplication at construction.
struct FactorPower {
  Polynomial factor;
  unsigned multiplicity = 1;
};
struct Factorization {
  Rat unit = 1;
  std::vector<FactorPower> factors;
};

// One generator of the divisor closure: a monic homogeneous factor of some
// declared generator, with the cofactor completing it to that generator.
struct DivisorGenerator {
  Polynomial poly;  // monic under grevlex
  GroupElement degree;
  std::size_t parent;          // index of a generator this divides
  Polynomial cofactor;         // parent generator = poly * cofactor (exactly)
  GroupElement cofactor_degree;
};

class HomogeneousSubmonoid;
using SubmonoidHandle = std::shared_ptr<const HomogeneousSubmonoid>;

// Finitely generated multiplicative submonoid of homogeneous nonzero
// elements. Elements are exponent vectors over the generators, so every
// membership fact carries a witness. Divisor-closure data (bar) and the
// saturation basis used for localization equality are computed on
// construction and frozen.
class HomogeneousSubmonoid {
 public:
  // Generators without a declared factorization are auto-factored when they
  // are monomials; otherwise they are declared irreducible (trusted, flagged).
  static SubmonoidHandle make(RingHandle ring, std::vector<HomogeneousElement> generators,
                              std::vector<std::optional<Factorization>> factorizations = {});

  const RingHandle& ring() const { return ring_; }
  const std::vector<HomogeneousElement>& generators() const { return generators_; }
  const std::vector<Factorization>& factorizations() const { return factorizations_; }
  const std::vector<DivisorGenerator>& divisor_generators() const { return divisor_generators_; }
  bool uses_trusted_irreducibility() const { return trusted_irreducibility_; }

  // Groebner basis of I : g^inf for g = product of all generators (just the
  // ideal basis when there are no generators). Decides equality in A_S.
  const std::vector<Polynomial>& saturation_basis() const { return saturation_basis_; }

  // prod generators_i ^ witness_i with its degree.
  HomogeneousElement witness_product(const std::vector<unsigned>& witness) const;
  // prod divisor_generators_i ^ witness_i with its degree.
  HomogeneousElement divisor_witness_product(const std::vector<unsigned>& witness) const;

  // The submonoid generated by the divisor generators, each declared
  // irreducible; shares the ambient ring.
  SubmonoidHandle bar_as_submonoid() const;

  std::optional<std::size_t> generator_index_of(const Polynomial& p) const;
  std::optional<std::size_t> divisor_index_of(const Polynomial& p) const;

  // Witness of an S-element over the divisor generators: expands every
  // generator into its factors. Also returns the unit constant peeled off.
  std::vector<unsigned> expand_witness_to_divisors(const std::vector<unsigned>& witness,
                                                   Rat& unit) const;

 private:
  HomogeneousSubmonoid() = default;
  RingHandle ring_;
  std::vector<HomogeneousElement> generators_;
  std::vector<Factorization> factorizations_;
  std::vector<DivisorGenerator> divisor_generators_;
  std::vector<std::vector<unsigned>> generator_divisor_exps_;  // per generator, over divisor gens
  std::vector<Rat> generator_units_;
  std::vector<Polynomial> saturation_basis_;
  bool trusted_irreducibility_ = false;
};

// Degrees of the generators: generators of deg(S) = M[S>.
std::vector<GroupElement> deg_monoid(const HomogeneousSubmonoid& s);
// M[S]: the subgroup of M generated by deg(S).
SubgroupPresentation deg_group(const HomogeneousSubmonoid& s);
// M[bar(S)] as a subgroup presentation (divisor-generator degrees).
SubgroupPresentation deg_group_bar(const HomogeneousSubmonoid& s);

bool is_relevant(const HomogeneousSubmonoid& s);
bool is_maximally_relevant(const HomogeneousSubmonoid& s);

struct SubmonoidProduct {
  SubmonoidHandle sub;
  std::vector<std::size_t> left_map;   // generator index in S -> index in product
  std::vector<std::size_t> right_map;  // generator index in T -> index in product
};

// ST: generated by the union of the generator sets (deduplicated), with
// factorizations carried over.
SubmonoidProduct product(const SubmonoidHandle& s, const SubmonoidHandle& t);

// Product of several submonoids, left to right.
SubmonoidProduct product_many(const std::vector<SubmonoidHandle>& parts);

// Expresses each generator of `from` as a generator of `into` (exact
// polynomial match); empty optional if some generator is missing.
std::optional<std::vector<std::size_t>> inclusion_map(const HomogeneousSubmonoid& from,
                                                      const HomogeneousSubmonoid& into);

}  // namespace gradedproj

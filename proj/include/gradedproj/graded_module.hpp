#pragma once

#include "gradedproj/atlas.hpp"

namespace gradedproj {

// Finitely presented graded module: free generators with degrees, relations
// as homogeneous vectors over the generators.
class GradedModule {
 public:
  // relations[r][j] must be homogeneous of (relation degree) - gen_degrees[j]
  // for one common relation degree; zero entries are unconstrained.
  static GradedModule make(RingHandle ring, std::vector<GroupElement> gen_degrees,
                           std::vector<std::vector<Polynomial>> relations);

  const RingHandle& ring() const { return ring_; }
  const std::vector<GroupElement>& gen_degrees() const { return gen_degrees_; }
  const std::vector<std::vector<Polynomial>>& relations() const { return relations_; }
  std::size_t rank() const { return gen_degrees_.size(); }

  bool operator==(const GradedModule&) const = default;

 private:
  GradedModule() = default;
  RingHandle ring_;
  std::vector<GroupElement> gen_degrees_;
  std::vector<std::vector<Polynomial>> relations_;
};

// Q(alpha): the same module with (Q(alpha))_beta = Q_{alpha+beta}, realized
// by shifting every generator degree by -alpha.
GradedModule shift(const GradedModule& q, const GroupElement& alpha);

// Degree-balanced module fraction over S: one numerator polynomial per
// generator, denominator encoded by its witness.
struct ModulePotionElement {
  GroupElement deg;                // common degree of numerator and denominator
  std::vector<Polynomial> num;     // entry j homogeneous of deg - gen_degrees[j]
  std::vector<unsigned> den_witness;
};

ModulePotionElement make_module_potion(const GradedModule& q, const SubmonoidHandle& s,
                                       const GroupElement& deg, std::vector<Polynomial> num,
                                       std::vector<unsigned> den_witness);

// Decides equality in Q_(S) through the saturated relation submodule; the
// relation data is encoded with one tag variable per generator.
class ModulePotionKernel {
 public:
  ModulePotionKernel(GradedModule q, SubmonoidHandle s);

  const GradedModule& module() const { return q_; }
  const SubmonoidHandle& submonoid() const { return s_; }

  bool is_zero(const ModulePotionElement& a) const;
  bool eq(const ModulePotionElement& a, const ModulePotionElement& b) const;

 private:
  Polynomial encode(const std::vector<Polynomial>& vec) const;
  GradedModule q_;
  SubmonoidHandle s_;
  MonomialOrder order_;
  std::vector<Polynomial> saturated_;  // GB of the encoded, saturated presentation
};

// u = s/s' of degree alpha, both from bar(S); exists whenever S is maximally
// relevant, with the exponents found by represent_as_difference.
struct TwistGenerator {
  GroupElement alpha;
  HomogeneousElement num, den;
  std::vector<unsigned> num_exps, den_exps;  // over the divisor generators of S
};

TwistGenerator twist_generator(const SubmonoidHandle& s, const GroupElement& alpha);

struct NegligibilityEntry {
  std::size_t member = 0;
  bool vanishes = false;
};

struct NegligibilityReport {
  bool negligible = false;  // over the declared family
  std::vector<NegligibilityEntry> entries;
};

// Q_(S) = 0 for every S in F, decided generator by generator through the
// saturation kernel.
NegligibilityReport is_negligible_on_family(const GradedModule& q, const RelevantFamily& f);

}  // namespace gradedproj

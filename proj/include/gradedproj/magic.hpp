#pragma once

#include <string>

#include "gradedproj/potion.hpp"
#include "gradedproj/sampler.hpp"

namespace gradedproj {

// Per generator t of T: n, and elements s, s' of bar(S) (as exponent vectors
// over the divisor generators) with deg(t^n) = deg(s) - deg(s').
struct PotionGenEntry {
  std::size_t t_gen;  // index into T's generators
  unsigned n = 1;
  std::vector<unsigned> s_exps;   // s over divisor generators of bar(S)
  std::vector<unsigned> s1_exps;  // s'
  GroupElement i;                 // deg(s)
  GroupElement i1;                // deg(s')
};

struct PotionGen {
  SubmonoidHandle s;
  SubmonoidHandle t;
  std::vector<PotionGenEntry> entries;
};

// Searches the least n per generator (bounded by the torsion exponent of
// M/M[bar S]) and a difference representation of n*deg(t) over the divisor
// degrees. Requires is_relevant(S).
PotionGen find_potion_gen(const SubmonoidHandle& s, const SubmonoidHandle& t);

// The elements e_t = (t^n * s')/s of A_(S), generating the localization
// submonoid of the second magic statement.
std::vector<PotionElement> gen_submonoid_elements(const PotionGen& g);

// Formal fraction p / prod e_t^denom_exps over A_(S).
struct LocalizationElement {
  PotionElement p;
  std::vector<unsigned> denom_exps;
};

// The isomorphism between the localization of A_(S) at the PotionGen
// submonoid and A_(ST), with explicit forward and backward maps.
class LocalizationEquiv {
 public:
  explicit LocalizationEquiv(PotionGen gen);

  const SubmonoidHandle& st() const { return st_; }
  const PotionGen& potion_gen() const { return gen_; }
  const std::vector<PotionElement>& loc_generators() const { return e_; }
  const std::vector<PotionElement>& loc_generator_inverses() const { return inv_e_; }

  LocalizationElement embed(const PotionElement& over_s) const;  // denominator 1
  PotionElement forward(const LocalizationElement& a) const;     // -> A_(ST)
  LocalizationElement backward(const PotionElement& over_st) const;

  // Equality in the localization: cross-multiply and allow multiplication by
  // a bounded power of the product of the e_t.
  bool loc_eq(const LocalizationElement& a, const LocalizationElement& b,
              unsigned power_bound = 6) const;

  LocalizationElement loc_mul(const LocalizationElement& a, const LocalizationElement& b) const;

 private:
  PotionGen gen_;
  BarPotionEquiv bar_s_;
  SubmonoidProduct st_prod_;
  SubmonoidHandle st_;
  BarPotionEquiv bar_st_;
  std::vector<PotionElement> e_;      // over S
  std::vector<PotionElement> inv_e_;  // over ST, inverse images of the e_t
};

// Ring-level content of the open-immersion statement: A_(S) -> A_(ST) is a
// localization at the finitely many explicit elements e_t.
struct OpenImmersionCertificate {
  PotionGen gen;
  std::vector<PotionElement> elements;  // the e_t over S
  std::string verdict;
};

OpenImmersionCertificate open_immersion_certificate(const SubmonoidHandle& s,
                                                    const SubmonoidHandle& t);

// Pairwise compatibility of the maps A_(g) -> A_(f_i g) -> A_(f_i f_j g) for
// g = f_1 + ... + f_n, checked on deterministic samples.
struct SumCoverPairVerdict {
  std::size_t i = 0, j = 0;
  bool compatible = false;
  unsigned samples = 0;
};
struct SumCoverReport {
  bool ok = false;
  std::string error;  // nonempty when preconditions failed
  std::vector<SumCoverPairVerdict> pairs;
  std::uint64_t seed = 0;
};

SumCoverReport sum_cover_check(const RingHandle& ring,
                               const std::vector<HomogeneousElement>& elements,
                               std::uint64_t seed = 0, unsigned samples = 20);

}  // namespace gradedproj

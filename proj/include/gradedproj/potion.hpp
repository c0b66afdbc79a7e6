#pragma once

#include "gradedproj/submonoid.hpp"

namespace gradedproj {

// Degree-balanced fraction: num and den homogeneous of the common degree,
// den the product of submonoid generators encoded by den_witness.
struct NumDenSameDeg {
  GroupElement deg;
  Polynomial num;
  Polynomial den;
  std::vector<unsigned> den_witness;
};

// Element of the potion A_(S) = (A_S)_0, as an equivalence class of
// NumDenSameDeg triples; equality is decided on demand (potion_eq), no
// canonical representative is computed.
struct PotionElement {
  SubmonoidHandle sub;
  NumDenSameDeg rep;
};

bool same_submonoid(const SubmonoidHandle& a, const SubmonoidHandle& b);

// Validates degrees and witness, then builds the element.
PotionElement make_potion(SubmonoidHandle sub, const GroupElement& deg, Polynomial num,
                          std::vector<unsigned> den_witness);

PotionElement potion_zero(SubmonoidHandle sub);
PotionElement potion_one(SubmonoidHandle sub);
PotionElement potion_constant(SubmonoidHandle sub, const Rat& c);

// n*d' - n'*d annihilated by some element of S, decided through the frozen
// saturation basis of the submonoid.
bool potion_eq(const PotionElement& a, const PotionElement& b);
bool potion_is_zero(const PotionElement& a);

PotionElement potion_add(const PotionElement& a, const PotionElement& b);
PotionElement potion_neg(const PotionElement& a);
PotionElement potion_sub(const PotionElement& a, const PotionElement& b);
PotionElement potion_mul(const PotionElement& a, const PotionElement& b);
PotionElement potion_pow(const PotionElement& a, unsigned e);

// gen = unit * prod target-generators^exps; the certificate backing every
// witness rewrite between submonoids.
struct GenExpr {
  Rat unit = 1;
  std::vector<unsigned> exps;
};

// Rewrites a potion element through per-generator certificates; throws if a
// certificate fails exact verification. Ring homomorphism A_(S) -> A_(target).
PotionElement transport(const PotionElement& a, const SubmonoidHandle& target,
                        const std::vector<GenExpr>& exprs);

// Certificates expressing each generator of `from` as a single generator of
// `into` (exact match), e.g. for S -> ST or generator permutations.
std::optional<std::vector<GenExpr>> inclusion_exprs(const HomogeneousSubmonoid& from,
                                                    const HomogeneousSubmonoid& into);

// Canonical map A_(S) -> A_(ST) of the first magic statement.
PotionElement potion_map(const PotionElement& a, const SubmonoidHandle& product_sub);

// A_(bar S) <-> A_(S). forward rewrites divisor denominators into full
// generators via cofactors; backward expands generator denominators into
// divisors. Mutually inverse up to potion_eq.
class BarPotionEquiv {
 public:
  explicit BarPotionEquiv(SubmonoidHandle s);
  const SubmonoidHandle& base() const { return s_; }
  const SubmonoidHandle& bar() const { return bar_; }
  PotionElement forward(const PotionElement& over_bar) const;
  PotionElement backward(const PotionElement& over_s) const;

 private:
  SubmonoidHandle s_, bar_;
};

// A_(S) <-> A_(T) for submonoids generating the same multiplicative set,
// certified in both directions.
class PotionEquiv {
 public:
  PotionEquiv(SubmonoidHandle s, SubmonoidHandle t, std::vector<GenExpr> s_over_t,
              std::vector<GenExpr> t_over_s);
  // Auto-derives the certificates when every generator matches one on the
  // other side exactly (permutations, deduplicated products).
  static PotionEquiv from_matching(SubmonoidHandle s, SubmonoidHandle t);

  PotionElement forward(const PotionElement& a) const;   // A_(S) -> A_(T)
  PotionElement backward(const PotionElement& b) const;  // A_(T) -> A_(S)

 private:
  SubmonoidHandle s_, t_;
  std::vector<GenExpr> s_over_t_, t_over_s_;
};

std::string describe(const PotionElement& a);

}  // namespace gradedproj

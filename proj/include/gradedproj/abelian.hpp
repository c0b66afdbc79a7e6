#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "gradedproj/matrix.hpp"
#include "gradedproj/numeric.hpp"

namespace gradedproj {

// Element of a finitely generated abelian group Z^r (+) Z/d_1 (+) ... (+) Z/d_k.
// Torsion entries are kept as canonical residues in [0, d_i).
struct GroupElement {
  std::vector<Int> free_part;
  std::vector<Int> torsion_part;

  bool operator==(const GroupElement&) const = default;
  // Total order for use as a map key; lexicographic on (free, torsion).
  std::weak_ordering operator<=>(const GroupElement&) const = default;
};

// Z^rank (+) Z/d_1 (+) ... (+) Z/d_k with 2 <= d_1 | d_2 | ... | d_k.
class FgAbelianGroup {
 public:
  FgAbelianGroup() : rank_(0) {}
  FgAbelianGroup(std::size_t rank, std::vector<Int> invariants);

  std::size_t rank() const { return rank_; }
  const std::vector<Int>& invariants() const { return invariants_; }
  std::size_t torsion_size() const { return invariants_.size(); }
  std::size_t dim() const { return rank_ + invariants_.size(); }

  GroupElement zero() const;
  // Builds an element from raw coordinates (torsion entries reduced).
  GroupElement element(std::vector<Int> free_part, std::vector<Int> torsion_part) const;
  GroupElement element(const std::vector<Int>& coords) const;  // length dim(), free then torsion

  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement sub(const GroupElement& a, const GroupElement& b) const;
  GroupElement scale(const Int& n, const GroupElement& a) const;
  bool is_zero(const GroupElement& a) const;

  bool operator==(const FgAbelianGroup&) const = default;

  std::string describe() const;

 private:
  std::size_t rank_;
  std::vector<Int> invariants_;
};

struct SubgroupPresentation {
  FgAbelianGroup ambient;
  std::vector<GroupElement> generators;
};

struct QuotientInvariants {
  std::size_t free_rank = 0;
  std::vector<Int> invariants;  // entries >= 2, divisibility chain
};

// Rank and invariant factors of ambient/<generators>, by SNF of the relation
// matrix [generators | torsion relations].
QuotientInvariants quotient_invariants(const SubgroupPresentation& h);

bool is_torsion_quotient(const SubgroupPresentation& h);

// Least N > 0 with N*m in <generators> for every m, when the quotient is
// torsion (= lcm of the quotient invariants); nullopt otherwise.
std::optional<Int> torsion_exponent(const SubgroupPresentation& h);

struct DifferenceRepresentation {
  std::vector<Int> plus;   // nonnegative, one entry per monoid generator
  std::vector<Int> minus;  // nonnegative
};

// Writes target as sum (plus_i - minus_i) * gens_i when target lies in the
// subgroup generated by gens; nullopt encodes non-membership.
std::optional<DifferenceRepresentation> represent_as_difference(
    const FgAbelianGroup& group, const GroupElement& target,
    const std::vector<GroupElement>& gens);

std::string to_string(const GroupElement& e);

}  // namespace gradedproj

#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "gradedproj/magic.hpp"

namespace gradedproj {

// A declared family of relevant finitely generated homogeneous submonoids;
// one chart per member.
struct RelevantFamily {
  RingHandle ring;
  std::vector<SubmonoidHandle> members;

  static RelevantFamily make(RingHandle ring, std::vector<SubmonoidHandle> members);
};

struct OverlapData {
  std::size_t i = 0, j = 0;              // ordered pair of member indices
  OpenImmersionCertificate cert;         // D+(S_i S_j) inside D+(S_i)
};

struct TripleVerdict {
  std::size_t i = 0, j = 0, k = 0;
  bool ok = false;
  unsigned samples = 0;
};

// Charts plus the pairwise and triple gluing evidence. Chart i is the potion
// ring of family.members[i]; transitions live in the overlap certificates.
struct ChartAtlas {
  RelevantFamily family;
  std::vector<OverlapData> overlaps;     // all ordered pairs i != j
  std::vector<TripleVerdict> cocycles;   // all i < j < k
  bool symmetry_ok = false;              // SS = S and ST = TS round trips
  bool ok = false;
  std::uint64_t seed = 0;
};

ChartAtlas build_atlas(const RelevantFamily& f, std::uint64_t seed = 0, unsigned samples = 20);

// The submonoid generated by the variable-substitution images of the
// generators of `sub` (no normal forms, so factorizations stay exact).
SubmonoidHandle map_submonoid(const GradedRingHom& psi, const HomogeneousSubmonoid& sub);

// Image of a potion element under a graded hom: substitute on the numerator,
// keep the witness over the image submonoid.
PotionElement map_potion(const GradedRingHom& psi, const SubmonoidHandle& image,
                         const PotionElement& a);

struct FunctorialityEntry {
  std::size_t member = 0;
  bool ok = false;
  std::string warning;          // set when the member is dropped
  SubmonoidHandle image;        // null when dropped
  bool overlaps_compatible = false;
};

struct FunctorialityReport {
  bool ok = false;              // every retained member passed compatibility
  std::vector<FunctorialityEntry> entries;
  std::uint64_t seed = 0;
};

FunctorialityReport functoriality_map(const GradedRingHom& psi, const RelevantFamily& f,
                                      std::uint64_t seed = 0, unsigned samples = 20);

struct ClosedImmersionResult {
  std::string verdict;          // "surjective" or "inconclusive"
  unsigned samples = 0;
  unsigned lifted = 0;
};

// Surjectivity of A_(S) -> B_(psi(S)) for a variable-surjective psi, by
// lifting sampled numerators through linear algebra on monomial coefficients.
ClosedImmersionResult closed_immersion_check(const GradedRingHom& psi, const SubmonoidHandle& s,
                                             std::uint64_t seed = 0, unsigned samples = 20,
                                             unsigned degree_bound = 12);

// A tensor_Q A' with the product grading M x M'. Stores the coordinate
// change that recanonicalizes the concatenated invariant factors.
class ProductGrading {
 public:
  ProductGrading(const RingHandle& left, const RingHandle& right);

  const RingHandle& ring() const { return ring_; }
  const RingHandle& left() const { return left_; }
  const RingHandle& right() const { return right_; }
  // (old name, new name) for right-hand variables renamed on collision.
  const std::vector<std::pair<std::string, std::string>>& renames() const { return renames_; }

  GroupElement embed_left(const GroupElement& a) const;
  GroupElement embed_right(const GroupElement& b) const;
  // Variable-index remaps into the product ring.
  Polynomial remap_left(const Polynomial& p) const;
  Polynomial remap_right(const Polynomial& p) const;

 private:
  GroupElement embed(const GroupElement& a, bool from_left) const;
  RingHandle left_, right_, ring_;
  FgAbelianGroup group_;
  std::vector<std::pair<std::string, std::string>> renames_;
  IntMatrix torsion_change_;          // U from the SNF of diag(concatenated moduli)
  std::vector<std::size_t> kept_;     // rows of U that survive (D_ii != 1)
};

struct ProductChartResult {
  std::string verdict;          // "pass" or "inconclusive"
  unsigned samples = 0;
  unsigned decomposed = 0;
  SubmonoidHandle chart;        // S*T inside the product ring
};

// Chart-level product claim: the potion of S*T in A tensor A' is generated
// by the images of A_(S) and A'_(T), checked by subalgebra membership on
// deterministic samples.
ProductChartResult product_chart_check(const ProductGrading& pg, const SubmonoidHandle& s,
                                       const SubmonoidHandle& t, std::uint64_t seed = 0,
                                       unsigned samples = 20, unsigned degree_bound = 12);

}  // namespace gradedproj

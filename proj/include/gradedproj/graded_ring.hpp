#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gradedproj/abelian.hpp"
#include "gradedproj/groebner.hpp"
#include "gradedproj/poly.hpp"

namespace gradedproj {

// Generators of an ideal together with a frozen reduced Groebner basis.
struct IdealBasis {
  std::vector<Polynomial> generators;
  std::vector<Polynomial> groebner;  // reduced, grevlex, computed on construction
};

// Homogeneous polynomial with its recorded degree. The zero polynomial is
// homogeneous of every degree, so any recorded degree is allowed for it.
struct HomogeneousElement {
  Polynomial poly;
  GroupElement degree;

  bool operator==(const HomogeneousElement&) const = default;
};

// Result of a homogeneity test: zero (any degree), a single degree, or mixed.
struct Homogeneity {
  enum class Kind { zero, homogeneous, mixed };
  Kind kind = Kind::mixed;
  GroupElement degree;  // meaningful only when kind == homogeneous
};

class GradedRing;
using RingHandle = std::shared_ptr<const GradedRing>;

// A = k[x_1..x_n]/I graded by a finitely generated abelian group via one
// degree per variable; every ideal generator must be homogeneous.
class GradedRing {
 public:
  static RingHandle make(FgAbelianGroup group, std::vector<std::string> var_names,
                         std::vector<GroupElement> var_degrees,
                         std::vector<Polynomial> ideal_generators);

  const FgAbelianGroup& group() const { return group_; }
  const std::vector<std::string>& var_names() const { return var_names_; }
  const std::vector<GroupElement>& var_degrees() const { return var_degrees_; }
  const IdealBasis& ideal() const { return ideal_; }
  std::size_t nvars() const { return var_names_.size(); }

  GroupElement monomial_degree(const Monomial& m) const;
  Homogeneity homogeneity(const Polynomial& p) const;
  bool is_homogeneous_of(const Polynomial& p, const GroupElement& degree) const;
  std::map<GroupElement, HomogeneousElement> homogeneous_components(const Polynomial& p) const;

  // Canonical representative in A = k[x]/I under the fixed grevlex order.
  Polynomial normal_form(const Polynomial& p) const;
  bool eq(const Polynomial& p, const Polynomial& q) const;
  bool is_zero_in_ring(const Polynomial& p) const;

  Polynomial parse(const std::string& text) const { return parse_polynomial(text, var_names_); }
  std::string print(const Polynomial& p) const { return to_string(p, var_names_); }

  // All monomials of the given M-degree with total degree <= bound, in map
  // order. Used by samplers and lift searches.
  std::vector<Monomial> monomials_of_degree(const GroupElement& degree, unsigned bound) const;

  bool same_presentation(const GradedRing& other) const;

 private:
  GradedRing() = default;
  FgAbelianGroup group_;
  std::vector<std::string> var_names_;
  std::vector<GroupElement> var_degrees_;
  IdealBasis ideal_;
};

// Graded ring homomorphism determined by homogeneous variable images of
// matching degrees; well-definedness (ideal maps to ideal) is verified on
// construction.
class GradedRingHom {
 public:
  static GradedRingHom make(RingHandle source, RingHandle target,
                            std::vector<Polynomial> variable_images);
  static GradedRingHom identity(RingHandle ring);

  const RingHandle& source() const { return source_; }
  const RingHandle& target() const { return target_; }
  const std::vector<Polynomial>& images() const { return images_; }

  Polynomial apply(const Polynomial& p) const;
  HomogeneousElement apply(const HomogeneousElement& e) const;
  GradedRingHom compose_after(const GradedRingHom& first) const;  // this o first

 private:
  RingHandle source_, target_;
  std::vector<Polynomial> images_;
};

}  // namespace gradedproj

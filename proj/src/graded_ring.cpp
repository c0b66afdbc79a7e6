#include "gradedproj/graded_ring.hpp"

#include <set>
#include <stdexcept>

namespace gradedproj {

RingHandle GradedRing::make(FgAbelianGroup group, std::vector<std::string> var_names,
                            std::vector<GroupElement> var_degrees,
                            std::vector<Polynomial> ideal_generators) {
  if (var_names.size() != var_degrees.size())
    throw std::invalid_argument("variable/degree count mismatch");
  std::set<std::string> names(var_names.begin(), var_names.end());
  if (names.size() != var_names.size())
    throw std::invalid_argument("variable names must be distinct");
  for (const GroupElement& d : var_degrees)
    if (d.free_part.size() != group.rank() || d.torsion_part.size() != group.torsion_size())
      throw std::invalid_argument("variable degree not in grading group");

  auto ring = std::shared_ptr<GradedRing>(new GradedRing());
  ring->group_ = std::move(group);
  ring->var_names_ = std::move(var_names);
  ring->var_degrees_ = std::move(var_degrees);
  for (const Polynomial& g : ideal_generators) {
    if (g.nvars() != ring->nvars())
      throw std::invalid_argument("ideal generator over wrong variable set");
    if (ring->homogeneity(g).kind == Homogeneity::Kind::mixed)
      throw std::invalid_argument("ideal generator is not homogeneous: " + ring->print(g));
  }
  ring->ideal_.generators = std::move(ideal_generators);
  ring->ideal_.groebner =
      groebner_basis(ring->ideal_.generators, MonomialOrder::grevlex(ring->nvars()));
  return ring;
}

GroupElement GradedRing::monomial_degree(const Monomial& m) const {
  GroupElement acc = group_.zero();
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] > 0) acc = group_.add(acc, group_.scale(Int(m[i]), var_degrees_[i]));
  return acc;
}

Homogeneity GradedRing::homogeneity(const Polynomial& p) const {
  if (p.is_zero()) return {Homogeneity::Kind::zero, group_.zero()};
  std::optional<GroupElement> deg;
  for (const auto& [m, c] : p.terms()) {
    GroupElement d = monomial_degree(m);
    if (!deg) {
      deg = d;
    } else if (*deg != d) {
      return {Homogeneity::Kind::mixed, group_.zero()};
    }
  }
  return {Homogeneity::Kind::homogeneous, *deg};
}

bool GradedRing::is_homogeneous_of(const Polynomial& p, const GroupElement& degree) const {
  Homogeneity h = homogeneity(p);
  if (h.kind == Homogeneity::Kind::zero) return true;
  return h.kind == Homogeneity::Kind::homogeneous && h.degree == degree;
}

std::map<GroupElement, HomogeneousElement> GradedRing::homogeneous_components(
    const Polynomial& p) const {
  std::map<GroupElement, HomogeneousElement> out;
  for (const auto& [m, c] : p.terms()) {
    GroupElement d = monomial_degree(m);
    auto it = out.find(d);
    if (it == out.end()) {
      HomogeneousElement e{Polynomial::term(p.nvars(), m, c), d};
      out.emplace(d, std::move(e));
    } else {
      it->second.poly.add_term(m, c);
    }
  }
  return out;
}

Polynomial GradedRing::normal_form(const Polynomial& p) const {
  return gradedproj::normal_form(p, ideal_.groebner, MonomialOrder::grevlex(nvars()));
}

bool GradedRing::eq(const Polynomial& p, const Polynomial& q) const {
  return normal_form(p - q).is_zero();
}

bool GradedRing::is_zero_in_ring(const Polynomial& p) const { return normal_form(p).is_zero(); }

std::vector<Monomial> GradedRing::monomials_of_degree(const GroupElement& degree,
                                                      unsigned bound) const {
  std::vector<Monomial> out;
  Monomial current(nvars(), 0);
  // DFS over exponent vectors with total degree bound.
  auto rec = [&](auto&& self, std::size_t var, unsigned remaining) -> void {
    if (var == nvars()) {
      if (monomial_degree(current) == degree) out.push_back(current);
      return;
    }
    for (unsigned e = 0; e <= remaining; ++e) {
      current[var] = e;
      self(self, var + 1, remaining - e);
    }
    current[var] = 0;
  };
  rec(rec, 0, bound);
  return out;
}

bool GradedRing::same_presentation(const GradedRing& other) const {
  return group_ == other.group_ && var_names_ == other.var_names_ &&
         var_degrees_ == other.var_degrees_ && ideal_.generators == other.ideal_.generators;
}

GradedRingHom GradedRingHom::make(RingHandle source, RingHandle target,
                                  std::vector<Polynomial> variable_images) {
  if (variable_images.size() != source->nvars())
    throw std::invalid_argument("one image per source variable required");
  if (!(source->group() == target->group()))
    throw std::invalid_argument("graded hom requires a common grading group");
  for (std::size_t i = 0; i < variable_images.size(); ++i) {
    if (variable_images[i].nvars() != target->nvars())
      throw std::invalid_argument("variable image over wrong variable set");
    if (!target->is_homogeneous_of(variable_images[i], source->var_degrees()[i]))
      throw std::invalid_argument("image of variable '" + source->var_names()[i] +
                                  "' has the wrong degree");
  }
  GradedRingHom hom;
  hom.source_ = std::move(source);
  hom.target_ = std::move(target);
  hom.images_ = std::move(variable_images);
  for (const Polynomial& g : hom.source_->ideal().generators) {
    if (!hom.target_->is_zero_in_ring(substitute(g, hom.images_)))
      throw std::invalid_argument("ideal generator not mapped into target ideal: " +
                                  hom.source_->print(g));
  }
  return hom;
}

GradedRingHom GradedRingHom::identity(RingHandle ring) {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    images.push_back(Polynomial::variable(ring->nvars(), i));
  return make(ring, ring, std::move(images));
}

Polynomial GradedRingHom::apply(const Polynomial& p) const {
  if (source_->nvars() == 0) {
    // constants embed directly
    Polynomial out(target_->nvars());
    for (const auto& [m, c] : p.terms()) out.add_term(Monomial(target_->nvars(), 0), c);
    return target_->normal_form(out);
  }
  return target_->normal_form(substitute(p, images_));
}

HomogeneousElement GradedRingHom::apply(const HomogeneousElement& e) const {
  return {apply(e.poly), e.degree};
}

GradedRingHom GradedRingHom::compose_after(const GradedRingHom& first) const {
  if (first.target_.get() != source_.get() && !first.target_->same_presentation(*source_))
    throw std::invalid_argument("composition mismatch");
  std::vector<Polynomial> images;
  for (const Polynomial& im : first.images_) images.push_back(apply(im));
  GradedRingHom hom;
  hom.source_ = first.source_;
  hom.target_ = target_;
  hom.images_ = std::move(images);
  return hom;
}

}  // namespace gradedproj

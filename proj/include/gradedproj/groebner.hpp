#pragma once

#include <vector>

#include "gradedproj/poly.hpp"

namespace gradedproj {

// Block monomial order: variables in block 0 are compared first (grevlex
// within each block), so block 0 is eliminated. An empty block assignment
// means plain grevlex on all variables.
class MonomialOrder {
 public:
  static MonomialOrder grevlex(std::size_t nvars) { return MonomialOrder(nvars, {}); }
  // Eliminates the given variables (block 0); the rest form block 1.
  static MonomialOrder eliminating(std::size_t nvars, const std::vector<std::size_t>& elim);

  // true if a < b in the order
  bool less(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return less(b, a); }

  std::size_t nvars() const { return nvars_; }

 private:
  MonomialOrder(std::size_t nvars, std::vector<std::size_t> elim)
      : nvars_(nvars), elim_(std::move(elim)) {}
  std::size_t nvars_;
  std::vector<std::size_t> elim_;  // sorted indices of block-0 variables
};

struct Term {
  Monomial mono;
  Rat coeff;
};

// Leading term with respect to the order; polynomial must be nonzero.
Term leading_term(const Polynomial& p, const MonomialOrder& order);

// Full multivariate division remainder of p by the (not necessarily Groebner)
// list of nonzero divisors.
Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& divisors,
                  const MonomialOrder& order);

// Reduced Groebner basis: monic, inter-reduced, sorted by leading monomial.
// Deterministic for fixed input. Zero generators are dropped; an empty ideal
// yields an empty basis.
std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens,
                                       const MonomialOrder& order);

// Unique normal form of p modulo the ideal with the given *Groebner* basis.
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& gb,
                       const MonomialOrder& order);

bool in_ideal(const Polynomial& p, const std::vector<Polynomial>& gb, const MonomialOrder& order);

// Generators of I : f^infinity by the auxiliary-variable method (adjoin z,
// add z*f - 1, eliminate z). Output is a reduced Groebner basis in the
// original variables under grevlex.
std::vector<Polynomial> saturate(const std::vector<Polynomial>& gens, const Polynomial& f);

// Exact dense linear solve A*x = b over Q (Gaussian elimination). Returns
// false if inconsistent; free variables are set to 0.
bool solve_rational_linear(std::vector<std::vector<Rat>> a, std::vector<Rat> b,
                           std::vector<Rat>& x);

}  // namespace gradedproj

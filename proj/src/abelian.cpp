#include "gradedproj/abelian.hpp"

#include <sstream>
#include <stdexcept>

namespace gradedproj {

FgAbelianGroup::FgAbelianGroup(std::size_t rank, std::vector<Int> invariants)
    : rank_(rank), invariants_(std::move(invariants)) {
  for (std::size_t i = 0; i < invariants_.size(); ++i) {
    if (invariants_[i] < 2) throw std::invalid_argument("invariant factors must be >= 2");
    if (i > 0 && invariants_[i] % invariants_[i - 1] != 0)
      throw std::invalid_argument("invariant factors must form a divisibility chain");
  }
}

GroupElement FgAbelianGroup::zero() const {
  return {std::vector<Int>(rank_, Int(0)), std::vector<Int>(invariants_.size(), Int(0))};
}

GroupElement FgAbelianGroup::element(std::vector<Int> free_part,
                                     std::vector<Int> torsion_part) const {
  if (free_part.size() != rank_ || torsion_part.size() != invariants_.size())
    throw std::invalid_argument("element coordinates have wrong length");
  for (std::size_t i = 0; i < torsion_part.size(); ++i)
    torsion_part[i] = int_mod_canonical(torsion_part[i], invariants_[i]);
  return {std::move(free_part), std::move(torsion_part)};
}

GroupElement FgAbelianGroup::element(const std::vector<Int>& coords) const {
  if (coords.size() != dim()) throw std::invalid_argument("element coordinates have wrong length");
  return element(std::vector<Int>(coords.begin(), coords.begin() + rank_),
                 std::vector<Int>(coords.begin() + rank_, coords.end()));
}

GroupElement FgAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  GroupElement out = a;
  for (std::size_t i = 0; i < rank_; ++i) out.free_part[i] += b.free_part[i];
  for (std::size_t i = 0; i < invariants_.size(); ++i)
    out.torsion_part[i] = int_mod_canonical(out.torsion_part[i] + b.torsion_part[i], invariants_[i]);
  return out;
}

GroupElement FgAbelianGroup::neg(const GroupElement& a) const {
  GroupElement out = a;
  for (std::size_t i = 0; i < rank_; ++i) out.free_part[i] = -out.free_part[i];
  for (std::size_t i = 0; i < invariants_.size(); ++i)
    out.torsion_part[i] = int_mod_canonical(-out.torsion_part[i], invariants_[i]);
  return out;
}

GroupElement FgAbelianGroup::sub(const GroupElement& a, const GroupElement& b) const {
  return add(a, neg(b));
}

GroupElement FgAbelianGroup::scale(const Int& n, const GroupElement& a) const {
  GroupElement out = a;
  for (std::size_t i = 0; i < rank_; ++i) out.free_part[i] *= n;
  for (std::size_t i = 0; i < invariants_.size(); ++i)
    out.torsion_part[i] = int_mod_canonical(out.torsion_part[i] * n, invariants_[i]);
  return out;
}

bool FgAbelianGroup::is_zero(const GroupElement& a) const { return a == zero(); }

std::string FgAbelianGroup::describe() const {
  std::ostringstream os;
  os << "Z^" << rank_;
  for (const Int& d : invariants_) os << " + Z/" << d;
  return os.str();
}

namespace {

// Relation matrix for ambient/<gens>: columns are the subgroup generators
// lifted to Z^dim plus the torsion relations d_i * e_{rank+i}.
IntMatrix relation_matrix(const SubgroupPresentation& h) {
  const FgAbelianGroup& g = h.ambient;
  const std::size_t n = g.dim();
  const std::size_t k = g.torsion_size();
  IntMatrix m(n, h.generators.size() + k);
  for (std::size_t c = 0; c < h.generators.size(); ++c) {
    const GroupElement& e = h.generators[c];
    if (e.free_part.size() != g.rank() || e.torsion_part.size() != k)
      throw std::invalid_argument("subgroup generator not in ambient group");
    for (std::size_t i = 0; i < g.rank(); ++i) m.at(i, c) = e.free_part[i];
    for (std::size_t i = 0; i < k; ++i) m.at(g.rank() + i, c) = e.torsion_part[i];
  }
  for (std::size_t i = 0; i < k; ++i)
    m.at(g.rank() + i, h.generators.size() + i) = g.invariants()[i];
  return m;
}

}  // namespace

QuotientInvariants quotient_invariants(const SubgroupPresentation& h) {
  const std::size_t n = h.ambient.dim();
  IntMatrix m = relation_matrix(h);
  SmithDecomposition snf = smith_normal_form(m);
  QuotientInvariants out;
  std::size_t nonzero = 0;
  const std::size_t steps = std::min(m.rows(), m.cols());
  for (std::size_t i = 0; i < steps; ++i) {
    const Int& d = snf.d.at(i, i);
    if (d == 0) continue;
    ++nonzero;
    if (d >= 2) out.invariants.push_back(d);
  }
  out.free_rank = n - nonzero;
  return out;
}

bool is_torsion_quotient(const SubgroupPresentation& h) {
  return quotient_invariants(h).free_rank == 0;
}

std::optional<Int> torsion_exponent(const SubgroupPresentation& h) {
  QuotientInvariants q = quotient_invariants(h);
  if (q.free_rank != 0) return std::nullopt;
  Int n = 1;
  for (const Int& d : q.invariants) n = int_lcm(n, d);
  return n;
}

std::optional<DifferenceRepresentation> represent_as_difference(
    const FgAbelianGroup& group, const GroupElement& target,
    const std::vector<GroupElement>& gens) {
  SubgroupPresentation h{group, gens};
  IntMatrix m = relation_matrix(h);
  std::vector<Int> b(group.dim(), Int(0));
  for (std::size_t i = 0; i < group.rank(); ++i) b[i] = target.free_part[i];
  for (std::size_t i = 0; i < group.torsion_size(); ++i)
    b[group.rank() + i] = target.torsion_part[i];
  bool solvable = false;
  std::vector<Int> x = solve_linear_diophantine(m, b, solvable);
  if (!solvable) return std::nullopt;
  DifferenceRepresentation out;
  out.plus.resize(gens.size(), Int(0));
  out.minus.resize(gens.size(), Int(0));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (x[i] > 0)
      out.plus[i] = x[i];
    else
      out.minus[i] = -x[i];
  }
  return out;
}

std::string to_string(const GroupElement& e) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (const Int& v : e.free_part) {
    if (!first) os << ",";
    os << v;
    first = false;
  }
  for (const Int& v : e.torsion_part) {
    if (!first) os << ",";
    os << v << "t";
    first = false;
  }
  os << ")";
  return os.str();
}

}  // namespace gradedproj

#include "gradedproj/groebner.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace gradedproj {

MonomialOrder MonomialOrder::eliminating(std::size_t nvars, const std::vector<std::size_t>& elim) {
  std::vector<std::size_t> e = elim;
  std::sort(e.begin(), e.end());
  return MonomialOrder(nvars, std::move(e));
}

namespace {

// grevlex on the sub-vector of entries at `idx` (all entries if idx empty is
// handled by the caller passing the full index list).
int grevlex_cmp(const Monomial& a, const Monomial& b, const std::vector<std::size_t>& idx) {
  unsigned da = 0, db = 0;
  for (std::size_t i : idx) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  // last differing position: smaller exponent => greater monomial
  for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
    if (a[*it] != b[*it]) return a[*it] > b[*it] ? -1 : 1;
  }
  return 0;
}

}  // namespace

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
  if (elim_.empty()) {
    std::vector<std::size_t> all(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) all[i] = i;
    return grevlex_cmp(a, b, all) < 0;
  }
  int c = grevlex_cmp(a, b, elim_);
  if (c != 0) return c < 0;
  std::vector<std::size_t> rest;
  rest.reserve(nvars_);
  std::size_t k = 0;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (k < elim_.size() && elim_[k] == i) {
      ++k;
      continue;
    }
    rest.push_back(i);
  }
  return grevlex_cmp(a, b, rest) < 0;
}

Term leading_term(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) throw std::invalid_argument("leading_term of zero polynomial");
  auto it = p.terms().begin();
  const Monomial* best = &it->first;
  const Rat* coeff = &it->second;
  for (++it; it != p.terms().end(); ++it) {
    if (order.less(*best, it->first)) {
      best = &it->first;
      coeff = &it->second;
    }
  }
  return {*best, *coeff};
}

Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& divisors,
                  const MonomialOrder& order) {
  std::vector<Term> lts;
  lts.reserve(divisors.size());
  for (const Polynomial& d : divisors) lts.push_back(leading_term(d, order));

  Polynomial rem(p.nvars());
  Polynomial work = p;
  while (!work.is_zero()) {
    Term lt = leading_term(work, order);
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (!mono_divides(lts[i].mono, lt.mono)) continue;
      Monomial q = mono_div(lt.mono, lts[i].mono);
      Rat c = lt.coeff / lts[i].coeff;
      work = work - divisors[i] * Polynomial::term(p.nvars(), q, c);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.add_term(lt.mono, lt.coeff);
      Polynomial lt_poly = Polynomial::term(p.nvars(), lt.mono, lt.coeff);
      work = work - lt_poly;
    }
  }
  return rem;
}

namespace {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  Term lf = leading_term(f, order);
  Term lg = leading_term(g, order);
  Monomial l = mono_lcm(lf.mono, lg.mono);
  Polynomial a = Polynomial::term(f.nvars(), mono_div(l, lf.mono), Rat(1) / lf.coeff);
  Polynomial b = Polynomial::term(g.nvars(), mono_div(l, lg.mono), Rat(1) / lg.coeff);
  return f * a - g * b;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

}  // namespace

std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens,
                                       const MonomialOrder& order) {
  std::vector<Polynomial> basis;
  for (const Polynomial& g : gens)
    if (!g.is_zero()) basis.push_back(g);
  if (basis.empty()) return {};

  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto add_pairs = [&](std::size_t upto) {
    for (std::size_t i = 0; i < upto; ++i) pending.insert({i, upto});
  };
  for (std::size_t j = 1; j < basis.size(); ++j) add_pairs(j);

  std::set<std::pair<std::size_t, std::size_t>> done;
  while (!pending.empty()) {
    auto [i, j] = *pending.begin();
    pending.erase(pending.begin());
    done.insert({i, j});
    Term li = leading_term(basis[i], order);
    Term lj = leading_term(basis[j], order);
    if (coprime(li.mono, lj.mono)) continue;  // first criterion
    // chain criterion
    Monomial l = mono_lcm(li.mono, lj.mono);
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == i || k == j) continue;
      if (!mono_divides(leading_term(basis[k], order).mono, l)) continue;
      auto p1 = std::minmax(i, k);
      auto p2 = std::minmax(j, k);
      if (done.count({p1.first, p1.second}) && done.count({p2.first, p2.second})) skip = true;
    }
    if (skip) continue;

    Polynomial s = reduce(s_polynomial(basis[i], basis[j], order), basis, order);
    if (s.is_zero()) continue;
    basis.push_back(s);
    add_pairs(basis.size() - 1);
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Monomial lm = leading_term(basis[i], order).mono;
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      Monomial lmj = leading_term(basis[j], order).mono;
      if (mono_divides(lmj, lm) && (lmj != lm || j < i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // Inter-reduce and make monic.
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial r = others.empty() ? minimal[i] : reduce(minimal[i], others, order);
    if (r.is_zero()) continue;
    Term lt = leading_term(r, order);
    reduced.push_back(r * (Rat(1) / lt.coeff));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.less(leading_term(a, order).mono, leading_term(b, order).mono);
  });
  return reduced;
}

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& gb,
                       const MonomialOrder& order) {
  if (gb.empty()) return p;
  return reduce(p, gb, order);
}

bool in_ideal(const Polynomial& p, const std::vector<Polynomial>& gb, const MonomialOrder& order) {
  return normal_form(p, gb, order).is_zero();
}

std::vector<Polynomial> saturate(const std::vector<Polynomial>& gens, const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("saturate by zero");
  const std::size_t n = f.nvars();
  // Auxiliary variable z appended at index n.
  std::vector<std::size_t> id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = i;
  std::vector<Polynomial> lifted;
  for (const Polynomial& g : gens)
    if (!g.is_zero()) lifted.push_back(remap_variables(g, n + 1, id));
  Polynomial zf = remap_variables(f, n + 1, id) * Polynomial::variable(n + 1, n);
  lifted.push_back(zf - Polynomial::constant(n + 1, 1));

  MonomialOrder elim = MonomialOrder::eliminating(n + 1, {n});
  std::vector<Polynomial> gb = groebner_basis(lifted, elim);

  std::vector<Polynomial> kept;
  for (const Polynomial& g : gb) {
    bool has_z = false;
    for (const auto& [m, c] : g.terms())
      if (m[n] > 0) has_z = true;
    if (has_z) continue;
    Polynomial down(n);
    for (const auto& [m, c] : g.terms()) down.add_term(Monomial(m.begin(), m.begin() + n), c);
    kept.push_back(down);
  }
  return groebner_basis(kept, MonomialOrder::grevlex(n));
}

bool solve_rational_linear(std::vector<std::vector<Rat>> a, std::vector<Rat> b,
                           std::vector<Rat>& x) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t p = rank;
    while (p < rows && a[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    std::swap(b[p], b[rank]);
    Rat inv = Rat(1) / a[rank][col];
    for (std::size_t j = col; j < cols; ++j) a[rank][j] *= inv;
    b[rank] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[rank][j];
      b[i] -= f * b[rank];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t i = rank; i < rows; ++i)
    if (b[i] != 0) return false;
  x.assign(cols, Rat(0));
  for (std::size_t i = 0; i < rank; ++i) x[pivot_col[i]] = b[i];
  return true;
}

}  // namespace gradedproj

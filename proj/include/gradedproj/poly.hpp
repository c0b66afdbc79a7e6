#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gradedproj/numeric.hpp"

namespace gradedproj {

// Exponent vector; length equals the ambient variable count.
using Monomial = std::vector<unsigned>;

inline unsigned total_degree(const Monomial& m) {
  unsigned s = 0;
  for (unsigned e : m) s += e;
  return s;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Monomial mono_div(const Monomial& b, const Monomial& a) {
  Monomial out = b;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= a[i];
  return out;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t i = 0; i < out.size(); ++i)
    if (b[i] > out[i]) out[i] = b[i];
  return out;
}

// Multivariate polynomial over Q. Terms are kept in a sorted map with no zero
// coefficients, so representation is canonical and iteration deterministic.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rat>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rat& c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_[Monomial(nvars, 0)] = c;
    return p;
  }
  static Polynomial variable(std::size_t nvars, std::size_t index, unsigned exp = 1) {
    Polynomial p(nvars);
    Monomial m(nvars, 0);
    m[index] = exp;
    p.terms_[m] = 1;
    return p;
  }
  static Polynomial term(std::size_t nvars, const Monomial& m, const Rat& c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_[m] = c;
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
  }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_[m] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rat& c) const;
  Polynomial pow(unsigned e) const;

  bool operator==(const Polynomial& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

 private:
  void check_compatible(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial variable sets differ");
  }
  std::size_t nvars_;
  TermMap terms_;
};

// Substitutes images[i] for variable i; images live in a ring with any
// variable count, all equal.
Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images);

// Embeds p into a larger variable set; var_map[i] gives the new index of old
// variable i.
Polynomial remap_variables(const Polynomial& p, std::size_t new_nvars,
                           const std::vector<std::size_t>& var_map);

// Parses sums/differences/products/powers of rational constants and declared
// variables; parentheses allowed. Throws std::runtime_error with a position
// on malformed input.
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars);

std::string to_string(const Polynomial& p, const std::vector<std::string>& vars);
std::string to_string(const Rat& r);

}  // namespace gradedproj

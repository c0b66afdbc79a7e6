#include "gradedproj/poly.hpp"

#include <cctype>
#include <sstream>

namespace gradedproj {

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_compatible(o);
  Polynomial out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_compatible(o);
  Polynomial out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) out.terms_[m] = -c;
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(o);
  Polynomial out(nvars_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) out.add_term(mono_mul(m1, m2), c1 * c2);
  return out;
}

Polynomial Polynomial::operator*(const Rat& c) const {
  Polynomial out(nvars_);
  if (c == 0) return out;
  for (const auto& [m, k] : terms_) out.terms_[m] = k * c;
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial out = Polynomial::constant(nvars_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) out = out * base;
    base = base * base;
    e >>= 1u;
  }
  return out;
}

Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images) {
  if (images.size() != p.nvars()) throw std::invalid_argument("substitute: image count mismatch");
  std::size_t target_nvars = images.empty() ? 0 : images[0].nvars();
  Polynomial out(target_nvars);
  for (const auto& [m, c] : p.terms()) {
    Polynomial term = Polynomial::constant(target_nvars, c);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) term = term * images[i].pow(m[i]);
    out = out + term;
  }
  return out;
}

Polynomial remap_variables(const Polynomial& p, std::size_t new_nvars,
                           const std::vector<std::size_t>& var_map) {
  Polynomial out(new_nvars);
  for (const auto& [m, c] : p.terms()) {
    Monomial nm(new_nvars, 0);
    for (std::size_t i = 0; i < m.size(); ++i) nm[var_map[i]] += m[i];
    out.add_term(nm, c);
  }
  return out;
}

namespace {

struct Parser {
  const std::string& text;
  const std::vector<std::string>& vars;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    std::ostringstream os;
    os << "parse error at position " << pos << ": " << msg;
    throw std::runtime_error(os.str());
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }
  bool accept(char c) {
    if (peek(c)) {
      ++pos;
      return true;
    }
    return false;
  }

  Polynomial parse_expr() {
    skip_ws();
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    Polynomial acc = parse_term();
    if (neg) acc = -acc;
    for (;;) {
      skip_ws();
      if (accept('+')) {
        acc = acc + parse_term();
      } else if (accept('-')) {
        acc = acc - parse_term();
      } else {
        return acc;
      }
    }
  }

  Polynomial parse_term() {
    Polynomial acc = parse_factor();
    for (;;) {
      skip_ws();
      if (accept('*')) {
        acc = acc * parse_factor();
      } else {
        return acc;
      }
    }
  }

  Polynomial parse_factor() {
    Polynomial base = parse_atom();
    skip_ws();
    if (accept('^')) {
      skip_ws();
      unsigned e = parse_uint();
      return base.pow(e);
    }
    return base;
  }

  Polynomial parse_atom() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      Polynomial inner = parse_expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int num = parse_int();
      Int den = 1;
      if (accept('/')) {
        skip_ws();
        den = parse_int();
        if (den == 0) fail("zero denominator");
      }
      return Polynomial::constant(vars.size(), Rat(num, den));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
              text[pos] == '\''))
        ++pos;
      std::string name = text.substr(start, pos - start);
      for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return Polynomial::variable(vars.size(), i);
      pos = start;
      fail("unknown variable '" + name + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  Int parse_int() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return Int(text.substr(start, pos - start));
  }

  unsigned parse_uint() {
    Int v = parse_int();
    if (v < 0 || v > 1000000) fail("exponent out of range");
    return static_cast<unsigned>(v);
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars) {
  Parser p{text, vars};
  Polynomial out = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return out;
}

std::string to_string(const Rat& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1) os << "/" << boost::multiprecision::denominator(r);
  return os.str();
}

std::string to_string(const Polynomial& p, const std::vector<std::string>& vars) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Reverse map order: roughly descending, stable for goldens.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    Rat ac = c;
    if (first) {
      if (c < 0) {
        os << "-";
        ac = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      ac = (c < 0) ? Rat(-c) : c;
    }
    first = false;
    bool printed = false;
    if (ac != 1 || total_degree(m) == 0) {
      os << to_string(ac);
      printed = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (printed) os << "*";
      os << vars[i];
      if (m[i] > 1) os << "^" << m[i];
      printed = true;
    }
  }
  return os.str();
}

}  // namespace gradedproj

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace gradedproj {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int int_lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int int_abs(const Int& a) { return boost::multiprecision::abs(a); }

// Quotient of exact division; precondition b != 0 and b | a.
inline Int int_div_exact(const Int& a, const Int& b) { return a / b; }

// Floor division (truncation in C++ rounds toward zero).
inline Int int_div_floor(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

// Canonical residue in [0, m) for m > 0.
inline Int int_mod_canonical(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace gradedproj

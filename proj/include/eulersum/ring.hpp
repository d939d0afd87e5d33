#pragma once

// Coefficient-ring hooks used by the generic series and symbolic code.
// Every coefficient type C provides, findable by ordinary or argument-
// dependent lookup:
//   bool is_zero(const C&);
//   C zero_like(const C&);      // zero carrying the same context
//   C one_like(const C&);
//   C mul_int(const C&, long);
//   C inverse(const C&);        // only needed for series reciprocals
//   C lift_like(const C&, const Rational&);  // embed a rational

#include <stdexcept>

#include "eulersum/polynomial.hpp"

namespace eulersum {

inline bool is_zero(const Rational& r) { return r == 0; }
inline Rational zero_like(const Rational&) { return 0; }
inline Rational one_like(const Rational&) { return 1; }
inline Rational mul_int(const Rational& r, long k) { return Rational(r * k); }
inline Rational inverse(const Rational& r) {
  if (r == 0) throw std::domain_error("inverse of zero");
  return 1 / r;
}

inline Rational lift_like(const Rational&, const Rational& c) { return c; }

}  // namespace eulersum

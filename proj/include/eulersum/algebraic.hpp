#pragma once

// Arithmetic in Q[alpha]/(q) for a monic square-free q. The quotient ring
// need not be a field (q may be reducible), but every element coprime to q
// is invertible, which is all the residue computation needs.

#include <memory>

#include "eulersum/ring.hpp"

namespace eulersum {

class AlgebraicElement {
 public:
  using Modulus = std::shared_ptr<const Polynomial>;

  AlgebraicElement(Modulus modulus, Polynomial value);
  static AlgebraicElement constant(Modulus modulus, const Rational& c);
  static AlgebraicElement generator(Modulus modulus);

  const Polynomial& value() const { return value_; }
  const Modulus& modulus() const { return modulus_; }
  bool is_zero() const { return value_.is_zero(); }

  friend AlgebraicElement operator+(const AlgebraicElement& a, const AlgebraicElement& b);
  friend AlgebraicElement operator-(const AlgebraicElement& a, const AlgebraicElement& b);
  friend AlgebraicElement operator*(const AlgebraicElement& a, const AlgebraicElement& b);
  AlgebraicElement operator-() const { return {modulus_, -value_}; }
  AlgebraicElement scaled(const Rational& c) const { return {modulus_, value_ * c}; }
  friend bool operator==(const AlgebraicElement& a, const AlgebraicElement& b) { return a.value_ == b.value_; }

  /// Throws std::domain_error when the element shares a factor with q.
  AlgebraicElement inverse() const;

  /// Sum of value(root) over all roots of the modulus.
  Rational trace() const;

 private:
  Modulus modulus_;
  Polynomial value_;
};

/// Power sums p_0..p_{n-1} of the roots of a monic polynomial.
std::vector<Rational> newton_power_sums(const Polynomial& monic_q, int n);

inline bool is_zero(const AlgebraicElement& a) { return a.is_zero(); }
inline AlgebraicElement zero_like(const AlgebraicElement& a) { return AlgebraicElement(a.modulus(), {}); }
inline AlgebraicElement one_like(const AlgebraicElement& a) { return AlgebraicElement::constant(a.modulus(), 1); }
inline AlgebraicElement mul_int(const AlgebraicElement& a, long k) { return a.scaled(k); }
inline AlgebraicElement inverse(const AlgebraicElement& a) { return a.inverse(); }
inline AlgebraicElement lift_like(const AlgebraicElement& a, const Rational& c) {
  return AlgebraicElement::constant(a.modulus(), c);
}

}  // namespace eulersum

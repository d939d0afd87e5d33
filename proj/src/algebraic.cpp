#include "eulersum/algebraic.hpp"

#include <algorithm>
#include <stdexcept>

namespace eulersum {

AlgebraicElement::AlgebraicElement(Modulus modulus, Polynomial value)
    : modulus_(std::move(modulus)), value_(std::move(value)) {
  if (!modulus_ || modulus_->degree() < 1) throw std::invalid_argument("algebraic modulus must have degree >= 1");
  if (value_.degree() >= modulus_->degree()) value_ = divmod(value_, *modulus_).remainder;
}

AlgebraicElement AlgebraicElement::constant(Modulus modulus, const Rational& c) {
  return {std::move(modulus), Polynomial::constant(c)};
}

AlgebraicElement AlgebraicElement::generator(Modulus modulus) {
  return {std::move(modulus), Polynomial::monomial(1, 1)};
}

AlgebraicElement operator+(const AlgebraicElement& a, const AlgebraicElement& b) {
  return {a.modulus_, a.value_ + b.value_};
}

AlgebraicElement operator-(const AlgebraicElement& a, const AlgebraicElement& b) {
  return {a.modulus_, a.value_ - b.value_};
}

AlgebraicElement operator*(const AlgebraicElement& a, const AlgebraicElement& b) {
  return {a.modulus_, a.value_ * b.value_};
}

AlgebraicElement AlgebraicElement::inverse() const {
  if (value_.is_zero()) throw std::domain_error("inverse of zero in algebraic extension");
  auto g = poly_xgcd(value_, *modulus_);
  if (!g.gcd.is_one()) throw std::domain_error("element is a zero divisor in the algebraic extension");
  return {modulus_, g.s};
}

std::vector<Rational> newton_power_sums(const Polynomial& q, int n) {
  const int d = q.degree();
  if (d < 1 || q.leading() != 1) throw std::invalid_argument("newton_power_sums needs a monic polynomial");
  // q = x^d + a_{d-1} x^{d-1} + ... + a_0
  std::vector<Rational> p(static_cast<size_t>(std::max(n, 1)));
  p[0] = d;
  for (int k = 1; k < n; ++k) {
    Rational s = 0;
    for (int i = 1; i <= std::min(k - 1, d); ++i) s += q.coeff(d - i) * p[static_cast<size_t>(k - i)];
    if (k <= d) s += k * q.coeff(d - k);
    p[static_cast<size_t>(k)] = -s;
  }
  p.resize(static_cast<size_t>(n));
  return p;
}

Rational AlgebraicElement::trace() const {
  const int d = modulus_->degree();
  const auto p = newton_power_sums(*modulus_, d);
  Rational t = 0;
  for (int j = 0; j <= value_.degree(); ++j) t += value_.coeff(j) * p[static_cast<size_t>(j)];
  return t;
}

}  // namespace eulersum

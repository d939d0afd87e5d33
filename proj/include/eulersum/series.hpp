#pragma once

// Truncated Laurent series over a generic coefficient ring (see ring.hpp).
//
// A series stores the coefficients of u^base .. u^(order-1) and is exact
// modulo O(u^order). Every operation computes the truncation order of its
// result; reading a coefficient at or beyond it throws.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "eulersum/algebraic.hpp"
#include "eulersum/symbolic.hpp"

namespace eulersum {

class TruncationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

template <class C>
class LaurentSeries {
 public:
  /// coeffs[i] is the coefficient of u^(base+i); the series is known up to
  /// O(u^(base + coeffs.size())). `zero` supplies the ring context.
  LaurentSeries(int base, std::vector<C> coeffs, C zero)
      : base_(base), order_(base + static_cast<int>(coeffs.size())), coeffs_(std::move(coeffs)), zero_(std::move(zero)) {
    normalize();
  }
  /// The zero series known up to O(u^order).
  static LaurentSeries zero_series(int order, C zero) { return LaurentSeries(order, {}, std::move(zero)); }

  int base() const { return base_; }
  int order() const { return order_; }
  bool is_zero_series() const { return coeffs_.empty(); }
  const C& zero() const { return zero_; }

  C coeff(int e) const {
    if (e >= order_)
      throw TruncationError("coefficient of u^" + std::to_string(e) + " beyond truncation order " +
                            std::to_string(order_));
    if (e < base_) return zero_;
    return coeffs_[static_cast<size_t>(e - base_)];
  }

  /// Drops terms of exponent >= order.
  LaurentSeries truncated(int order) const {
    if (order >= order_) return *this;
    std::vector<C> c;
    for (int e = base_; e < order; ++e) c.push_back(coeff(e));
    return LaurentSeries(std::min(base_, order), std::move(c), zero_);
  }

  /// Multiplies by u^k.
  LaurentSeries shifted(int k) const {
    LaurentSeries r = *this;
    r.base_ += k;
    r.order_ += k;
    return r;
  }

  LaurentSeries scaled(const C& c) const {
    std::vector<C> out;
    out.reserve(coeffs_.size());
    for (const auto& v : coeffs_) out.push_back(v * c);
    return LaurentSeries(base_, std::move(out), zero_);
  }

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) { return a.combine(b, false); }
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a.combine(b, true); }
  LaurentSeries operator-() const {
    std::vector<C> out;
    for (const auto& v : coeffs_) out.push_back(-v);
    return LaurentSeries(base_, std::move(out), zero_);
  }

  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    const int order = std::min(a.order_ + b.base_, b.order_ + a.base_);
    const int base = std::min(a.base_ + b.base_, order);
    std::vector<C> out;
    out.reserve(static_cast<size_t>(order - base));
    for (int e = base; e < order; ++e) {
      C acc = a.zero_;
      for (int i = a.base_; i <= e - b.base_; ++i) acc = acc + a.coeff(i) * b.coeff(e - i);
      out.push_back(std::move(acc));
    }
    return LaurentSeries(base, std::move(out), a.zero_);
  }

  /// Termwise derivative; the truncation order drops by one.
  LaurentSeries diff() const {
    std::vector<C> out;
    for (int e = base_; e < order_; ++e) out.push_back(mul_int(coeff(e), e));
    return LaurentSeries(base_ - 1, std::move(out), zero_);
  }

  /// Multiplicative inverse; throws if the series is zero to its order or
  /// its lowest coefficient is not invertible.
  LaurentSeries recip() const {
    if (coeffs_.empty()) throw std::domain_error("reciprocal of a series that vanishes to its truncation order");
    const int n = order_ - base_;
    const C inv0 = inverse(coeffs_[0]);
    std::vector<C> d;
    d.reserve(static_cast<size_t>(n));
    d.push_back(inv0);
    for (int k = 1; k < n; ++k) {
      C acc = zero_;
      for (int j = 1; j <= k; ++j) acc = acc + coeffs_[static_cast<size_t>(j)] * d[static_cast<size_t>(k - j)];
      d.push_back(-(acc * inv0));
    }
    return LaurentSeries(-base_, std::move(d), zero_);
  }

  /// Converts every coefficient with f into another ring.
  template <class D, class F>
  LaurentSeries<D> map(F&& f, D zero) const {
    std::vector<D> out;
    for (int e = base_; e < order_; ++e) out.push_back(f(coeff(e)));
    return LaurentSeries<D>(base_, std::move(out), std::move(zero));
  }

  /// Coefficient of u^-1.
  C residue() const { return coeff(-1); }

 private:
  LaurentSeries combine(const LaurentSeries& b, bool subtract) const {
    const int order = std::min(order_, b.order_);
    const int base = std::min(std::min(base_, b.base_), order);
    std::vector<C> out;
    for (int e = base; e < order; ++e) out.push_back(subtract ? C(coeff(e) - b.coeff(e)) : C(coeff(e) + b.coeff(e)));
    return LaurentSeries(base, std::move(out), zero_);
  }

  void normalize() {
    size_t lead = 0;
    while (lead < coeffs_.size() && is_zero(coeffs_[lead])) ++lead;
    if (lead > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
      base_ += static_cast<int>(lead);
    }
  }

  int base_;
  int order_;
  std::vector<C> coeffs_;
  C zero_;
};

using RationalSeries = LaurentSeries<Rational>;
using SymbolicSeries = LaurentSeries<SymbolicExpression>;
using AlgebraicSymPoly = SymPoly<AlgebraicElement>;
using AlgebraicSymbolicSeries = LaurentSeries<AlgebraicSymPoly>;

/// psi(-s) + gamma expanded at s = -t in powers of u = s + t:
///   psi(t) + gamma + sum_{k>=1} (-1)^k psi^(k)(t) / k! u^k  + O(u^order).
/// The psi values are reduced into (0, 1]. Throws for nonpositive integer t.
SymbolicSeries psi_series_at(const Rational& t, int order);

/// psi(-s) + gamma at s = 0: 1/s - sum_{k>=2} zeta(k) s^(k-1) + O(s^order).
SymbolicSeries psi_series_at_zero(int order);

/// psi(-s) + gamma at s = alpha, alpha a root of the modulus, with
/// coefficients in terms of psi(k, -alpha) atoms.
AlgebraicSymbolicSeries psi_series_at_root(const AlgebraicElement::Modulus& modulus, int order);

/// Laurent expansion of P/Q at s = point + u, to O(u^order). `point` is an
/// element of the coefficient ring C (Rational or AlgebraicElement).
template <class C>
LaurentSeries<C> ratfunc_series_at(const Polynomial& num, const Polynomial& den, const C& point, int order);

}  // namespace eulersum

#pragma once

// Bernoulli numbers, digamma, Hurwitz zeta and polygamma at D decimal
// digits. Working precision is bits_for_digits(D).
//
// digamma: shift the argument upward by psi(x+1) = psi(x) + 1/x about
// 0.45*B times, then use the asymptotic series
//   psi(x) ~ log x - 1/(2x) - sum_{k=1}^{n} B_2k / (2k x^2k),  n = 2D.
// Hurwitz zeta: ceil(0.6 D) + 1 direct terms and an Euler-Maclaurin tail
// with up to n = 2D Bernoulli terms.
// Both asymptotic sums stop early once terms fall below the working ulp.

#include <vector>

#include "eulersum/bigfloat.hpp"

namespace eulersum {

struct BernoulliTable {
  int count = 0;                // B_0 .. B_{2 count}
  std::vector<Rational> even;   // even[k] = B_{2k}

  /// B_k for 0 <= k <= 2*count (B_1 = -1/2, odd k > 1 give 0).
  Rational b(int k) const;
};

/// Exact Bernoulli numbers through B_{2n}; computed once via tangent
/// numbers and shared between threads.
BernoulliTable bernoulli_table(int n);

/// Tuning knobs; the defaults are the published scheme.
struct SpecialOptions {
  double shift_factor = 0.45;    // digamma shifts ~ shift_factor * bits
  double hurwitz_factor = 0.6;   // direct Hurwitz terms ~ hurwitz_factor * D
  int bernoulli_terms = 0;       // 0 means 2*D
};

BigFloat digamma_hp(const BigFloat& x, int digits, const SpecialOptions& opt = {});
BigFloat digamma_hp(const Rational& x, int digits, const SpecialOptions& opt = {});
BigComplex digamma_hp(const BigComplex& z, int digits, const SpecialOptions& opt = {});

/// zeta(s, a) = sum_{k>=0} (a+k)^-s for integer s >= 2 and a > 0.
BigFloat hurwitz_zeta_hp(int s, const BigFloat& a, int digits, const SpecialOptions& opt = {});
BigFloat hurwitz_zeta_hp(int s, const Rational& a, int digits, const SpecialOptions& opt = {});

/// psi^(q)(x) for q >= 0 (q = 0 is digamma). Arguments at or below 0 are
/// moved into (0, 1] with the recurrence first.
BigFloat polygamma_hp(int q, const BigFloat& x, int digits, const SpecialOptions& opt = {});
BigFloat polygamma_hp(int q, const Rational& x, int digits, const SpecialOptions& opt = {});
BigComplex polygamma_hp(int q, const BigComplex& z, int digits, const SpecialOptions& opt = {});

/// psi^(0..max_order)(x) sharing the Hurwitz work across orders.
std::vector<BigFloat> polygamma_orders_hp(int max_order, const Rational& x, int digits, const SpecialOptions& opt = {});
std::vector<BigComplex> polygamma_orders_hp(int max_order, const BigComplex& z, int digits,
                                            const SpecialOptions& opt = {});

/// Euler's constant as -psi(1).
BigFloat euler_gamma_hp(int digits);
/// zeta(n) = zeta(n, 1), n >= 2.
BigFloat riemann_zeta_hp(int n, int digits);

}  // namespace eulersum

#pragma once

// Value-semantic wrappers around MPFR. Each value carries its own
// precision; binary operations round to the larger operand precision.

#include <mpfr.h>

#include <string>

#include "eulersum/polynomial.hpp"

namespace eulersum {

/// Working bits for D decimal digits: ceil(D * log2(10)) + 32.
long bits_for_digits(int digits);

class BigFloat {
 public:
  explicit BigFloat(long precision_bits = 64);
  BigFloat(long value, long precision_bits);
  BigFloat(const Rational& value, long precision_bits);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  /// Parses a decimal string; throws std::invalid_argument on bad input.
  static BigFloat from_string(const std::string& s, long precision_bits);
  static BigFloat from_integer(const Integer& z, long precision_bits);

  long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }
  /// Copy rounded to a new precision.
  BigFloat with_precision(long precision_bits) const;

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  /// Binary exponent e with 0.5 <= |x| / 2^e < 1; very negative for 0.
  long exponent() const;
  /// Approximate log10|x|; -1e9 for zero.
  double log10_abs() const;

  BigFloat operator-() const;
  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);
  BigFloat& operator*=(long k);
  BigFloat& operator/=(long k);

  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
  friend BigFloat operator*(BigFloat a, long k) { return a *= k; }
  friend BigFloat operator/(BigFloat a, long k) { return a /= k; }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

  /// Fixed-point decimal with `digits` significant digits, e.g.
  /// "0.8289021434" or "-1.25e-40" for tiny magnitudes.
  std::string to_string(int digits) const;

 private:
  mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat pow_si(const BigFloat& x, long n);
BigFloat const_pi(long precision_bits);
BigFloat const_log(long n, long precision_bits);
/// 10^-d at the given precision.
BigFloat pow10_neg(int d, long precision_bits);

/// Complex number with equal-precision BigFloat parts.
class BigComplex {
 public:
  explicit BigComplex(long precision_bits = 64) : re_(precision_bits), im_(precision_bits) {}
  BigComplex(BigFloat re, BigFloat im);
  explicit BigComplex(const BigFloat& re) : re_(re), im_(0, re.precision()) {}

  const BigFloat& re() const { return re_; }
  const BigFloat& im() const { return im_; }
  BigFloat& re() { return re_; }
  BigFloat& im() { return im_; }
  long precision() const { return re_.precision(); }
  BigComplex with_precision(long bits) const { return {re_.with_precision(bits), im_.with_precision(bits)}; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  BigFloat norm2() const { return re_ * re_ + im_ * im_; }
  BigFloat abs() const { return sqrt(norm2()); }
  BigComplex conj() const { return {re_, -im_}; }

  BigComplex operator-() const { return {-re_, -im_}; }
  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator/=(const BigComplex& o);
  BigComplex& operator*=(const BigFloat& o);
  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
  friend BigComplex operator*(BigComplex a, const BigFloat& b) { return a *= b; }
  friend bool operator==(const BigComplex& a, const BigComplex& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

  BigComplex inverse() const;

 private:
  BigFloat re_;
  BigFloat im_;
};

BigComplex log(const BigComplex& z);
BigComplex pow_si(const BigComplex& z, long n);

// Ring hooks for LaurentSeries<BigComplex>.
inline bool is_zero(const BigComplex& z) { return z.is_zero(); }
inline BigComplex zero_like(const BigComplex& z) { return BigComplex(z.precision()); }
inline BigComplex one_like(const BigComplex& z) { return BigComplex(BigFloat(1, z.precision())); }
inline BigComplex mul_int(const BigComplex& z, long k) { return {z.re() * k, z.im() * k}; }
inline BigComplex inverse(const BigComplex& z) { return z.inverse(); }
inline BigComplex lift_like(const BigComplex& z, const Rational& c) { return BigComplex(BigFloat(c, z.precision())); }

}  // namespace eulersum

#include "eulersum/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace eulersum {

long bits_for_digits(int digits) {
  return static_cast<long>(std::ceil(digits * 3.3219280948873623)) + 32;
}

BigFloat::BigFloat(long precision_bits) {
  mpfr_init2(v_, precision_bits);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long value, long precision_bits) {
  mpfr_init2(v_, precision_bits);
  mpfr_set_si(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& value, long precision_bits) {
  mpfr_init2(v_, precision_bits);
  mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::from_string(const std::string& s, long precision_bits) {
  BigFloat r(precision_bits);
  char* end = nullptr;
  mpfr_strtofr(r.v_, s.c_str(), &end, 10, MPFR_RNDN);
  if (end == s.c_str() || *end != '\0') throw std::invalid_argument("not a decimal number: " + s);
  return r;
}

BigFloat BigFloat::from_integer(const Integer& z, long precision_bits) {
  BigFloat r(precision_bits);
  mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::with_precision(long precision_bits) const {
  BigFloat r(precision_bits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

long BigFloat::exponent() const {
  if (mpfr_zero_p(v_)) return std::numeric_limits<long>::min() / 2;
  return mpfr_get_exp(v_);
}

double BigFloat::log10_abs() const {
  if (mpfr_zero_p(v_)) return -1e9;
  long e = 0;
  const double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
  return std::log10(std::fabs(m)) + static_cast<double>(e) * 0.30102999566398120;
}

namespace {

long joint(const BigFloat& a, const BigFloat& b) { return std::max(a.precision(), b.precision()); }

void widen(BigFloat& a, long bits) {
  if (a.precision() < bits) mpfr_prec_round(a.get(), bits, MPFR_RNDN);
}

}  // namespace

BigFloat BigFloat::operator-() const {
  BigFloat r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  widen(*this, joint(*this, o));
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
  widen(*this, joint(*this, o));
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
  widen(*this, joint(*this, o));
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
  widen(*this, joint(*this, o));
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(long k) {
  mpfr_mul_si(v_, v_, k, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(long k) {
  mpfr_div_si(v_, v_, k, MPFR_RNDN);
  return *this;
}

std::string BigFloat::to_string(int digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return sign() < 0 ? "-inf" : "inf";
  if (mpfr_zero_p(v_)) return "0";
  if (digits < 1) digits = 1;
  mpfr_exp_t e10 = 0;
  char* raw = mpfr_get_str(nullptr, &e10, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
  std::string m(raw);
  mpfr_free_str(raw);
  std::string sign_str;
  if (!m.empty() && m[0] == '-') {
    sign_str = "-";
    m.erase(0, 1);
  }
  // value = 0.m * 10^e10
  if (e10 > 0 && e10 <= static_cast<mpfr_exp_t>(m.size())) {
    std::string ip = m.substr(0, static_cast<size_t>(e10));
    std::string fp = m.substr(static_cast<size_t>(e10));
    return sign_str + ip + (fp.empty() ? "" : "." + fp);
  }
  if (e10 <= 0 && e10 > -20) return sign_str + "0." + std::string(static_cast<size_t>(-e10), '0') + m;
  std::string s = sign_str + m.substr(0, 1);
  if (m.size() > 1) s += "." + m.substr(1);
  return s + "e" + std::to_string(static_cast<long>(e10) - 1);
}

BigFloat abs(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat log(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_log(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat exp(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_exp(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat pow_si(const BigFloat& x, long n) {
  BigFloat r(x.precision());
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

BigFloat const_pi(long precision_bits) {
  BigFloat r(precision_bits);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

BigFloat const_log(long n, long precision_bits) {
  BigFloat r(precision_bits);
  mpfr_set_si(r.get(), n, MPFR_RNDN);
  mpfr_log(r.get(), r.get(), MPFR_RNDN);
  return r;
}

BigFloat pow10_neg(int d, long precision_bits) {
  BigFloat r(10, precision_bits);
  mpfr_pow_si(r.get(), r.get(), -d, MPFR_RNDN);
  return r;
}

BigComplex::BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {
  const long p = std::max(re_.precision(), im_.precision());
  if (re_.precision() != p) re_ = re_.with_precision(p);
  if (im_.precision() != p) im_ = im_.with_precision(p);
}

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
  BigFloat r = re_ * o.re_ - im_ * o.im_;
  BigFloat i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

BigComplex& BigComplex::operator*=(const BigFloat& o) {
  re_ *= o;
  im_ *= o;
  return *this;
}

BigComplex BigComplex::inverse() const {
  if (is_zero()) throw std::domain_error("complex division by zero");
  const BigFloat n = norm2();
  return {re_ / n, -(im_ / n)};
}

BigComplex& BigComplex::operator/=(const BigComplex& o) { return *this *= o.inverse(); }

BigComplex log(const BigComplex& z) {
  BigFloat arg(z.precision());
  mpfr_atan2(arg.get(), z.im().get(), z.re().get(), MPFR_RNDN);
  return {log(z.abs()), std::move(arg)};
}

BigComplex pow_si(const BigComplex& z, long n) {
  if (n < 0) return pow_si(z.inverse(), -n);
  BigComplex result(BigFloat(1, z.precision()));
  BigComplex base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

}  // namespace eulersum

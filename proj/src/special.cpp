#include "eulersum/special.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace eulersum {

namespace {

// Tangent numbers T_1..T_n (Brent and Harvey), then
// B_2k = (-1)^(k-1) 2k T_k / (2^2k (2^2k - 1)).
std::vector<Rational> compute_even_bernoulli(int n) {
  std::vector<Rational> out{Rational(1)};
  if (n < 1) return out;
  std::vector<Integer> t(static_cast<size_t>(n + 1));
  t[1] = 1;
  for (int k = 2; k <= n; ++k) t[static_cast<size_t>(k)] = (k - 1) * t[static_cast<size_t>(k - 1)];
  for (int k = 2; k <= n; ++k)
    for (int j = k; j <= n; ++j)
      t[static_cast<size_t>(j)] = (j - k) * t[static_cast<size_t>(j - 1)] + (j - k + 2) * t[static_cast<size_t>(j)];
  for (int k = 1; k <= n; ++k) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(2 * k));
    Rational b(Integer(2 * k) * t[static_cast<size_t>(k)], p * (p - 1));
    b.canonicalize();
    if (k % 2 == 0) b = -b;
    out.push_back(b);
  }
  return out;
}

std::mutex g_bern_mutex;
std::shared_ptr<const std::vector<Rational>> g_bern_exact;
std::map<long, std::shared_ptr<const std::vector<BigFloat>>> g_bern_float;

std::shared_ptr<const std::vector<Rational>> exact_bernoulli(int n) {
  std::lock_guard<std::mutex> lock(g_bern_mutex);
  if (!g_bern_exact || static_cast<int>(g_bern_exact->size()) <= n) {
    const int have = g_bern_exact ? static_cast<int>(g_bern_exact->size()) - 1 : 0;
    g_bern_exact = std::make_shared<const std::vector<Rational>>(compute_even_bernoulli(std::max(n, 2 * have)));
  }
  return g_bern_exact;
}

// B_2k rounded to `bits`, for k = 0..n at least.
std::shared_ptr<const std::vector<BigFloat>> float_bernoulli(int n, long bits) {
  {
    std::lock_guard<std::mutex> lock(g_bern_mutex);
    auto it = g_bern_float.find(bits);
    if (it != g_bern_float.end() && static_cast<int>(it->second->size()) > n) return it->second;
  }
  const auto exact = exact_bernoulli(n);
  auto v = std::make_shared<std::vector<BigFloat>>();
  for (const auto& b : *exact) v->emplace_back(b, bits);
  std::lock_guard<std::mutex> lock(g_bern_mutex);
  auto& slot = g_bern_float[bits];
  if (!slot || slot->size() < v->size()) slot = v;
  return slot;
}

// Uniform helpers over BigFloat and BigComplex.
BigFloat make_like(const BigFloat& x, long v) { return BigFloat(v, x.precision()); }
BigComplex make_like(const BigComplex& x, long v) { return BigComplex(BigFloat(v, x.precision())); }
BigFloat inv(const BigFloat& x) { return BigFloat(1, x.precision()) / x; }
BigComplex inv(const BigComplex& x) { return x.inverse(); }
const BigFloat& real_part(const BigFloat& x) { return x; }
const BigFloat& real_part(const BigComplex& x) { return x.re(); }
long mag_exp(const BigFloat& x) { return x.exponent(); }
long mag_exp(const BigComplex& x) { return std::max(x.re().exponent(), x.im().exponent()); }
BigFloat to_prec(const BigFloat& x, long bits) { return x.with_precision(bits); }
BigComplex to_prec(const BigComplex& x, long bits) { return x.with_precision(bits); }
bool is_real(const BigFloat&) { return true; }
bool is_real(const BigComplex& x) { return x.im().is_zero(); }

template <class T>
void check_pole(const T& x) {
  if (!is_real(x)) return;
  const BigFloat& r = real_part(x);
  if (r.sign() <= 0 && mpfr_integer_p(r.get())) throw std::domain_error("polygamma pole at a nonpositive integer");
}

int bern_terms(int digits, const SpecialOptions& opt) { return opt.bernoulli_terms > 0 ? opt.bernoulli_terms : 2 * digits; }

template <class T>
T digamma_impl(const T& x_in, int digits, const SpecialOptions& opt) {
  const long bits = bits_for_digits(digits);
  const T x = to_prec(x_in, bits);
  check_pole(x);
  const double re = real_part(x).to_double();
  const long shift = std::max(0L, static_cast<long>(std::ceil(opt.shift_factor * static_cast<double>(bits) - re)));
  T s = make_like(x, 0);
  T xj = x;
  const T one = make_like(x, 1);
  for (long j = 0; j < shift; ++j) {
    s += inv(xj);
    xj += one;
  }
  const T& y = xj;
  const T iy = inv(y);
  T r = log(y) - iy * BigFloat(Rational(1, 2), bits);
  const T w = iy * iy;
  T p = w;
  const int n = bern_terms(digits, opt);
  const auto bern = float_bernoulli(n, bits);
  const long floor_exp = mag_exp(r) - bits - 4;
  for (int k = 1; k <= n; ++k) {
    T term = p * ((*bern)[static_cast<size_t>(k)] / (2L * k));
    r -= term;
    if (mag_exp(term) < floor_exp) break;
    p *= w;
  }
  return r - s;
}

// zeta(s, a) for s = s_lo..s_hi. Leading terms (a+k)^-s are summed directly
// for k < Q + shift, where the shift moves the tail base to Re >= Q + 1 so
// that nonpositive real parts are handled by the same recurrence.
template <class T>
std::vector<T> hurwitz_batch(int s_lo, int s_hi, const T& a_in, int digits, const SpecialOptions& opt) {
  if (s_lo < 2) throw std::domain_error("Hurwitz zeta needs s >= 2");
  const long bits = bits_for_digits(digits);
  const T a = to_prec(a_in, bits);
  check_pole(a);
  const double re = real_part(a).to_double();
  long q = static_cast<long>(std::ceil(opt.hurwitz_factor * digits)) + 1;
  if (re < 1) q += static_cast<long>(std::ceil(1 - re));
  const size_t count = static_cast<size_t>(s_hi - s_lo + 1);
  std::vector<T> out(count, make_like(a, 0));
  const T one = make_like(a, 1);
  T ak = a;
  for (long k = 0; k < q; ++k) {
    const T i = inv(ak);
    T pw = pow_si(i, s_lo);
    for (size_t idx = 0; idx < count; ++idx) {
      out[idx] += pw;
      if (idx + 1 < count) pw *= i;
    }
    ak += one;
  }
  const T w = inv(ak);
  const T w2 = w * w;
  const int n = bern_terms(digits, opt);
  const auto bern = float_bernoulli(n, bits);
  for (size_t idx = 0; idx < count; ++idx) {
    const long s = s_lo + static_cast<long>(idx);
    T& r = out[idx];
    const T ws1 = pow_si(w, s - 1);
    r += ws1 * (BigFloat(1, bits) / (s - 1));
    T ws = ws1 * w;
    r += ws * BigFloat(Rational(1, 2), bits);
    // term_k = B_2k / (2k)! * s (s+1) ... (s+2k-2) * w^(s+2k-1)
    T wpow = ws * w;
    BigFloat coef = BigFloat(s, bits) / 2L;  // s / 2!
    const long floor_exp = mag_exp(r) - bits - 4;
    for (int k = 1; k <= n; ++k) {
      T term = wpow * (coef * (*bern)[static_cast<size_t>(k)]);
      r += term;
      if (mag_exp(term) < floor_exp) break;
      coef *= (s + 2L * k - 1) * (s + 2L * k);
      coef /= (2L * k + 1) * (2L * k + 2);
      wpow *= w2;
    }
  }
  return out;
}

template <class T>
std::vector<T> polygamma_orders_impl(int max_order, const T& x, int digits, const SpecialOptions& opt) {
  std::vector<T> out;
  out.push_back(digamma_impl(x, digits, opt));
  if (max_order < 1) return out;
  auto z = hurwitz_batch(2, max_order + 1, x, digits, opt);
  Integer fact = 1;
  for (int q = 1; q <= max_order; ++q) {
    fact *= q;
    T v = z[static_cast<size_t>(q - 1)] * BigFloat::from_integer(fact, bits_for_digits(digits));
    if (q % 2 == 0) v = -v;
    out.push_back(std::move(v));
  }
  return out;
}

template <class T>
T polygamma_impl(int q, const T& x, int digits, const SpecialOptions& opt) {
  if (q < 0) throw std::domain_error("negative polygamma order");
  if (q == 0) return digamma_impl(x, digits, opt);
  T v = hurwitz_batch(q + 1, q + 1, x, digits, opt)[0];
  Integer fact = 1;
  for (int i = 2; i <= q; ++i) fact *= i;
  v = v * BigFloat::from_integer(fact, bits_for_digits(digits));
  if (q % 2 == 0) v = -v;
  return v;
}

}  // namespace

Rational BernoulliTable::b(int k) const {
  if (k < 0 || k > 2 * count) throw std::out_of_range("Bernoulli index outside table");
  if (k == 1) return Rational(-1, 2);
  if (k % 2 == 1) return 0;
  return even[static_cast<size_t>(k / 2)];
}

BernoulliTable bernoulli_table(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli_table needs n >= 0");
  const auto all = exact_bernoulli(n);
  BernoulliTable t;
  t.count = n;
  t.even.assign(all->begin(), all->begin() + n + 1);
  return t;
}

BigFloat digamma_hp(const BigFloat& x, int digits, const SpecialOptions& opt) { return digamma_impl(x, digits, opt); }

BigFloat digamma_hp(const Rational& x, int digits, const SpecialOptions& opt) {
  if (x <= 0 && x.get_den() == 1) throw std::domain_error("polygamma pole at a nonpositive integer");
  return digamma_impl(BigFloat(x, bits_for_digits(digits)), digits, opt);
}

BigComplex digamma_hp(const BigComplex& z, int digits, const SpecialOptions& opt) { return digamma_impl(z, digits, opt); }

BigFloat hurwitz_zeta_hp(int s, const BigFloat& a, int digits, const SpecialOptions& opt) {
  if (a.sign() <= 0) throw std::domain_error("Hurwitz zeta needs a > 0");
  return hurwitz_batch(s, s, a, digits, opt)[0];
}

BigFloat hurwitz_zeta_hp(int s, const Rational& a, int digits, const SpecialOptions& opt) {
  return hurwitz_zeta_hp(s, BigFloat(a, bits_for_digits(digits)), digits, opt);
}

BigFloat polygamma_hp(int q, const BigFloat& x, int digits, const SpecialOptions& opt) {
  return polygamma_impl(q, x, digits, opt);
}

BigFloat polygamma_hp(int q, const Rational& x, int digits, const SpecialOptions& opt) {
  if (x <= 0 && x.get_den() == 1) throw std::domain_error("polygamma pole at a nonpositive integer");
  return polygamma_impl(q, BigFloat(x, bits_for_digits(digits)), digits, opt);
}

BigComplex polygamma_hp(int q, const BigComplex& z, int digits, const SpecialOptions& opt) {
  return polygamma_impl(q, z, digits, opt);
}

std::vector<BigFloat> polygamma_orders_hp(int max_order, const Rational& x, int digits, const SpecialOptions& opt) {
  if (x <= 0 && x.get_den() == 1) throw std::domain_error("polygamma pole at a nonpositive integer");
  return polygamma_orders_impl(max_order, BigFloat(x, bits_for_digits(digits)), digits, opt);
}

std::vector<BigComplex> polygamma_orders_hp(int max_order, const BigComplex& z, int digits,
                                            const SpecialOptions& opt) {
  return polygamma_orders_impl(max_order, z, digits, opt);
}

BigFloat euler_gamma_hp(int digits) { return -digamma_hp(Rational(1), digits); }

BigFloat riemann_zeta_hp(int n, int digits) {
  if (n < 2) throw std::domain_error("zeta(n) needs n >= 2");
  return hurwitz_zeta_hp(n, Rational(1), digits);
}

}  // namespace eulersum

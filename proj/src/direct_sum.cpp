#include "eulersum/direct_sum.hpp"

#include <algorithm>
#include <cmath>

#include "eulersum/roots.hpp"
#include "eulersum/special.hpp"

namespace eulersum {

long DirectSumConfig::working_bits() const {
  return bits_for_digits(digits) + static_cast<long>(std::ceil(guard_digits * 3.3219280948873623));
}

double max_pole_modulus(const RationalFunction& r) {
  const Polynomial& q = r.denominator();
  if (q.degree() < 1) return 0;
  const Polynomial sqfree = exact_div(q, poly_gcd(q, poly_derivative(q)));
  double m = 0;
  for (const auto& root : find_roots_hp(sqfree, 15)) m = std::max(m, root.abs().to_double());
  return m;
}

BigFloat partial_sum(const RationalFunction& r, long n, long bits) {
  BigFloat sum(bits);
  if (n <= 0 || r.is_zero()) return sum;
  // R = p_int / (scale * q) with integer polynomials.
  Integer scale = 1;
  for (const auto& c : r.numerator().coeffs()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> p, q;
  for (const auto& c : r.numerator().coeffs()) p.push_back(Integer(c * scale));
  for (const auto& c : r.denominator().coeffs()) q.push_back(Integer(c));
  BigFloat h(bits), inv(bits), term(bits);
  Integer pk, qk;
  auto horner = [](const std::vector<Integer>& c, unsigned long k, Integer& out) {
    out = c.back();
    for (size_t i = c.size() - 1; i-- > 0;) {
      mpz_mul_ui(out.get_mpz_t(), out.get_mpz_t(), k);
      out += c[i];
    }
  };
  for (long k = 1; k <= n; ++k) {
    const auto uk = static_cast<unsigned long>(k);
    mpfr_set_ui(inv.get(), 1, MPFR_RNDN);
    mpfr_div_ui(inv.get(), inv.get(), uk, MPFR_RNDN);
    mpfr_add(h.get(), h.get(), inv.get(), MPFR_RNDN);
    horner(p, uk, pk);
    if (pk == 0) continue;
    horner(q, uk, qk);
    if (qk == 0) throw SummabilityError(SummabilityError::Kind::InfiniteSummand);
    qk *= scale;
    mpfr_mul_z(term.get(), h.get(), pk.get_mpz_t(), MPFR_RNDN);
    mpfr_div_z(term.get(), term.get(), qk.get_mpz_t(), MPFR_RNDN);
    mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
  }
  return sum;
}

BigFloat partial_sum(const RationalFunction& r, long n, int digits) { return partial_sum(r, n, bits_for_digits(digits)); }

namespace {

// Exact coefficients r_m of R(x) = sum_{m >= d} r_m x^-m for m = d..max_power.
std::vector<Rational> inverse_power_series(const RationalFunction& r, int max_power, int& first) {
  const Polynomial& p = r.numerator();
  const Polynomial& q = r.denominator();
  first = q.degree() - p.degree();
  std::vector<Rational> out;
  const int count = max_power - first + 1;
  for (int i = 0; i < count; ++i) {
    Rational s = i <= p.degree() ? p.coeff(p.degree() - i) : Rational(0);
    for (int j = 1; j <= std::min(i, q.degree()); ++j) s -= q.coeff(q.degree() - j) * out[static_cast<size_t>(i - j)];
    out.push_back(s / q.leading());
  }
  return out;
}

}  // namespace

TailExpansion tail_expansion(const RationalFunction& r, int max_power, long bits) {
  TailExpansion t;
  if (r.is_zero()) return t;
  int d = 0;
  const auto rm = inverse_power_series(r, max_power, d);
  t.first_power = d;
  auto r_at = [&](int m) { return (m < d || m > max_power) ? Rational(0) : rm[static_cast<size_t>(m - d)]; };
  const auto bern = bernoulli_table(std::max(1, (max_power - d) / 2 + 1));
  // gamma at the working precision, from the digamma path.
  const int digits = static_cast<int>(static_cast<double>(bits) / 3.3219280948873623) + 1;
  const BigFloat gamma = euler_gamma_hp(digits).with_precision(bits);
  for (int m = d; m <= max_power; ++m) {
    Rational exact = r_at(m - 1) / 2;
    for (int k = 1; m - 2 * k >= d; ++k) exact -= bern.b(2 * k) / (2 * k) * r_at(m - 2 * k);
    BigFloat am = BigFloat(exact, bits) + gamma * BigFloat(r_at(m), bits);
    t.a.push_back(std::move(am));
    t.b.emplace_back(r_at(m), bits);
  }
  return t;
}

TailResult euler_maclaurin_tail(const RationalFunction& r, long n, const DirectSumConfig& config) {
  const long bits = config.working_bits();
  TailResult res{BigFloat(bits), BigFloat(bits), 0};
  if (r.is_zero()) return res;
  if (static_cast<double>(n) <= 2 * max_pole_modulus(r))
    throw std::invalid_argument("explicit terms must exceed twice the largest pole modulus");
  const int cap = config.effective_tail_order();
  const int degree_gap = r.denominator().degree() - r.numerator().degree();
  const TailExpansion t = tail_expansion(r, degree_gap + cap, bits);
  const BigFloat a(n + 1, bits);
  const BigFloat la = log(a);
  const BigFloat ia = BigFloat(1, bits) / a;
  const BigFloat ia2 = ia * ia;
  const BigFloat eps = pow_si(BigFloat(2, bits), -bits);
  const auto bern = bernoulli_table(64);
  std::vector<BigFloat> bern_fact;  // B_2j / (2j)!
  {
    Integer f = 1;
    for (int j = 1; j <= 64; ++j) {
      f *= (2 * j - 1) * (2 * j);
      bern_fact.emplace_back(bern.b(2 * j) / Rational(f), bits);
    }
  }
  BigFloat a_pow = pow_si(a, 1 - t.first_power);  // a^(1-m)
  int small_run = 0;
  BigFloat last_bound(bits);
  for (size_t idx = 0; idx < t.a.size(); ++idx) {
    const long m = t.first_power + static_cast<long>(idx);
    const BigFloat am_inv = a_pow * ia;  // a^-m
    BigFloat s0 = a_pow / (m - 1) + am_inv / 2L;
    BigFloat s1 = a_pow * (la / (m - 1) + BigFloat(Rational(1, (m - 1) * (m - 1)), bits)) + am_inv * la / 2L;
    // Euler-Maclaurin corrections with n = 2j-1 derivatives.
    BigFloat rising(m, bits);        // (m)_n
    BigFloat harmonic(Rational(1, m), bits);  // sum_{i<n} 1/(m+i)
    BigFloat pw = am_inv * ia;       // a^(-m-n)
    for (int j = 1; j <= 64; ++j) {
      const BigFloat c = bern_fact[static_cast<size_t>(j - 1)] * rising * pw;
      s0 += c;
      s1 += c * (la - harmonic);
      if (abs(c).exponent() < eps.exponent() - 8) break;
      if (j == 64) throw TailOrderError("Euler-Maclaurin corrections did not settle", n * 10);
      // n -> n + 2
      const long nn = 2L * j - 1;
      rising *= (m + nn) * (m + nn + 1);
      harmonic += BigFloat(Rational(1, m + nn), bits) + BigFloat(Rational(1, m + nn + 1), bits);
      pw *= ia2;
    }
    const BigFloat contrib = t.a[idx] * s0 + t.b[idx] * s1;
    res.value += contrib;
    res.powers_used = static_cast<int>(idx) + 1;
    const bool small = abs(contrib) < eps;
    small_run = small ? small_run + 1 : 0;
    last_bound = abs(contrib);
    if (small_run >= 3) {
      res.error_bound = eps * 8L;
      return res;
    }
    a_pow = am_inv;
  }
  throw TailOrderError("tail order " + std::to_string(cap) + " insufficient at N = " + std::to_string(n) +
                           " (last term " + last_bound.to_string(3) + ")",
                       n * 10);
}

DirectSumResult direct_euler_sum(const RationalFunction& r, const DirectSumConfig& config) {
  require_summable(r);
  const long bits = config.working_bits();
  DirectSumResult out{BigFloat(bits), partial_sum(r, config.terms, bits), BigFloat(bits), BigFloat(bits)};
  const TailResult tail = euler_maclaurin_tail(r, config.terms, config);
  out.tail = tail.value;
  out.value = out.partial + out.tail;
  // Rounding in the running sum: about N ulps of the largest partial value.
  BigFloat rounding = abs(out.partial) + BigFloat(1, bits);
  rounding *= pow_si(BigFloat(2, bits), -bits + 2);
  rounding *= config.terms;
  out.error_bound = tail.error_bound + rounding;
  return out;
}

}  // namespace eulersum

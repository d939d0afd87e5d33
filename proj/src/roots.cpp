#include "eulersum/roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eulersum {

namespace {

struct Evaluation {
  BigComplex value;
  BigComplex derivative;
};

Evaluation horner(const std::vector<BigComplex>& c, const BigComplex& z) {
  BigComplex p = c.back();
  BigComplex d(z.precision());
  for (size_t i = c.size() - 1; i-- > 0;) {
    d = d * z + p;
    p = p * z + c[i];
  }
  return {p, d};
}

std::vector<BigComplex> coefficients(const Polynomial& q, long bits) {
  std::vector<BigComplex> c;
  const Rational lead = q.leading();
  for (const auto& a : q.coeffs()) c.emplace_back(BigFloat(a / lead, bits));
  return c;
}

// One Aberth sweep; returns the largest relative correction as a binary
// exponent (very negative when every root stood still).
long aberth_sweep(const std::vector<BigComplex>& c, std::vector<BigComplex>& z) {
  long worst = std::numeric_limits<long>::min() / 2;
  const size_t n = z.size();
  for (size_t k = 0; k < n; ++k) {
    const Evaluation e = horner(c, z[k]);
    if (e.value.is_zero()) continue;
    const BigComplex ratio = e.value / e.derivative;
    BigComplex sum(z[k].precision());
    for (size_t j = 0; j < n; ++j)
      if (j != k) sum += (z[k] - z[j]).inverse();
    const BigComplex one(BigFloat(1, z[k].precision()));
    const BigComplex step = ratio / (one - ratio * sum);
    z[k] -= step;
    const long scale = std::max(z[k].abs().exponent(), 0L);
    const long e_step = std::max(step.re().exponent(), step.im().exponent()) - scale;
    worst = std::max(worst, e_step);
  }
  return worst;
}

}  // namespace

std::vector<BigComplex> find_roots_hp(const Polynomial& q, int digits) {
  const int n = q.degree();
  if (n < 1) throw std::invalid_argument("find_roots_hp needs degree >= 1");
  const long target = bits_for_digits(digits);
  if (n == 1) {
    return {BigComplex(BigFloat(-q.coeff(0) / q.coeff(1), target))};
  }
  // Starting circle: radius from the largest |a_i / a_n|^(1/(n-i)).
  double radius = 0;
  for (int i = 0; i < n; ++i) {
    const double a = std::fabs(Rational(q.coeff(i) / q.leading()).get_d());
    if (a > 0) radius = std::max(radius, std::pow(a, 1.0 / (n - i)));
  }
  if (radius == 0) radius = 1;
  constexpr double kAngleOffset = 0.4;  // fixed, keeps starts off the real axis
  long bits = 64;
  std::vector<BigComplex> z;
  for (int k = 0; k < n; ++k) {
    const double th = 2 * M_PI * k / n + kAngleOffset;
    z.emplace_back(BigFloat(Rational(radius * std::cos(th)), bits), BigFloat(Rational(radius * std::sin(th)), bits));
  }
  for (;;) {
    const auto c = coefficients(q, bits);
    for (auto& r : z) r = r.with_precision(bits);
    const int cap = bits == 64 ? 2000 : 100;
    bool converged = false;
    for (int it = 0; it < cap; ++it) {
      if (aberth_sweep(c, z) < -(bits - 8)) {
        converged = true;
        break;
      }
    }
    if (!converged) throw std::runtime_error("root finder did not converge for " + q.to_string("k"));
    if (bits >= target) break;
    bits = std::min(target, 2 * bits);
  }
  // Real polynomial: snap near-real roots and pair conjugates exactly.
  const long tiny = -(target - 16);
  std::vector<bool> used(z.size(), false);
  for (size_t k = 0; k < z.size(); ++k) {
    const long scale = std::max(z[k].abs().exponent(), 0L);
    if (z[k].im().exponent() - scale < tiny) {
      z[k].im() = BigFloat(target);
      used[k] = true;
    }
  }
  for (size_t k = 0; k < z.size(); ++k) {
    if (used[k] || z[k].im().sign() <= 0) continue;
    size_t best = z.size();
    BigFloat best_d(target);
    for (size_t j = 0; j < z.size(); ++j) {
      if (used[j] || j == k || z[j].im().sign() >= 0) continue;
      BigFloat d = (z[k] - z[j].conj()).abs();
      if (best == z.size() || d < best_d) {
        best = j;
        best_d = d;
      }
    }
    if (best == z.size()) throw std::runtime_error("unpaired complex root for " + q.to_string("k"));
    BigComplex mid = z[k] + z[best].conj();
    mid.re() /= 2L;
    mid.im() /= 2L;
    z[k] = mid;
    z[best] = mid.conj();
    used[k] = used[best] = true;
  }
  std::sort(z.begin(), z.end(), [](const BigComplex& a, const BigComplex& b) {
    if (!(a.re() == b.re())) return a.re() < b.re();
    return a.im() < b.im();
  });
  return z;
}

}  // namespace eulersum

#include "eulersum/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace eulersum {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, int power) {
  if (power < 0) throw std::domain_error("negative monomial power");
  std::vector<Rational> v(static_cast<size_t>(power) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear_root(const Rational& r) { return Polynomial({-r, Rational(1)}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<size_t>(i)];
}

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(1);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading();
  return *this * inv;
}

Polynomial Polynomial::taylor_shift(const Rational& shift) const {
  // Repeated synthetic division by (x - shift) yields the Taylor
  // coefficients at x = shift.
  std::vector<Rational> work = coeffs_;
  const size_t n = work.size();
  for (size_t i = 0; i + 1 < n; ++i) {
    for (size_t j = n - 1; j > i; --j) work[j - 1] += shift * work[j];
  }
  return Polynomial(std::move(work));
}

std::pair<Rational, std::vector<Integer>> Polynomial::primitive_part() const {
  if (is_zero()) return {Rational(0), {}};
  Integer den_lcm = 1;
  for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ints;
  ints.reserve(coeffs_.size());
  Integer content = 0;
  for (const auto& c : coeffs_) {
    Integer v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  if (ints.back() < 0) content = -content;
  for (auto& v : ints) v /= content;
  Rational scale(content, den_lcm);
  scale.canonicalize();
  return {scale, std::move(ints)};
}

namespace {

std::string rational_text(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (c < 0)
      out << "-";
    else if (!first)
      out << "+";
    first = false;
    const bool unit = (mag == 1);
    if (i == 0) {
      out << rational_text(mag);
      continue;
    }
    if (!unit) {
      if (mag.get_den() == 1)
        out << mag.get_num().get_str() << "*";
      else
        out << "(" << rational_text(mag) << ")*";
    }
    out << var;
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  const Rational lead_inv = 1 / b.leading();
  std::vector<Rational> quot(static_cast<size_t>(a.degree() - db + 1));
  for (int i = a.degree(); i >= db; --i) {
    Rational q = rem[static_cast<size_t>(i)] * lead_inv;
    quot[static_cast<size_t>(i - db)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(i - db + j)] -= q * b.coeff(j);
  }
  rem.resize(static_cast<size_t>(db));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).remainder;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

ExtendedGcd poly_xgcd(const Polynomial& a, const Polynomial& b) {
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = Polynomial::constant(1), s1;
  Polynomial t0, t1 = Polynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Polynomial s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Polynomial t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {Polynomial(), Polynomial(), Polynomial()};
  Rational inv = 1 / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

Polynomial poly_derivative(const Polynomial& p) {
  if (p.degree() <= 0) return Polynomial();
  std::vector<Rational> d(static_cast<size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i) d[static_cast<size_t>(i - 1)] = p.coeff(i) * i;
  return Polynomial(std::move(d));
}

Polynomial SquareFreeFactorization::expand() const {
  Polynomial acc = Polynomial::constant(unit);
  for (const auto& part : parts) acc *= part.factor.pow(static_cast<unsigned>(part.multiplicity));
  return acc;
}

SquareFreeFactorization squarefree_factor(const Polynomial& q) {
  if (q.is_zero()) throw std::domain_error("square-free factorization of the zero polynomial");
  SquareFreeFactorization out{q.leading(), {}};
  if (q.degree() == 0) return out;
  const Polynomial f = q.monic();
  const Polynomial fp = poly_derivative(f);
  const Polynomial a0 = poly_gcd(f, fp);
  Polynomial b = exact_div(f, a0);
  Polynomial c = exact_div(fp, a0);
  Polynomial d = c - poly_derivative(b);
  for (int i = 1; !b.is_one(); ++i) {
    Polynomial a = poly_gcd(b, d);
    if (!a.is_one()) out.parts.push_back({a, i});
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = c - poly_derivative(b);
  }
  return out;
}

namespace {

Integer pollard_rho(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    auto step = [&](Integer& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    while (d == 1) {
      step(x);
      step(y);
      step(y);
      Integer diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(const Integer& n, std::map<Integer, int>& primes) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    ++primes[n];
    return;
  }
  Integer d = pollard_rho(n);
  factor_into(d, primes);
  factor_into(n / d, primes);
}

std::map<Integer, int> factorize(Integer n) {
  std::map<Integer, int> primes;
  n = abs(n);
  for (unsigned long p = 2; p < 10000 && n > 1; ++p) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++primes[Integer(p)];
      n /= p;
    }
  }
  factor_into(n, primes);
  return primes;
}

}  // namespace

std::vector<Integer> positive_divisors(const Integer& n) {
  if (n == 0) throw std::domain_error("divisors of zero");
  std::vector<Integer> divs{1};
  for (const auto& [p, e] : factorize(n)) {
    const size_t base = divs.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::vector<RationalRoot> rational_roots(const Polynomial& q) {
  if (q.is_zero()) throw std::domain_error("rational roots of the zero polynomial");
  std::vector<RationalRoot> out;
  Polynomial rest = q;
  // Zero roots first so the constant term of the remainder is nonzero.
  int zero_mult = 0;
  while (rest.degree() > 0 && rest.coeff(0) == 0) {
    rest = exact_div(rest, Polynomial::linear_root(0));
    ++zero_mult;
  }
  if (zero_mult) out.push_back({Rational(0), zero_mult});
  if (rest.degree() == 1) {
    out.push_back({Rational(-rest.coeff(0) / rest.coeff(1)), 1});
    rest = Polynomial::constant(rest.coeff(1));
  }
  if (rest.degree() > 0) {
    auto [scale, ints] = rest.primitive_part();
    const auto nums = positive_divisors(ints.front());
    const auto dens = positive_divisors(ints.back());
    for (const auto& den : dens) {
      for (const auto& num : nums) {
        for (int sign : {-1, 1}) {
          if (rest.degree() <= 0) break;
          Rational cand(num * sign, den);
          cand.canonicalize();
          if (cand.get_den() != den) continue;  // seen with a smaller denominator
          int mult = 0;
          while (rest.degree() > 0 && rest(cand) == 0) {
            rest = exact_div(rest, Polynomial::linear_root(cand));
            ++mult;
          }
          if (mult) out.push_back({cand, mult});
          if (rest.degree() == 1) {
            out.push_back({Rational(-rest.coeff(0) / rest.coeff(1)), 1});
            rest = Polynomial::constant(rest.coeff(1));
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.root < b.root; });
  return out;
}

}  // namespace eulersum

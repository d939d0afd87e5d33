#pragma once

// Exact univariate polynomials over the rationals.
//
// Coefficients are stored densely, lowest power first, with no trailing
// zeros. Degrees encountered in Euler-sum work are small (a few dozen at
// most), so the classical quadratic algorithms are used throughout.

#include <gmpxx.h>

#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace eulersum {

using Integer = mpz_class;
using Rational = mpq_class;

/// Degree reported for the zero polynomial.
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs)
      : Polynomial(std::vector<Rational>(coeffs)) {}

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, int power);
  /// The polynomial k - r.
  static Polynomial linear_root(const Rational& r);

  int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

  /// Coefficient of x^i; zero outside the stored range.
  Rational coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational leading() const;

  Rational operator()(const Rational& x) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  Polynomial pow(unsigned e) const;
  Polynomial monic() const;
  /// p(x + shift).
  Polynomial taylor_shift(const Rational& shift) const;

  /// Integer polynomial with positive leading coefficient and content 1
  /// together with the rational scale s such that *this == s * primitive.
  std::pair<Rational, std::vector<Integer>> primitive_part() const;

  /// Human-readable form in the given variable, e.g. "4*k^2-4*k+1".
  std::string to_string(const std::string& var = "k") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

/// Euclidean division; throws std::domain_error on division by zero.
DivMod divmod(const Polynomial& a, const Polynomial& b);
/// Exact division; throws std::domain_error if b does not divide a.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor; gcd(0, 0) = 0.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

/// Returns (g, s, t) with s*a + t*b = g = poly_gcd(a, b).
struct ExtendedGcd {
  Polynomial gcd;
  Polynomial s;
  Polynomial t;
};
ExtendedGcd poly_xgcd(const Polynomial& a, const Polynomial& b);

Polynomial poly_derivative(const Polynomial& p);

struct SquareFreePart {
  Polynomial factor;
  int multiplicity;
};

struct SquareFreeFactorization {
  Rational unit;
  std::vector<SquareFreePart> parts;

  Polynomial expand() const;
};

/// Yun's square-free factorization. Factors are monic, pairwise coprime and
/// listed by strictly increasing multiplicity. Throws std::domain_error on 0.
SquareFreeFactorization squarefree_factor(const Polynomial& q);

struct RationalRoot {
  Rational root;
  int multiplicity;

  friend bool operator==(const RationalRoot&, const RationalRoot&) = default;
};

/// All rational roots with multiplicities, sorted ascending.
/// Throws std::domain_error on the zero polynomial.
std::vector<RationalRoot> rational_roots(const Polynomial& q);

/// Positive divisors of |n| (n != 0), ascending.
std::vector<Integer> positive_divisors(const Integer& n);

}  // namespace eulersum

#pragma once

// Rational functions R = P/Q in one variable: parsing, normalization and
// the summability guards for sum_{k>=1} R(k) H_k.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "eulersum/polynomial.hpp"

namespace eulersum {

/// Reduced fraction P/Q. Q is a primitive integer polynomial with positive
/// leading coefficient and gcd(P, Q) = 1.
class RationalFunction {
 public:
  RationalFunction() : den_(Polynomial::constant(1)) {}
  RationalFunction(Polynomial num, Polynomial den);
  static RationalFunction from_polynomial(Polynomial p) { return {std::move(p), Polynomial::constant(1)}; }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Exact value at x; throws std::domain_error at a pole.
  Rational operator()(const Rational& x) const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction operator-() const { return {-num_, den_}; }
  RationalFunction pow(int e) const;
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  /// Canonical text in the parser grammar, e.g. "1/(4*k^2-4*k+1)".
  std::string to_string(const std::string& var = "k") const;

 private:
  Polynomial num_;
  Polynomial den_;
};

/// Raised for malformed expression text; column() is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, size_t column)
      : std::runtime_error(what + " at column " + std::to_string(column)), column_(column) {}
  size_t column() const { return column_; }

 private:
  size_t column_;
};

/// Parses integers, the variable, + - * / ^, parentheses, unary minus and
/// implicit multiplication ("2k", "(k+1)(k+2)"). Exponents are integer
/// literals; ^ binds tighter than unary minus and is right-associative.
RationalFunction parse_ratfunc(std::string_view text, std::string_view variable = "k");

struct SummabilityReport {
  int degree_gap = 0;  // deg Q - deg P; large when R == 0
  std::optional<Rational> offending_positive_integer_pole;
  bool has_pole_at_zero = false;

  bool convergent() const { return degree_gap >= 2; }
  bool summable() const { return convergent() && !offending_positive_integer_pole; }
};

SummabilityReport check_summable(const RationalFunction& r);

/// Error raised by the pipeline for non-summable input. The messages are
/// the fixed strings "sum not convergent" and "infinite summand".
class SummabilityError : public std::domain_error {
 public:
  enum class Kind { NotConvergent, InfiniteSummand };
  explicit SummabilityError(Kind kind)
      : std::domain_error(kind == Kind::NotConvergent ? "sum not convergent" : "infinite summand"),
        kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Throws SummabilityError unless the report is summable.
void require_summable(const RationalFunction& r);

}  // namespace eulersum

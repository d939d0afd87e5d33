#pragma once

// Closed forms for sum_{k>=1} R(k) H_k.
//
// The general path sums, over the poles alpha of R, half the residue of
//   R'(s) (psi(-s) + gamma) - R(s) (psi(-s) + gamma)^2
// at s = alpha. Rational poles produce psi atoms at rational arguments, a
// pole at 0 produces zeta atoms, and every remaining square-free block q
// produces one RootSum atom whose template is exact in Q[alpha]/(q).
// The structured fast paths (T, Theorem-3 sums, Corollaries 1 and 2) must
// agree with the general path term for term.

#include <optional>
#include <string>
#include <vector>

#include "eulersum/bigfloat.hpp"
#include "eulersum/ratfunc.hpp"
#include "eulersum/symbolic.hpp"

namespace eulersum {

/// coeff / (k + t)^power
struct RationalPoleTerm {
  Rational t;
  int power;
  Rational coeff;
};

/// sum over the roots alpha of q of coeff(alpha) / (k - alpha)^power, with
/// coeff a polynomial in alpha reduced modulo q.
struct AlgebraicPoleTerm {
  Polynomial q;  // monic, square-free, no rational roots
  int power;
  Polynomial coeff;
};

struct PartialFractionDecomposition {
  Polynomial polynomial_part;  // zero for summable input
  std::vector<RationalPoleTerm> rational_terms;    // sorted by t, then power
  std::vector<AlgebraicPoleTerm> algebraic_terms;  // sorted by power

  bool all_rational() const { return algebraic_terms.empty(); }
  /// Reassembles the decomposition into a single reduced fraction.
  RationalFunction recombine() const;
};

PartialFractionDecomposition partial_fractions(const RationalFunction& r);

struct Provenance {
  std::string method;               // "residue", "theorem3", "corollary1", ...
  std::vector<std::string> steps;   // one line per pole block or rule applied
};

struct ClosedForm {
  SymbolicExpression expression;
  std::optional<BigFloat> numeric_value;
  Provenance provenance;
};

/// T(t, p) = (-1)^(p-1) / (2 (p-1)!) * (psi^(p)(t) - 2 gamma psi^(p-1)(t)
///           - sum_{k=0}^{p-1} C(p-1, k) psi^(k)(t) psi^(p-1-k)(t)).
SymbolicExpression T_func(const Rational& t, int p);

/// General residue algorithm. Throws SummabilityError for bad input.
ClosedForm closed_form(const RationalFunction& r);

/// Half the residue at the rational point s = point (pole or not).
SymbolicExpression rational_point_contribution(const RationalFunction& r, const Rational& point);

/// Sum of C_{i,j} T(t_j, i) over the partial fractions. Requires rational
/// poles away from 0.
ClosedForm closed_form_via_theorem3(const RationalFunction& r);

/// sum H_k / (m k + n)^p = m^-p T(n/m, p).
ClosedForm corollary1(long m, long n, int p);

/// sum k^q H_k / (m k + n)^p.
ClosedForm corollary2(long m, long n, int p, int q);

struct SimplifyOptions {
  /// Also rewrite zeta(2n) as a rational multiple of pi^(2n).
  bool even_zeta_to_pi = false;
};

/// Rewrites the known special values psi(1/2), psi(1/4), psi'(1), psi'(1/2),
/// psi''(1), psi''(1/2), psi''(1/4), psi'''(1/2), psi(1) in terms of gamma,
/// pi, log 2 and zeta(3).
SymbolicExpression simplify_special_values(const SymbolicExpression& e, SimplifyOptions opts = {});

}  // namespace eulersum

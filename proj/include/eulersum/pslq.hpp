#pragma once

// Integer relation detection (one-level PSLQ) and formula discovery.

#include <string>
#include <vector>

#include "eulersum/bigfloat.hpp"
#include "eulersum/ratfunc.hpp"
#include "eulersum/residue.hpp"
#include "eulersum/symbolic.hpp"

namespace eulersum {

struct RelationResult {
  enum class Status { Found, NoneFound, PrecisionExhausted };
  Status status = Status::NoneFound;
  std::vector<Integer> coefficients;  // first nonzero entry positive, gcd 1
  BigFloat residual;                  // |sum c_i x_i| when found
  int iterations = 0;
  /// Decimal digits separating the smallest |y_j| from the next one; large
  /// values mean the relation stands well clear of numerical noise.
  double confidence = 0;
  /// No relation with Euclidean norm below this bound exists.
  BigFloat norm_bound;

  bool found() const { return status == Status::Found; }
};

/// Looks for integers c (not all zero, max |c_i| <= max_coeff) with
/// sum c_i x_i = 0 to within 10^(-0.9 D). Needs at least two entries, all
/// nonzero.
RelationResult pslq_find(const std::vector<BigFloat>& x, const Integer& max_coeff, int digits);

/// Labeled numeric constants with their symbolic meaning.
struct ConstantBasis {
  struct Entry {
    std::string name;
    BigFloat value;
    SymbolicExpression expr;
  };
  std::vector<Entry> entries;

  void add(std::string name, BigFloat value, SymbolicExpression expr);
  size_t size() const { return entries.size(); }
};

/// Basis from constant expressions: each one is evaluated at D digits and
/// labeled by its text form.
ConstantBasis make_basis(const std::vector<SymbolicExpression>& constants, int digits);

/// Candidate constants for sum R(k) H_k: the monomials produced by the
/// T(t, p) shapes at every rational pole (zeta products for a pole at 0),
/// after rewriting known special values. Throws std::domain_error when R
/// has non-rational poles.
std::vector<SymbolicExpression> auto_basis_constants(const RationalFunction& r);

struct DiscoveryResult {
  enum class Status { Found, NoRelation, Ambiguous, PrecisionExhausted };
  Status status = Status::NoRelation;
  ClosedForm closed_form;
  RelationResult relation;
  std::string message;
};

/// Recovers S = sum R(k) H_k as a rational combination of the basis
/// constants (which must not contain S itself). S is computed by direct
/// summation at D digits with `terms` explicit terms.
DiscoveryResult discover(const RationalFunction& r, const ConstantBasis& basis, int digits,
                         const Integer& max_coeff = 100000, long terms = 100000);

/// Same, with the sum value already known.
DiscoveryResult discover_from_value(const BigFloat& sum, const ConstantBasis& basis, int digits,
                                    const Integer& max_coeff = 100000);

}  // namespace eulersum

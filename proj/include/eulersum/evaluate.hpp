#pragma once

#include <map>
#include <utility>
#include <vector>

#include "eulersum/bigfloat.hpp"
#include "eulersum/symbolic.hpp"

namespace eulersum {

/// Numeric values of atoms at a fixed number of digits, cached so that a
/// batch of expressions over the same atoms costs one evaluation per atom.
/// Not thread-safe; use one instance per thread.
class AtomEvaluator {
 public:
  explicit AtomEvaluator(int digits);

  int digits() const { return digits_; }
  long bits() const { return bits_; }

  BigFloat atom(const Atom& a);
  BigFloat monomial(const Monomial& m);
  BigFloat expression(const SymbolicExpression& e);

 private:
  BigFloat psi(int order, const Rational& t);
  BigFloat root_sum(const RootSumData& data);

  int digits_;
  long bits_;
  std::map<Rational, std::vector<BigFloat>> psi_cache_;
  std::map<int, BigFloat> zeta_cache_;
  std::map<int, BigFloat> log_cache_;
  std::vector<BigFloat> gamma_pi_;  // [gamma, pi] once computed
};

/// Value of e with absolute error well below 10^-D. RootSum atoms are
/// evaluated through numeric roots and complex polygamma values.
BigFloat eval_symexpr(const SymbolicExpression& e, int digits);

}  // namespace eulersum

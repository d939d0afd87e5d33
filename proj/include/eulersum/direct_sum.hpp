#pragma once

// Direct numerical evaluation of sum_{k>=1} R(k) H_k: an explicit partial
// sum to N followed by an analytic tail. In the tail, f(x) = R(x) H_x is
// expanded as sum_m (a_m + b_m log x) x^-m using R's expansion in 1/x and
//   H_x = log x + gamma + 1/(2x) - sum_k B_2k / (2k x^2k),
// and each x^-m and x^-m log x is summed from N+1 to infinity by
// Euler-Maclaurin with exact antiderivatives and derivatives.

#include <stdexcept>
#include <vector>

#include "eulersum/bigfloat.hpp"
#include "eulersum/ratfunc.hpp"

namespace eulersum {

struct DirectSumConfig {
  int digits = 100;
  long terms = 100000;  // N
  int tail_order = 0;   // M, the cap on 1/x powers; 0 means 2*digits
  int guard_digits = 20;

  int effective_tail_order() const { return tail_order > 0 ? tail_order : 2 * digits; }
  long working_bits() const;
};

struct TailExpansion {
  int first_power = 2;        // m of a.front() / b.front()
  std::vector<BigFloat> a;    // a_m
  std::vector<BigFloat> b;    // b_m
};

struct TailResult {
  BigFloat value;
  BigFloat error_bound;
  int powers_used = 0;
};

struct DirectSumResult {
  BigFloat value;
  BigFloat partial;
  BigFloat tail;
  BigFloat error_bound;
};

/// Raised when the tail cannot reach the requested accuracy at this N.
class TailOrderError : public std::runtime_error {
 public:
  TailOrderError(const std::string& what, long suggested_terms)
      : std::runtime_error(what), suggested_terms_(suggested_terms) {}
  long suggested_terms() const { return suggested_terms_; }

 private:
  long suggested_terms_;
};

/// Largest modulus of a pole of R (0 for a polynomial denominator).
double max_pole_modulus(const RationalFunction& r);

/// sum_{k=1}^{N} R(k) H_k at the given working precision.
BigFloat partial_sum(const RationalFunction& r, long n, long bits);
/// Convenience overload at bits_for_digits(digits).
BigFloat partial_sum(const RationalFunction& r, long n, int digits);

/// Expansion of R(x) H_x up to x^-max_power.
TailExpansion tail_expansion(const RationalFunction& r, int max_power, long bits);

/// sum_{k>N} R(k) H_k. Requires N > 2 * max pole modulus.
TailResult euler_maclaurin_tail(const RationalFunction& r, long n, const DirectSumConfig& config);

DirectSumResult direct_euler_sum(const RationalFunction& r, const DirectSumConfig& config);

}  // namespace eulersum

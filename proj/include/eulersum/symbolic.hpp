#pragma once

// Canonical symbolic expressions: finite sums of coefficient * monomial,
// where a monomial is a product of atoms drawn from
//   psi(n, t)      polygamma of order n at rational t in (0, 1]
//   zeta(n)        Riemann zeta at an integer n >= 2
//   pi, log(n)     produced by special-value rewriting
//   gamma          Euler's constant
//   alpha          generator of an algebraic extension (root-sum templates)
//   psi(n, -alpha) polygamma at minus the generator (root-sum templates)
//   RootSum(q, e)  sum of the template e over the roots alpha of q
//
// Terms live in an ordered map keyed by monomial, so every value is
// canonical: like terms merged, zero coefficients dropped, fixed ordering.

#include <compare>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eulersum/ring.hpp"

namespace eulersum {

enum class AtomKind : int { Psi = 0, Zeta, Pi, Log, Gamma, Alpha, PsiRoot, RootSum };

template <class C>
class SymPoly;
using SymbolicExpression = SymPoly<Rational>;
struct RootSumData;

struct Atom {
  AtomKind kind = AtomKind::Gamma;
  int index = 0;  // psi order, zeta argument, log argument, psi_root order
  Rational arg;   // psi argument
  std::shared_ptr<const RootSumData> root_sum;

  /// Requires 0 < arg <= 1; use psi_value() for general arguments.
  static Atom psi(int order, const Rational& arg);
  static Atom zeta(int n);
  static Atom pi() { return Atom{AtomKind::Pi, 0, 0, nullptr}; }
  static Atom log(int n);
  static Atom gamma() { return Atom{AtomKind::Gamma, 0, 0, nullptr}; }
  static Atom alpha() { return Atom{AtomKind::Alpha, 0, 0, nullptr}; }
  static Atom psi_root(int order);
  static Atom root_sum_of(Polynomial poly, SymbolicExpression templ);
};

/// Psi atoms sort by order descending, then argument ascending.
std::strong_ordering compare(const Atom& a, const Atom& b);
inline bool operator==(const Atom& a, const Atom& b) { return compare(a, b) == 0; }
inline bool operator<(const Atom& a, const Atom& b) { return compare(a, b) < 0; }

/// Sorted (atom, exponent) pairs with positive exponents; empty means 1.
using Monomial = std::vector<std::pair<Atom, int>>;

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

Monomial monomial_product(const Monomial& a, const Monomial& b);
int monomial_degree(const Monomial& m);

template <class C>
class SymPoly {
 public:
  using TermMap = std::map<Monomial, C, MonomialLess>;

  SymPoly() = default;
  static SymPoly constant(const C& c) {
    SymPoly r;
    r.add_term({}, c);
    return r;
  }
  static SymPoly atom(const Atom& a, const C& c) {
    SymPoly r;
    r.add_term({{a, 1}}, c);
    return r;
  }

  void add_term(const Monomial& m, const C& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second = it->second + c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero_poly() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  /// Constant coefficient (monomial 1), if any.
  std::optional<C> constant_term() const {
    auto it = terms_.find(Monomial{});
    if (it == terms_.end()) return std::nullopt;
    return it->second;
  }

  SymPoly& operator+=(const SymPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  SymPoly& operator-=(const SymPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  SymPoly operator-() const {
    SymPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b) {
    SymPoly r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(monomial_product(ma, mb), ca * cb);
    return r;
  }
  SymPoly scaled(const C& c) const {
    SymPoly r;
    for (const auto& [m, v] : terms_) r.add_term(m, v * c);
    return r;
  }
  SymPoly& operator*=(const SymPoly& o) { return *this = *this * o; }

  friend bool operator==(const SymPoly& a, const SymPoly& b) { return a.terms_ == b.terms_; }

  /// Maps every coefficient through f, keeping monomials.
  template <class D, class F>
  SymPoly<D> map_coeffs(F&& f) const {
    SymPoly<D> r;
    for (const auto& [m, c] : terms_) r.add_term(m, f(c));
    return r;
  }

 private:
  TermMap terms_;
};

// Ring hooks so SymPoly can serve as a series coefficient.
template <class C>
bool is_zero(const SymPoly<C>& p) {
  return p.is_zero_poly();
}
template <class C>
SymPoly<C> zero_like(const SymPoly<C>&) {
  return {};
}
template <class C>
SymPoly<C> mul_int(const SymPoly<C>& p, long k) {
  SymPoly<C> r;
  for (const auto& [m, c] : p.terms()) r.add_term(m, mul_int(c, k));
  return r;
}

struct RootSumData {
  Polynomial poly;  // monic, square-free
  SymbolicExpression templ;
};

std::strong_ordering compare(const SymbolicExpression& a, const SymbolicExpression& b);

/// psi^(order)(t) for any rational t that is not a nonpositive integer, as
/// a psi atom at the representative of t in (0, 1] plus a rational offset
/// from the recurrence psi^(n)(z+1) = psi^(n)(z) + (-1)^n n! z^(-n-1).
SymbolicExpression psi_value(int order, const Rational& t);

SymbolicExpression sym_constant(const Rational& c);
SymbolicExpression sym_atom(const Atom& a, const Rational& c = 1);

/// Replaces atoms for which f returns a value, expanding products.
SymbolicExpression substitute(const SymbolicExpression& e,
                              const std::function<std::optional<SymbolicExpression>(const Atom&)>& f);

/// Largest positive rational p such that every coefficient divided by p is
/// an integer with gcd 1. Returns 1 for the zero expression.
Rational common_prefactor(const SymbolicExpression& e);

/// Plain-text rendering, e.g. "1/8*(-psi(2,1/2) + 2*gamma*psi(1,1/2))".
std::string to_text(const SymbolicExpression& e);
std::string atom_text(const Atom& a);

/// Parses a product of atoms such as "zeta(3)^2", "gamma*psi(1,1/3)",
/// "pi^2*log(2)", optionally preceded by a rational factor "3/4*".
SymbolicExpression parse_monomial_text(const std::string& text);

}  // namespace eulersum

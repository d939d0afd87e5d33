#include "eulersum/series.hpp"

namespace eulersum {

namespace {

Rational signed_inverse_factorial(int k) {
  Integer f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return Rational(k % 2 == 0 ? 1 : -1, 1) / Rational(f);
}

// Taylor coefficients of p at `point`, lowest first, by repeated synthetic
// division. All deg(p)+1 coefficients are returned.
template <class C>
std::vector<C> taylor_coefficients(const Polynomial& p, const C& point, const C& zero) {
  std::vector<C> work;
  for (const auto& c : p.coeffs()) work.push_back(lift_like(zero, c));
  std::vector<C> out;
  for (size_t n = work.size(); n > 0; --n) {
    // Divide work[0..n) by (x - point): remainder is the next coefficient.
    for (size_t i = n - 1; i > 0; --i) work[i - 1] = work[i - 1] + work[i] * point;
    out.push_back(work[0]);
    work.erase(work.begin());
  }
  return out;
}

}  // namespace

template <class C>
LaurentSeries<C> ratfunc_series_at(const Polynomial& num, const Polynomial& den, const C& point, int order) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  const C zero = zero_like(point);
  auto pad = [&](std::vector<C> v, size_t n) {
    while (v.size() < n) v.push_back(zero);
    return v;
  };
  LaurentSeries<C> d(0, taylor_coefficients(den, point, zero), zero);
  const int m = d.base();  // pole order at the point
  const auto width = static_cast<size_t>(std::max(order + 2 * m, 1));
  d = LaurentSeries<C>(0, pad(taylor_coefficients(den, point, zero), width), zero);
  LaurentSeries<C> n(0, pad(taylor_coefficients(num, point, zero), static_cast<size_t>(std::max(order + m, 1))), zero);
  return (n * d.recip()).truncated(order);
}

template LaurentSeries<Rational> ratfunc_series_at(const Polynomial&, const Polynomial&, const Rational&, int);
template LaurentSeries<AlgebraicElement> ratfunc_series_at(const Polynomial&, const Polynomial&,
                                                           const AlgebraicElement&, int);

SymbolicSeries psi_series_at(const Rational& t, int order) {
  if (t <= 0 && t.get_den() == 1) throw std::domain_error("psi series at a nonpositive integer");
  std::vector<SymbolicExpression> c;
  for (int k = 0; k < order; ++k) {
    SymbolicExpression v = psi_value(k, t).scaled(signed_inverse_factorial(k));
    if (k == 0) v += sym_atom(Atom::gamma());
    c.push_back(std::move(v));
  }
  return SymbolicSeries(0, std::move(c), {});
}

SymbolicSeries psi_series_at_zero(int order) {
  std::vector<SymbolicExpression> c;
  for (int e = -1; e < order; ++e) {
    if (e == -1)
      c.push_back(sym_constant(1));
    else if (e == 0)
      c.emplace_back();
    else
      c.push_back(sym_atom(Atom::zeta(e + 1), -1));
  }
  return SymbolicSeries(-1, std::move(c), {});
}

AlgebraicSymbolicSeries psi_series_at_root(const AlgebraicElement::Modulus& modulus, int order) {
  std::vector<AlgebraicSymPoly> c;
  for (int k = 0; k < order; ++k) {
    AlgebraicSymPoly v =
        AlgebraicSymPoly::atom(Atom::psi_root(k), AlgebraicElement::constant(modulus, signed_inverse_factorial(k)));
    if (k == 0) v.add_term({{Atom::gamma(), 1}}, AlgebraicElement::constant(modulus, 1));
    c.push_back(std::move(v));
  }
  return AlgebraicSymbolicSeries(0, std::move(c), {});
}

}  // namespace eulersum

#include "eulersum/residue.hpp"

#include <algorithm>
#include <numeric>

#include "eulersum/algebraic.hpp"
#include "eulersum/series.hpp"
#include "eulersum/special.hpp"

namespace eulersum {

namespace {

Integer factorial(long n) {
  Integer f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return f;
}

Integer binomial(long n, long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

std::string rational_str(const Rational& r) { return r.get_str(); }

// Polynomial part plus the proper remainder.
std::pair<Polynomial, RationalFunction> split_polynomial_part(const RationalFunction& r) {
  if (r.numerator().degree() < r.denominator().degree()) return {Polynomial{}, r};
  auto dm = divmod(r.numerator(), r.denominator());
  return {dm.quotient, RationalFunction(dm.remainder, r.denominator())};
}

struct PoleBlocks {
  struct Rat {
    Rational root;
    int order;
  };
  struct Alg {
    Polynomial q;
    int order;
  };
  std::vector<Rat> rational;
  std::vector<Alg> algebraic;
};

PoleBlocks pole_blocks(const Polynomial& den) {
  PoleBlocks b;
  if (den.degree() < 1) return b;
  for (const auto& part : squarefree_factor(den).parts) {
    Polynomial rest = part.factor;
    for (const auto& root : rational_roots(part.factor)) {
      b.rational.push_back({root.root, part.multiplicity});
      rest = exact_div(rest, Polynomial::linear_root(root.root));
    }
    if (rest.degree() >= 1) b.algebraic.push_back({rest.monic(), part.multiplicity});
  }
  std::sort(b.rational.begin(), b.rational.end(), [](const auto& x, const auto& y) { return x.root < y.root; });
  return b;
}

// Coefficient of u^-1 in a * b without forming the whole product.
template <class C>
C residue_of_product(const LaurentSeries<C>& a, const LaurentSeries<C>& b) {
  C acc = a.zero();
  for (int i = a.base(); i <= -1 - b.base(); ++i) acc = acc + a.coeff(i) * b.coeff(-1 - i);
  return acc;
}

// Coefficient of u^-1 in a * b^2.
template <class C>
C residue_of_square_product(const LaurentSeries<C>& a, const LaurentSeries<C>& b) {
  C acc = a.zero();
  for (int i = a.base(); i <= -1 - 2 * b.base(); ++i) {
    const int e = -1 - i;  // coefficient of u^e in b^2
    C sq = a.zero();
    for (int j = b.base(), k = e - j; j <= k; ++j, --k) {
      const C t = b.coeff(j) * b.coeff(k);
      sq = sq + (j == k ? t : mul_int(t, 2));
    }
    acc = acc + a.coeff(i) * sq;
  }
  return acc;
}

SymbolicSeries to_symbolic(const RationalSeries& s) {
  return s.map<SymbolicExpression>([](const Rational& c) { return sym_constant(c); }, SymbolicExpression{});
}

// Half-residue contribution of one algebraic block, split into the part that
// is rational after summing over conjugates and a RootSum atom for the rest.
SymbolicExpression algebraic_block_contribution(const RationalFunction& r, const Polynomial& q, int order) {
  auto modulus = std::make_shared<const Polynomial>(q);
  const AlgebraicElement alpha = AlgebraicElement::generator(modulus);
  const auto rs = ratfunc_series_at(r.numerator(), r.denominator(), alpha, 2);
  const AlgebraicSymbolicSeries rsym = rs.map<AlgebraicSymPoly>(
      [](const AlgebraicElement& c) { return AlgebraicSymPoly::constant(c); }, AlgebraicSymPoly{});
  const AlgebraicSymbolicSeries l = psi_series_at_root(modulus, order + 2);
  const AlgebraicSymbolicSeries expr = rsym.diff() * l - rsym * l * l;
  const AlgebraicSymPoly res = expr.residue().scaled(AlgebraicElement::constant(modulus, Rational(1, 2)));

  SymbolicExpression rational_part;
  SymbolicExpression templ;
  for (const auto& [mono, coeff] : res.terms()) {
    const bool has_psi_root = std::any_of(mono.begin(), mono.end(),
                                          [](const auto& ap) { return ap.first.kind == AtomKind::PsiRoot; });
    if (!has_psi_root) {
      rational_part.add_term(mono, coeff.trace());
      continue;
    }
    const Polynomial& v = coeff.value();
    for (int j = 0; j <= v.degree(); ++j) {
      if (v.coeff(j) == 0) continue;
      Monomial m = mono;
      if (j > 0) m = monomial_product({{Atom::alpha(), j}}, mono);
      templ.add_term(m, v.coeff(j));
    }
  }
  if (!templ.is_zero_poly()) rational_part.add_term({{Atom::root_sum_of(q, templ), 1}}, 1);
  return rational_part;
}

void check_cor_args(long m, long n, int p) {
  if (m < 1 || n < 1) throw std::invalid_argument("m and n must be positive");
  if (std::gcd(m, n) != 1) throw std::invalid_argument("m and n must be coprime");
  if (p < 2) throw std::invalid_argument("p must be at least 2");
}

}  // namespace

RationalFunction PartialFractionDecomposition::recombine() const {
  RationalFunction sum = RationalFunction::from_polynomial(polynomial_part);
  for (const auto& t : rational_terms)
    sum = sum + RationalFunction(Polynomial::constant(t.coeff), Polynomial::linear_root(-t.t).pow(t.power));
  for (const auto& a : algebraic_terms) {
    // sum_alpha c(alpha) / (k - alpha)^i = N(k) / q(k)^i with
    // N = trace of c * D^i, D(k) = (q(k) - q(alpha)) / (k - alpha).
    auto modulus = std::make_shared<const Polynomial>(a.q);
    const AlgebraicElement alpha = AlgebraicElement::generator(modulus);
    const int d = a.q.degree();
    std::vector<AlgebraicElement> dpoly;
    for (int j = 0; j < d; ++j) {
      AlgebraicElement c = AlgebraicElement::constant(modulus, 0);
      AlgebraicElement pw = AlgebraicElement::constant(modulus, 1);  // alpha^(n-1-j)
      for (int n = j + 1; n <= d; ++n) {
        c = c + pw.scaled(a.q.coeff(n));
        pw = pw * alpha;
      }
      dpoly.push_back(c);
    }
    std::vector<AlgebraicElement> acc{AlgebraicElement(modulus, a.coeff)};
    for (int i = 0; i < a.power; ++i) {
      std::vector<AlgebraicElement> next(acc.size() + dpoly.size() - 1, AlgebraicElement::constant(modulus, 0));
      for (size_t x = 0; x < acc.size(); ++x)
        for (size_t y = 0; y < dpoly.size(); ++y) next[x + y] = next[x + y] + acc[x] * dpoly[y];
      acc = std::move(next);
    }
    std::vector<Rational> num;
    for (const auto& c : acc) num.push_back(c.trace());
    sum = sum + RationalFunction(Polynomial(std::move(num)), a.q.pow(static_cast<unsigned>(a.power)));
  }
  return sum;
}

PartialFractionDecomposition partial_fractions(const RationalFunction& r) {
  PartialFractionDecomposition pfd;
  auto [poly, proper] = split_polynomial_part(r);
  pfd.polynomial_part = poly;
  if (proper.is_zero()) return pfd;
  const auto blocks = pole_blocks(proper.denominator());
  for (const auto& b : blocks.rational) {
    const auto s = ratfunc_series_at(proper.numerator(), proper.denominator(), b.root, 0);
    for (int i = 1; i <= b.order; ++i) {
      const Rational c = s.coeff(-i);
      if (c != 0) pfd.rational_terms.push_back({-b.root, i, c});
    }
  }
  for (const auto& b : blocks.algebraic) {
    auto modulus = std::make_shared<const Polynomial>(b.q);
    const auto s = ratfunc_series_at(proper.numerator(), proper.denominator(), AlgebraicElement::generator(modulus), 0);
    for (int i = 1; i <= b.order; ++i) {
      const AlgebraicElement c = s.coeff(-i);
      if (!c.is_zero()) pfd.algebraic_terms.push_back({b.q, i, c.value()});
    }
  }
  std::sort(pfd.rational_terms.begin(), pfd.rational_terms.end(), [](const auto& x, const auto& y) {
    return x.t != y.t ? x.t < y.t : x.power < y.power;
  });
  return pfd;
}

SymbolicExpression T_func(const Rational& t, int p) {
  if (p < 1) throw std::invalid_argument("T(t, p) needs p >= 1");
  if (t <= 0 && t.get_den() == 1) throw std::domain_error("T(t, p) undefined at a nonpositive integer t");
  SymbolicExpression inner = psi_value(p, t);
  inner -= sym_atom(Atom::gamma(), 2) * psi_value(p - 1, t);
  for (int k = 0; k <= p - 1; ++k)
    inner -= (psi_value(k, t) * psi_value(p - 1 - k, t)).scaled(Rational(binomial(p - 1, k)));
  Rational pre(1, 2);
  pre /= Rational(factorial(p - 1));
  if ((p - 1) % 2 == 1) pre = -pre;
  return inner.scaled(pre);
}

SymbolicExpression rational_point_contribution(const RationalFunction& r, const Rational& point) {
  const RationalSeries rs = ratfunc_series_at(r.numerator(), r.denominator(), point, 2);
  const int m = std::max(0, -rs.base());
  const SymbolicSeries rsym = to_symbolic(rs);
  const SymbolicSeries l = point == 0 ? psi_series_at_zero(m + 2) : psi_series_at(-point, m + 2);
  return (residue_of_product(rsym.diff(), l) - residue_of_square_product(rsym, l)).scaled(Rational(1, 2));
}

ClosedForm closed_form(const RationalFunction& r) {
  ClosedForm out;
  out.provenance.method = "residue";
  if (r.is_zero()) return out;
  if (r.denominator().degree() - r.numerator().degree() < 2)
    throw SummabilityError(SummabilityError::Kind::NotConvergent);
  // The pole scan doubles as the positive-integer pole check.
  const auto blocks = pole_blocks(r.denominator());
  for (const auto& b : blocks.rational)
    if (b.root > 0 && b.root.get_den() == 1) throw SummabilityError(SummabilityError::Kind::InfiniteSummand);
  for (const auto& b : blocks.rational) {
    out.expression += rational_point_contribution(r, b.root);
    out.provenance.steps.push_back("pole " + rational_str(b.root) + " of order " + std::to_string(b.order) +
                                   (b.root == 0 ? ": zeta expansion" : ": psi expansion at " +
                                                                           rational_str(-b.root)));
  }
  for (const auto& b : blocks.algebraic) {
    out.expression += algebraic_block_contribution(r, b.q, b.order);
    out.provenance.steps.push_back("roots of " + b.q.to_string("k") + " of order " + std::to_string(b.order) +
                                   ": exact extension, RootSum");
  }
  return out;
}

ClosedForm closed_form_via_theorem3(const RationalFunction& r) {
  require_summable(r);
  const auto pfd = partial_fractions(r);
  if (!pfd.all_rational()) throw std::domain_error("non-rational pole present");
  ClosedForm out;
  out.provenance.method = "theorem3";
  for (const auto& term : pfd.rational_terms) {
    if (term.t <= 0 && term.t.get_den() == 1) throw std::domain_error("pole at 0 is outside the T(t, p) form");
    out.expression += T_func(term.t, term.power).scaled(term.coeff);
    out.provenance.steps.push_back(rational_str(term.coeff) + " * T(" + rational_str(term.t) + ", " +
                                   std::to_string(term.power) + ")");
  }
  return out;
}

ClosedForm corollary1(long m, long n, int p) {
  check_cor_args(m, n, p);
  ClosedForm out;
  out.provenance.method = "corollary1";
  Integer mp;
  mpz_ui_pow_ui(mp.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(p));
  const Rational t(n, m);
  out.expression = T_func(t, p).scaled(Rational(1) / Rational(mp));
  out.provenance.steps.push_back("1/" + mp.get_str() + " * T(" + rational_str(t) + ", " + std::to_string(p) + ")");
  return out;
}

ClosedForm corollary2(long m, long n, int p, int q) {
  check_cor_args(m, n, p);
  if (q < 1) throw std::invalid_argument("q must be at least 1");
  if (p < q + 2) throw std::invalid_argument("p must be at least q + 2");
  ClosedForm out;
  out.provenance.method = "corollary2";
  Integer mp;
  mpz_ui_pow_ui(mp.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(p));
  const Rational t(n, m);
  Rational tj = 1;
  for (int j = 0; j <= q; ++j) {
    Rational c = Rational(binomial(q, j)) * tj / Rational(mp);
    if (j % 2 == 1) c = -c;
    out.expression += T_func(t, p - q + j).scaled(c);
    out.provenance.steps.push_back(rational_str(c) + " * T(" + rational_str(t) + ", " + std::to_string(p - q + j) + ")");
    tj *= t;
  }
  return out;
}

SymbolicExpression simplify_special_values(const SymbolicExpression& e, SimplifyOptions opts) {
  const SymbolicExpression g = sym_atom(Atom::gamma());
  const SymbolicExpression pi = sym_atom(Atom::pi());
  const SymbolicExpression ln2 = sym_atom(Atom::log(2));
  const SymbolicExpression z3 = sym_atom(Atom::zeta(3));
  const auto rule = [&](const Atom& a) -> std::optional<SymbolicExpression> {
    if (a.kind == AtomKind::Psi) {
      const Rational& t = a.arg;
      switch (a.index) {
        case 0:
          if (t == 1) return -g;
          if (t == Rational(1, 2)) return -g - ln2.scaled(2);
          if (t == Rational(1, 4)) return -g - ln2.scaled(3) - pi.scaled(Rational(1, 2));
          break;
        case 1:
          if (t == 1) return (pi * pi).scaled(Rational(1, 6));
          if (t == Rational(1, 2)) return (pi * pi).scaled(Rational(1, 2));
          break;
        case 2:
          if (t == 1) return z3.scaled(-2);
          if (t == Rational(1, 2)) return z3.scaled(-14);
          if (t == Rational(1, 4)) return (pi * pi * pi).scaled(-2) - z3.scaled(56);
          break;
        case 3:
          if (t == Rational(1, 2)) return pi * pi * pi * pi;
          break;
        default:
          break;
      }
    }
    if (opts.even_zeta_to_pi && a.kind == AtomKind::Zeta && a.index % 2 == 0) {
      // zeta(2n) = (-1)^(n+1) B_2n (2 pi)^(2n) / (2 (2n)!)
      const int two_n = a.index;
      const auto bern = bernoulli_table(two_n / 2);
      Integer two_pow;
      mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(two_n));
      Rational c = bern.b(two_n) * Rational(two_pow) / Rational(2 * factorial(two_n));
      if ((two_n / 2) % 2 == 0) c = -c;
      SymbolicExpression out = sym_constant(c);
      for (int i = 0; i < two_n; ++i) out *= pi;
      return out;
    }
    return std::nullopt;
  };
  return substitute(e, rule);
}

}  // namespace eulersum

#include <gtest/gtest.h>

#include <mpfr.h>

#include "eulersum/evaluate.hpp"
#include "eulersum/series.hpp"
#include "eulersum/special.hpp"
#include "test_util.hpp"

using namespace eulersum;

namespace {

RationalSeries rs(int base, std::vector<Rational> c) { return RationalSeries(base, std::move(c), Rational(0)); }

// Sum of c_k u^k over the known coefficients.
BigFloat eval_series(const SymbolicSeries& s, const Rational& u, int digits) {
  AtomEvaluator ev(digits);
  const long bits = bits_for_digits(digits);
  BigFloat acc(0, bits);
  for (int e = s.base(); e < s.order(); ++e) acc += ev.expression(s.coeff(e)) * pow_si(BigFloat(u, bits), e);
  return acc;
}

// psi(x) + gamma through MPFR's own digamma.
BigFloat mpfr_psi_plus_gamma(const Rational& x, long bits) {
  BigFloat v(x, bits), out(bits), g(bits);
  mpfr_digamma(out.get(), v.get(), MPFR_RNDN);
  mpfr_const_euler(g.get(), MPFR_RNDN);
  return out + g;
}

}  // namespace

TEST(Series, GeometricReciprocal) {
  const auto inv = rs(0, {1, -1, 0, 0, 0, 0}).recip();
  EXPECT_EQ(inv.base(), 0);
  EXPECT_EQ(inv.order(), 6);
  for (int e = 0; e < 6; ++e) EXPECT_EQ(inv.coeff(e), 1);
}

TEST(Series, LaurentReciprocalShiftsOrder) {
  // u^2 (1 + u) + O(u^5)  ->  u^-2 (1 - u + u^2) + O(u^1)
  const auto inv = rs(2, {1, 1, 0}).recip();
  EXPECT_EQ(inv.base(), -2);
  EXPECT_EQ(inv.order(), 1);
  EXPECT_EQ(inv.coeff(-2), 1);
  EXPECT_EQ(inv.coeff(-1), -1);
  EXPECT_EQ(inv.coeff(0), 1);
  EXPECT_THROW(inv.coeff(1), TruncationError);
}

TEST(Series, ProductTracksTruncation) {
  const auto a = rs(-1, {1, 2, 3});  // O(u^2)
  const auto b = rs(1, {1, 1});      // O(u^3)
  const auto p = a * b;
  EXPECT_EQ(p.order(), 2);  // min(2 + 1, 3 - 1)
  EXPECT_EQ(p.coeff(0), 1);
  EXPECT_EQ(p.coeff(1), 3);
  EXPECT_THROW(p.coeff(2), TruncationError);
}

TEST(Series, SumDifferenceAndResidue) {
  const auto a = rs(-2, {1, 5, 7, 1});
  const auto b = rs(-1, {2, 1});
  const auto s = a + b;
  EXPECT_EQ(s.order(), 1);
  EXPECT_EQ(s.residue(), 7);
  EXPECT_EQ((a - a).is_zero_series(), true);
  EXPECT_EQ((-a).coeff(-2), -1);
}

TEST(Series, ReciprocalTimesSelfIsOne) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> c;
    c.emplace_back(d(rng) == 0 ? 3 : d(rng) | 1);
    for (int i = 0; i < 7; ++i) c.emplace_back(d(rng));
    const int base = trial % 5 - 2;
    const auto s = rs(base, c);
    const auto one = s * s.recip();
    ASSERT_EQ(one.order(), 8);
    EXPECT_EQ(one.coeff(0), 1);
    for (int e = 1; e < 8; ++e) EXPECT_EQ(one.coeff(e), 0);
  }
}

TEST(Series, DerivativeLowersOrder) {
  const auto d = rs(-1, {1, 4, 3, 2}).diff();  // u^-1 + 4 + 3u + 2u^2
  EXPECT_EQ(d.order(), 2);
  EXPECT_EQ(d.coeff(-2), -1);
  EXPECT_EQ(d.coeff(0), 3);
  EXPECT_EQ(d.coeff(1), 4);
}

TEST(Series, RatfuncExpansion) {
  // 1/(s^2 + 1) at s = 0: 1 - u^2 + u^4
  const auto s = ratfunc_series_at<Rational>(Polynomial{1}, Polynomial{1, 0, 1}, Rational(0), 6);
  EXPECT_EQ(s.coeff(0), 1);
  EXPECT_EQ(s.coeff(1), 0);
  EXPECT_EQ(s.coeff(2), -1);
  EXPECT_EQ(s.coeff(4), 1);
  // 1/(2s+1)^2 at s = -1/2: (1/4) u^-2
  const auto t = ratfunc_series_at<Rational>(Polynomial{1}, Polynomial{1, 4, 4}, Rational(-1, 2), 2);
  EXPECT_EQ(t.base(), -2);
  EXPECT_EQ(t.coeff(-2), Rational(1, 4));
  EXPECT_EQ(t.coeff(-1), 0);
}

TEST(Series, PsiAtZeroCoefficients) {
  const auto s = psi_series_at_zero(4);
  EXPECT_EQ(s.base(), -1);
  EXPECT_EQ(s.coeff(-1), sym_constant(1));
  EXPECT_TRUE(s.coeff(0).is_zero_poly());
  EXPECT_EQ(s.coeff(1), sym_atom(Atom::zeta(2), -1));
  EXPECT_EQ(s.coeff(3), sym_atom(Atom::zeta(4), -1));
}

TEST(Series, PsiAtZeroMatchesMpfr) {
  const int digits = 60;
  const long bits = bits_for_digits(digits);
  const Rational u(1, 1000);
  const auto s = psi_series_at_zero(30);
  // psi(-s) + gamma at s = u
  const BigFloat want = mpfr_psi_plus_gamma(-u, bits);
  EXPECT_LT(testutil::log10_diff(eval_series(s, u, digits), want), -55);
}

TEST(Series, PsiAtRationalMatchesMpfr) {
  const int digits = 60;
  const long bits = bits_for_digits(digits);
  const Rational u(1, 1000);
  for (const Rational t : {Rational(1, 3), Rational(5, 2), Rational(-7, 4), Rational(2)}) {
    const auto s = psi_series_at(t, 30);
    const BigFloat want = mpfr_psi_plus_gamma(t - u, bits);
    EXPECT_LT(testutil::log10_diff(eval_series(s, u, digits), want), -50) << t.get_str();
  }
}

TEST(Series, PsiAtRationalFirstCoefficients) {
  const Rational t(2, 3);
  const auto s = psi_series_at(t, 3);
  EXPECT_EQ(s.coeff(0), psi_value(0, t) + sym_atom(Atom::gamma()));
  EXPECT_EQ(s.coeff(1), -psi_value(1, t));
  EXPECT_EQ(s.coeff(2), psi_value(2, t).scaled(Rational(1, 2)));
  EXPECT_THROW(psi_series_at(Rational(-3), 3), std::exception);
}

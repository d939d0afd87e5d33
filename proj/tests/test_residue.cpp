#include <gtest/gtest.h>

#include <mpfr.h>

#include <numeric>
#include <random>

#include "eulersum/catalog.hpp"
#include "eulersum/direct_sum.hpp"
#include "eulersum/evaluate.hpp"
#include "eulersum/residue.hpp"
#include "test_util.hpp"

using namespace eulersum;

namespace {

// Builds sum c_i * monomial_i from "coeff:monomial" pairs.
SymbolicExpression sx(std::initializer_list<std::pair<Rational, const char*>> terms) {
  SymbolicExpression e;
  for (const auto& [c, text] : terms) e += parse_monomial_text(text).scaled(c);
  return e;
}

RationalFunction single_pole(long m, long n, int p, int q = 0) {
  return RationalFunction(Polynomial::monomial(1, q), Polynomial{Rational(n), Rational(m)}.pow(p));
}

BigFloat direct(const RationalFunction& r, int digits) {
  DirectSumConfig cfg;
  cfg.digits = digits;
  cfg.terms = 2000;
  return direct_euler_sum(r, cfg).value;
}

BigFloat oracle_psi(int order, const std::string& arg, int digits) {
  static const auto oracle = testutil::load_json(testutil::data_path("polygamma_oracle.json"));
  for (const auto& row : oracle["polygamma"])
    if (row["order"] == order && row["arg"] == arg) return testutil::parse_decimal(row["value"], digits);
  throw std::runtime_error("oracle row missing");
}

}  // namespace

TEST(PathEquivalence, CorollaryOneGrid) {
  int cases = 0;
  for (long m = 1; m <= 4; ++m)
    for (long n = 1; n <= 4; ++n) {
      if (std::gcd(m, n) != 1) continue;
      for (int p = 2; p <= 8; ++p) {
        const auto r = single_pole(m, n, p);
        const auto general = closed_form(r).expression;
        EXPECT_EQ(corollary1(m, n, p).expression, general) << m << " " << n << " " << p;
        EXPECT_EQ(closed_form_via_theorem3(r).expression, general) << m << " " << n << " " << p;
        ++cases;
      }
    }
  EXPECT_EQ(cases, 11 * 7);
}

TEST(PathEquivalence, CorollaryTwoGrid) {
  for (long m = 1; m <= 4; ++m)
    for (long n = 1; n <= 4; ++n) {
      if (std::gcd(m, n) != 1) continue;
      for (int p = 3; p <= 8; ++p)
        for (int q = 1; q <= p - 2; ++q) {
          const auto r = single_pole(m, n, p, q);
          const auto general = closed_form(r).expression;
          EXPECT_EQ(corollary2(m, n, p, q).expression, general) << m << " " << n << " " << p << " " << q;
          EXPECT_EQ(closed_form_via_theorem3(r).expression, general) << m << " " << n << " " << p << " " << q;
        }
    }
}

TEST(PathEquivalence, CorollaryTwoNamedCases) {
  EXPECT_EQ(corollary2(2, 1, 4, 1).expression, closed_form(parse_ratfunc("k/(2k+1)^4")).expression);
  EXPECT_EQ(corollary2(3, 2, 5, 2).expression, closed_form(parse_ratfunc("k^2/(3k+2)^5")).expression);
  EXPECT_EQ(corollary2(1, 1, 3, 1).expression, T_func(1, 2) - T_func(1, 3));
}

TEST(PathEquivalence, TheoremThreeOnMixedCatalogRows) {
  const auto fixtures = load_catalog(testutil::repo_path("data/catalog.jsonl"));
  int checked = 0;
  for (const auto& f : fixtures) {
    const auto r = parse_ratfunc(f.lhs);
    const auto pfd = partial_fractions(r);
    if (!pfd.all_rational() || check_summable(r).has_pole_at_zero) continue;
    EXPECT_EQ(closed_form_via_theorem3(r).expression, closed_form(r).expression) << f.id;
    ++checked;
  }
  EXPECT_GE(checked, 100);
}

TEST(PathEquivalence, CorollaryConstraints) {
  EXPECT_THROW(corollary1(2, 4, 3), std::invalid_argument);
  EXPECT_THROW(corollary1(2, 1, 1), std::invalid_argument);
  EXPECT_THROW(corollary2(1, 1, 3, 2), std::invalid_argument);
  EXPECT_THROW(closed_form_via_theorem3(parse_ratfunc("1/(k^2+1)")), std::domain_error);
}

TEST(PartialFractions, RandomRecombination) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> lead(1, 5), shift(-6, 6), mult(1, 3), nfac(1, 3), coin(0, 3);
  int done = 0;
  while (done < 1000) {
    Polynomial den{1};
    for (int i = nfac(rng); i > 0; --i) {
      Polynomial f = coin(rng) == 0 ? Polynomial{Rational(lead(rng)), 0, 1} : Polynomial{Rational(shift(rng)), Rational(lead(rng))};
      den = den * f.pow(mult(rng));
    }
    if (den.degree() < 2) continue;
    const Polynomial num = testutil::random_poly(rng, std::uniform_int_distribution<int>(0, den.degree() - 2)(rng));
    const RationalFunction r(num, den);
    if (!check_summable(r).summable()) continue;
    ASSERT_EQ(partial_fractions(r).recombine(), r) << r.to_string();
    ++done;
  }
}

TEST(PartialFractions, SimplePoleCoefficientsSumToZero) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> lead(1, 5), shift(1, 9), mult(1, 3), nfac(2, 4);
  for (int trial = 0; trial < 300; ++trial) {
    Polynomial den{1};
    for (int i = nfac(rng); i > 0; --i) den = den * Polynomial{Rational(shift(rng)), Rational(lead(rng))}.pow(mult(rng));
    const Polynomial num = testutil::random_poly(rng, std::uniform_int_distribution<int>(0, den.degree() - 2)(rng));
    const RationalFunction r(num, den);
    if (r.denominator().degree() - r.numerator().degree() < 2) continue;
    Rational total = 0;
    for (const auto& t : partial_fractions(r).rational_terms)
      if (t.power == 1) total += t.coeff;
    EXPECT_EQ(total, 0) << r.to_string();
  }
}

TEST(PartialFractions, ComplexBlockForCubic) {
  const auto pfd = partial_fractions(parse_ratfunc("1/(k^3+1)"));
  ASSERT_EQ(pfd.rational_terms.size(), 1u);
  EXPECT_EQ(pfd.rational_terms[0].t, 1);
  EXPECT_EQ(pfd.rational_terms[0].coeff, Rational(1, 3));
  ASSERT_EQ(pfd.algebraic_terms.size(), 1u);
  EXPECT_EQ(pfd.algebraic_terms[0].q, (Polynomial{1, -1, 1}));
}

TEST(Residue, ContributionAtZeroVanishesWhenAnalytic) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> shift(1, 7), lead(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial den = Polynomial{Rational(shift(rng)), Rational(lead(rng))}.pow(1 + trial % 3) *
                     Polynomial{Rational(shift(rng)), 0, 1};
    const Polynomial num = testutil::random_poly(rng, trial % 3);
    const RationalFunction r(num, den);
    EXPECT_TRUE(rational_point_contribution(r, 0).is_zero_poly()) << r.to_string();
  }
}

TEST(Residue, PoleAtZeroUsesZeta) {
  const auto e = closed_form(parse_ratfunc("1/k^3")).expression;
  EXPECT_EQ(e, sx({{Rational(5, 2), "zeta(4)"}, {Rational(-1, 2), "zeta(2)^2"}}));
}

TEST(Residue, TAtOneOne) {
  EXPECT_EQ(T_func(1, 1), sx({{Rational(1, 2), "psi(1,1)"}, {-1, "gamma*psi(0,1)"}, {Rational(-1, 2), "psi(0,1)^2"}}));
  EXPECT_EQ(simplify_special_values(T_func(1, 1)), sx({{Rational(1, 12), "pi^2"}, {Rational(1, 2), "gamma^2"}}));
}

TEST(Residue, TAtHalfMatchesCatalogScaling) {
  const auto four_t = T_func(Rational(1, 2), 2).scaled(Rational(1, 4));
  EXPECT_EQ(four_t, sx({{Rational(-1, 8), "psi(2,1/2)"},
                        {Rational(1, 4), "gamma*psi(1,1/2)"},
                        {Rational(1, 4), "psi(0,1/2)*psi(1,1/2)"}}));
  EXPECT_EQ(corollary1(2, 1, 2).expression, four_t);
}

TEST(Residue, TheoremThreeTwoSimplePoles) {
  const auto want = sx({{Rational(-1, 2), "psi(1,1/2)"}, {1, "gamma*psi(0,1/2)"}, {Rational(1, 2), "psi(0,1/2)^2"},
                        {Rational(1, 2), "psi(1,1/3)"}, {-1, "gamma*psi(0,1/3)"}, {Rational(-1, 2), "psi(0,1/3)^2"}});
  EXPECT_EQ(closed_form_via_theorem3(parse_ratfunc("1/((2k+1)(3k+1))")).expression, want);
  EXPECT_EQ(closed_form_via_theorem3(parse_ratfunc("1/(k+1)^2")).expression, T_func(1, 2));
}

TEST(Residue, TAtOneTwoIsZetaThree) {
  AtomEvaluator ev(50);
  const BigFloat v = ev.expression(T_func(1, 2));
  BigFloat z3(ev.bits());
  mpfr_zeta_ui(z3.get(), 3, MPFR_RNDN);
  EXPECT_LT(testutil::log10_diff(v, z3), -48);
  EXPECT_LT(testutil::log10_diff(v, direct(parse_ratfunc("1/(k+1)^2"), 50)), -45);
}

TEST(Residue, CorollaryTwoMatchesDirectSum) {
  AtomEvaluator ev(50);
  const BigFloat v = ev.expression(corollary2(1, 1, 3, 1).expression);
  EXPECT_LT(testutil::log10_diff(v, direct(parse_ratfunc("k/(k+1)^3"), 50)), -45);
}

TEST(Residue, WorkedExampleConstant) {
  const int digits = 60;
  const long bits = bits_for_digits(digits);
  BigFloat z3(bits), pi(bits), l2(bits);
  mpfr_zeta_ui(z3.get(), 3, MPFR_RNDN);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  mpfr_const_log2(l2.get(), MPFR_RNDN);
  const BigFloat pi2 = pi * pi;
  const BigFloat want = z3 * 7 / 4 + pi2 / 4 - l2 * 2 - pi2 * l2 / 4;
  const auto cf = closed_form(parse_ratfunc("1/(2k-1)^2"));
  AtomEvaluator ev(digits);
  EXPECT_LT(testutil::log10_diff(ev.expression(cf.expression), want), -58);
  EXPECT_EQ(want.to_string(14), "1.4744342037175");
  EXPECT_EQ(simplify_special_values(cf.expression, {true}),
            sx({{Rational(7, 4), "zeta(3)"}, {Rational(1, 4), "pi^2"}, {-2, "log(2)"}, {Rational(-1, 4), "pi^2*log(2)"}}));
}

TEST(Residue, MixedCubeSquareAgainstDisplayedCombination) {
  const int digits = 60;
  const long bits = bits_for_digits(digits);
  BigFloat z3(bits), pi(bits), l2(bits), l3(bits), s3(Rational(3), bits);
  mpfr_zeta_ui(z3.get(), 3, MPFR_RNDN);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  mpfr_const_log2(l2.get(), MPFR_RNDN);
  mpfr_log_ui(l3.get(), 3, MPFR_RNDN);
  s3 = sqrt(s3);
  const BigFloat pi2 = pi * pi;
  const BigFloat inner = -(pi * s3) / 6 - l3 * 3 / 2;
  BigFloat want = pi2 * pi2 / 16 + z3 * 42 + pi2 * 27 / 2 - l2 * z3 * 7 - l2 * pi2 * 6 - l2 * l2 * 108 + inner * inner * 27;
  want += (BigFloat(-27, bits) - pi * s3 / 2 - l3 * 9 / 2) * oracle_psi(1, "1/3", digits);
  want -= oracle_psi(2, "1/3", digits) * 3 / 2;
  AtomEvaluator ev(digits);
  const BigFloat got = ev.expression(closed_form(parse_ratfunc("1/((2k+1)^3(3k+1)^2)")).expression);
  EXPECT_LT(testutil::log10_diff(got, want), -55);
}

TEST(Simplify, PreservesValueOnCatalog) {
  const auto fixtures = load_catalog(testutil::repo_path("data/catalog.jsonl"));
  AtomEvaluator ev(100);
  for (const auto& f : fixtures) {
    const auto e = closed_form(parse_ratfunc(f.lhs)).expression;
    const auto s = simplify_special_values(e, {true});
    EXPECT_LT(testutil::log10_diff(ev.expression(e), ev.expression(s)), -95) << f.id;
  }
}

TEST(Simplify, LeavesOtherAtomsAlone) {
  const auto e = sx({{3, "psi(1,1/3)*gamma"}, {Rational(1, 7), "zeta(5)"}});
  EXPECT_EQ(simplify_special_values(e), e);
}

TEST(Residue, RejectsNonSummable) {
  EXPECT_THROW(closed_form(parse_ratfunc("1/k")), SummabilityError);
  EXPECT_THROW(closed_form(parse_ratfunc("1/((k-2)(k+1)^2)")), SummabilityError);
  EXPECT_THROW(T_func(-2, 3), std::exception);
}

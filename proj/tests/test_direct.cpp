#include <gtest/gtest.h>

#include "eulersum/catalog.hpp"
#include "eulersum/direct_sum.hpp"
#include "eulersum/special.hpp"
#include "test_util.hpp"

using namespace eulersum;

namespace {

Rational exact_partial(const RationalFunction& r, long n) {
  Rational acc = 0, h = 0;
  for (long k = 1; k <= n; ++k) {
    h += Rational(1, k);
    acc += r(Rational(k)) * h;
  }
  return acc;
}

BigFloat direct(const RationalFunction& r, int digits, long terms) {
  DirectSumConfig cfg;
  cfg.digits = digits;
  cfg.terms = terms;
  return direct_euler_sum(r, cfg).value;
}

}  // namespace

TEST(PartialSum, MatchesExactRationals) {
  const int digits = 60;
  const long bits = bits_for_digits(digits);
  for (const char* text : {"1/(k^3+1)", "1/(2k-1)^2", "k/(3k+2)^4", "1/((k^2+3k+1)^2)"}) {
    const auto r = parse_ratfunc(text);
    const BigFloat want(exact_partial(r, 300), bits);
    EXPECT_LT(testutil::log10_diff(partial_sum(r, 300, digits), want), -(digits - 2)) << text;
  }
}

TEST(TailExpansion, LeadingCoefficientsForInverseSquare) {
  const int digits = 50;
  const long bits = bits_for_digits(digits);
  const auto t = tail_expansion(parse_ratfunc("1/k^2"), 6, bits);
  ASSERT_EQ(t.first_power, 2);
  ASSERT_GE(t.a.size(), 3u);
  // H_x / x^2 = (log x + gamma) x^-2 + x^-3 / 2 - x^-4 / 12 + ...
  EXPECT_LT(testutil::log10_diff(t.a[0], euler_gamma_hp(digits)), -(digits - 2));
  EXPECT_LT(testutil::log10_diff(t.b[0], BigFloat(1, bits)), -(digits - 2));
  EXPECT_LT(testutil::log10_diff(t.a[1], BigFloat(Rational(1, 2), bits)), -(digits - 2));
  EXPECT_TRUE(t.b[1].is_zero());
  EXPECT_LT(testutil::log10_diff(t.a[2], BigFloat(Rational(-1, 12), bits)), -(digits - 2));
}

TEST(DirectSum, ZetaThreeFromShiftedSquare) {
  const int digits = 80;
  const BigFloat want = riemann_zeta_hp(3, digits);
  EXPECT_LT(testutil::log10_diff(direct(parse_ratfunc("1/(k+1)^2"), digits, 1000), want), -(digits - 5));
}

TEST(DirectSum, IndependentOfExplicitTerms) {
  const auto fixtures = load_catalog(testutil::repo_path("data/catalog.jsonl"));
  ASSERT_GE(fixtures.size(), 100u);
  const int digits = 100;
  int checked = 0;
  for (size_t i = 0; i < fixtures.size() && checked < 20; i += fixtures.size() / 20) {
    const auto r = parse_ratfunc(fixtures[i].lhs);
    const BigFloat a = direct(r, digits, 1000);
    const BigFloat b = direct(r, digits, 10000);
    EXPECT_LT(testutil::log10_diff(a, b), -(digits - 5)) << fixtures[i].id;
    ++checked;
  }
  EXPECT_EQ(checked, 20);
}

TEST(DirectSum, ErrorBoundIsSmall) {
  DirectSumConfig cfg;
  cfg.digits = 60;
  cfg.terms = 1000;
  const auto res = direct_euler_sum(parse_ratfunc("1/(k^3+1)"), cfg);
  EXPECT_LT(res.error_bound.log10_abs(), -60);
  EXPECT_LT(testutil::log10_diff(res.partial + res.tail, res.value), -70);
}

TEST(DirectSum, ShortTailOrderRaises) {
  DirectSumConfig cfg;
  cfg.digits = 100;
  cfg.terms = 100;
  cfg.tail_order = 5;
  try {
    direct_euler_sum(parse_ratfunc("1/(k+1)^2"), cfg);
    FAIL() << "expected TailOrderError";
  } catch (const TailOrderError& e) {
    EXPECT_GT(e.suggested_terms(), cfg.terms);
  }
}

TEST(DirectSum, PoleGuard) {
  DirectSumConfig cfg;
  cfg.digits = 30;
  cfg.terms = 100;
  EXPECT_THROW(direct_euler_sum(parse_ratfunc("1/(k^2+10000)"), cfg), std::invalid_argument);
  cfg.terms = 2000;
  EXPECT_NO_THROW(direct_euler_sum(parse_ratfunc("1/(k^2+10000)"), cfg));
  EXPECT_NEAR(max_pole_modulus(parse_ratfunc("1/((k^2+10000)(2k+1)^2)")), 100.0, 1e-6);
}

TEST(DirectSum, SummabilityErrors) {
  DirectSumConfig cfg;
  cfg.digits = 30;
  try {
    direct_euler_sum(parse_ratfunc("1/(k+1)"), cfg);
    FAIL();
  } catch (const SummabilityError& e) {
    EXPECT_EQ(e.kind(), SummabilityError::Kind::NotConvergent);
    EXPECT_STREQ(e.what(), "sum not convergent");
  }
  try {
    direct_euler_sum(parse_ratfunc("1/(k-3)^2"), cfg);
    FAIL();
  } catch (const SummabilityError& e) {
    EXPECT_EQ(e.kind(), SummabilityError::Kind::InfiniteSummand);
    EXPECT_STREQ(e.what(), "infinite summand");
  }
}

#include <gtest/gtest.h>

#include <random>

#include "eulersum/ratfunc.hpp"
#include "test_util.hpp"

using namespace eulersum;

TEST(Parse, WorkedExampleDenominator) {
  const auto r = parse_ratfunc("1/(2*k-1)^2");
  EXPECT_EQ(r.numerator(), Polynomial{1});
  EXPECT_EQ(r.denominator(), (Polynomial{1, -4, 4}));
}

TEST(Parse, CancelsCommonFactors) {
  const auto r = parse_ratfunc("(k+1)/(k+1)^3");
  EXPECT_EQ(r.numerator(), Polynomial{1});
  EXPECT_EQ(r.denominator(), (Polynomial{1, 2, 1}));
}

TEST(Parse, QuadraticSquared) {
  const auto r = parse_ratfunc("1/(k^2+3*k+1)^2");
  EXPECT_EQ(r.denominator(), (Polynomial{1, 3, 1}).pow(2));
}

TEST(Parse, PrecedenceAndImplicitProducts) {
  EXPECT_EQ(parse_ratfunc("-k^2"), parse_ratfunc("-(k^2)"));
  EXPECT_EQ(parse_ratfunc("2^3^2"), RationalFunction::from_polynomial(Polynomial{512}));
  EXPECT_EQ(parse_ratfunc("2k(k+1)"), parse_ratfunc("2*k*(k+1)"));
  EXPECT_EQ(parse_ratfunc("1/(2k+1)^3/(3k+1)^2"), parse_ratfunc("1/((2*k+1)^3*(3*k+1)^2)"));
  EXPECT_EQ(parse_ratfunc("1/(1/k+1)"), parse_ratfunc("k/(k+1)"));
  EXPECT_EQ(parse_ratfunc("(k+1)^-2"), parse_ratfunc("1/(k+1)^2"));
  EXPECT_EQ(parse_ratfunc("1/(x^2+1)", "x"), RationalFunction(Polynomial{1}, Polynomial{1, 0, 1}));
}

TEST(Parse, DenominatorNormalization) {
  const auto r = parse_ratfunc("1/(-2*k-2)");
  EXPECT_GT(r.denominator().leading(), 0);
  EXPECT_EQ(r(Rational(1)), Rational(-1, 4));
}

TEST(Parse, ErrorsCarryColumns) {
  try {
    parse_ratfunc("1/(k+1");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 7u);
  }
  try {
    parse_ratfunc("1/(k+$)");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 6u);
  }
  EXPECT_THROW(parse_ratfunc("1/(k-k)"), ParseError);
  EXPECT_THROW(parse_ratfunc("1/n"), ParseError);
  EXPECT_THROW(parse_ratfunc("k^k"), ParseError);
  EXPECT_THROW(parse_ratfunc(""), ParseError);
}

TEST(Parse, PrintReparseRoundTrip) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const Polynomial p = testutil::random_poly(rng, trial % 4);
    Polynomial q = testutil::random_poly(rng, 1 + trial % 5);
    if (trial % 3 == 0) q = q * Polynomial{Rational(trial % 7 + 1), 2};
    const RationalFunction r(p, q);
    const RationalFunction back = parse_ratfunc(r.to_string());
    EXPECT_EQ(back, r) << r.to_string();
    EXPECT_EQ(parse_ratfunc(back.to_string()), back);
  }
}

TEST(Summability, DegreeGapGuard) {
  const auto rep = check_summable(parse_ratfunc("k/(k^2+1)"));
  EXPECT_EQ(rep.degree_gap, 1);
  EXPECT_FALSE(rep.convergent());
  try {
    require_summable(parse_ratfunc("k/(k^2+1)"));
    FAIL() << "no error";
  } catch (const SummabilityError& e) {
    EXPECT_EQ(std::string(e.what()), "sum not convergent");
  }
}

TEST(Summability, PositiveIntegerPole) {
  const auto rep = check_summable(parse_ratfunc("1/(k-3)^2"));
  ASSERT_TRUE(rep.offending_positive_integer_pole.has_value());
  EXPECT_EQ(*rep.offending_positive_integer_pole, 3);
  try {
    require_summable(parse_ratfunc("1/(k-3)^2"));
    FAIL() << "no error";
  } catch (const SummabilityError& e) {
    EXPECT_EQ(std::string(e.what()), "infinite summand");
    EXPECT_EQ(e.kind(), SummabilityError::Kind::InfiniteSummand);
  }
}

TEST(Summability, PolesAtZeroAndNegativeIntegersAccepted) {
  const auto rep = check_summable(parse_ratfunc("1/k^3"));
  EXPECT_EQ(rep.degree_gap, 3);
  EXPECT_TRUE(rep.has_pole_at_zero);
  EXPECT_TRUE(rep.summable());
  EXPECT_NO_THROW(require_summable(parse_ratfunc("1/(k+1)^5")));
  EXPECT_NO_THROW(require_summable(parse_ratfunc("1/((k+2)*(2*k-1)*(k-1/2))")));
}

TEST(Summability, PoleDetectionAgreesWithRoots) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> root(-4, 6);
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial q{1};
    for (int j = 0; j < 3; ++j) q *= Polynomial{Rational(-root(rng), 1 + trial % 2), 1};
    q *= Polynomial{1, 0, 1};
    const auto rep = check_summable(RationalFunction(Polynomial{1}, q));
    bool has_positive_integer_root = false;
    for (const auto& r : rational_roots(q))
      if (r.root > 0 && r.root.get_den() == 1) has_positive_integer_root = true;
    EXPECT_EQ(rep.offending_positive_integer_pole.has_value(), has_positive_integer_root);
    if (rep.offending_positive_integer_pole) EXPECT_EQ(q(*rep.offending_positive_integer_pole), 0);
  }
}

#include <gtest/gtest.h>

#include <random>

#include "eulersum/evaluate.hpp"
#include "eulersum/pslq.hpp"
#include "eulersum/special.hpp"
#include "test_util.hpp"

using namespace eulersum;

namespace {

std::vector<BigFloat> constants(int digits) {
  const long bits = bits_for_digits(digits);
  return {const_pi(bits), exp(BigFloat(1, bits)), sqrt(BigFloat(2, bits)), riemann_zeta_hp(3, digits),
          euler_gamma_hp(digits), const_log(3, bits)};
}

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Pslq, LogarithmRelation) {
  const int digits = 50;
  const long bits = bits_for_digits(digits);
  const auto res = pslq_find({const_log(2, bits), const_log(3, bits), const_log(6, bits)}, 1000, digits);
  ASSERT_TRUE(res.found());
  EXPECT_EQ(res.coefficients, ints({1, 1, -1}));
  EXPECT_GT(res.confidence, 20);
}

TEST(Pslq, PlantedRelations) {
  const int digits = 80;
  const long bits = bits_for_digits(digits);
  const auto base = constants(digits);
  const BigFloat threshold = pow10_neg(72, bits);
  std::mt19937 rng(314);
  std::uniform_int_distribution<int> coef(-40, 40);
  for (int trial = 0; trial < 25; ++trial) {
    const size_t n = 2 + trial % 4;
    std::vector<BigFloat> x(1, BigFloat(bits));
    std::vector<Integer> planted(1, 1);
    for (size_t i = 0; i < n; ++i) {
      int c = coef(rng);
      if (c == 0) c = 7;
      x[0] -= base[i] * static_cast<long>(c);
      x.push_back(base[i]);
      planted.emplace_back(c);
    }
    const auto res = pslq_find(x, 1000, digits);
    ASSERT_TRUE(res.found()) << trial;
    EXPECT_EQ(res.coefficients, planted) << trial;
    // invariants of a found relation
    BigFloat sum(bits);
    Integer biggest = 0;
    for (size_t i = 0; i < x.size(); ++i) {
      sum += x[i] * BigFloat::from_integer(res.coefficients[i], bits);
      biggest = std::max<Integer>(biggest, abs(res.coefficients[i]));
    }
    EXPECT_LT(abs(sum), threshold);
    EXPECT_LE(biggest, 1000);
  }
}

TEST(Pslq, NoSmallRelationAmongUnrelatedConstants) {
  const int digits = 60;
  const auto res = pslq_find(constants(digits), 1000, digits);
  EXPECT_FALSE(res.found());
}

TEST(Pslq, CoefficientBoundIsRespected) {
  const int digits = 80;
  const auto base = constants(digits);
  // relation with a coefficient of 5000, searched with a bound of 100
  const BigFloat x0 = base[0] * 5000L - base[1] * 3L;
  const auto res = pslq_find({x0, base[0], base[1]}, 100, digits);
  EXPECT_FALSE(res.found());
  const auto wide = pslq_find({x0, base[0], base[1]}, 10000, digits);
  ASSERT_TRUE(wide.found());
  EXPECT_EQ(wide.coefficients, ints({1, -5000, 3}));
}

TEST(Pslq, RejectsShortInput) {
  EXPECT_THROW(pslq_find({BigFloat(1, 100)}, 10, 20), std::invalid_argument);
}

TEST(Discovery, ShiftedFifthPowerFromExplicitBasis) {
  const int digits = 60;
  const ConstantBasis basis =
      make_basis({sym_atom(Atom::zeta(6)), parse_monomial_text("zeta(3)^2")}, digits);
  const auto res = discover(parse_ratfunc("1/(k+1)^5"), basis, digits, 100000, 2000);
  ASSERT_EQ(res.status, DiscoveryResult::Status::Found) << res.message;
  const SymbolicExpression want =
      sym_atom(Atom::zeta(6), Rational(3, 4)) + parse_monomial_text("zeta(3)^2").scaled(Rational(-1, 2));
  EXPECT_EQ(res.closed_form.expression, want);
  EXPECT_EQ(res.closed_form.provenance.method, "pslq");
}

TEST(Discovery, InverseCubeFromAutoBasis) {
  const int digits = 60;
  const auto r = parse_ratfunc("1/k^3");
  const ConstantBasis basis = make_basis(auto_basis_constants(r), digits);
  ASSERT_GE(basis.size(), 1u);
  const auto res = discover(r, basis, digits, 100000, 2000);
  ASSERT_EQ(res.status, DiscoveryResult::Status::Found) << res.message;
  EXPECT_EQ(res.closed_form.expression, parse_monomial_text("1/72*pi^4"));
}

TEST(Discovery, RationalPoleAutoBasisContainsPsiShapes) {
  const auto list = auto_basis_constants(parse_ratfunc("1/(3k+1)^2"));
  const auto has = [&](const char* text) {
    return std::find(list.begin(), list.end(), parse_monomial_text(text)) != list.end();
  };
  EXPECT_TRUE(has("psi(2,1/3)"));
  EXPECT_TRUE(has("gamma*psi(1,1/3)"));
  EXPECT_TRUE(has("psi(0,1/3)*psi(1,1/3)"));
  EXPECT_THROW(auto_basis_constants(parse_ratfunc("1/(k^2+1)")), std::domain_error);
}

TEST(Discovery, DependentBasisIsAmbiguous) {
  const int digits = 50;
  const ConstantBasis basis = make_basis({sym_atom(Atom::zeta(4)), parse_monomial_text("pi^4")}, digits);
  AtomEvaluator ev(digits);
  const auto res = discover_from_value(ev.atom(Atom::zeta(4)), basis, digits);
  EXPECT_EQ(res.status, DiscoveryResult::Status::Ambiguous);
}

TEST(Discovery, NoRelationReported) {
  const int digits = 50;
  const ConstantBasis basis = make_basis({sym_atom(Atom::zeta(3)), sym_atom(Atom::gamma())}, digits);
  const auto res = discover_from_value(const_pi(bits_for_digits(digits)), basis, digits, 1000);
  EXPECT_NE(res.status, DiscoveryResult::Status::Found);
}

#include <gtest/gtest.h>

#include <map>
#include <set>
#include <sstream>

#include "eulersum/catalog.hpp"
#include "eulersum/evaluate.hpp"
#include "eulersum/serialize.hpp"
#include "eulersum/special.hpp"
#include "test_util.hpp"

using namespace eulersum;

namespace {

const std::vector<Fixture>& catalog() {
  static const auto fixtures = load_catalog(testutil::repo_path("data/catalog.jsonl"));
  return fixtures;
}

const Fixture& fixture(const std::string& id) {
  for (const auto& f : catalog())
    if (f.id == id) return f;
  throw std::runtime_error("no fixture " + id);
}

std::string catalog_error(const std::string& text) {
  std::istringstream in(text);
  try {
    load_catalog(in);
  } catch (const CatalogError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Catalog, LoadsAllGroups) {
  const auto& fs = catalog();
  EXPECT_GE(fs.size(), 80u);
  std::map<std::string, int> groups;
  std::set<std::string> ids;
  for (const auto& f : fs) {
    ++groups[f.id.substr(0, f.id.find('/'))];
    EXPECT_TRUE(ids.insert(f.id).second);
    EXPECT_FALSE(f.source.empty());
  }
  EXPECT_EQ(groups["single"], 34);
  EXPECT_EQ(groups["mixed"], 72);
  EXPECT_EQ(groups["identity"], 3);
  EXPECT_EQ(groups["worked"], 5);
}

TEST(Catalog, EmptyAndBlankInput) {
  std::istringstream in("\n  \n");
  EXPECT_TRUE(load_catalog(in).empty());
}

TEST(Catalog, DuplicateIdRejected) {
  const std::string line = R"({"id":"a","lhs":"1/k^2","source":"x"})";
  EXPECT_NE(catalog_error(line + "\n" + line + "\n").find("duplicate fixture id a"), std::string::npos);
}

TEST(Catalog, BadLhsNamesFixture) {
  const auto msg = catalog_error(R"({"id":"broken","lhs":"1/(k+","source":"x"})");
  EXPECT_NE(msg.find("broken"), std::string::npos) << msg;
  EXPECT_NE(msg.find("lhs"), std::string::npos) << msg;
  const auto div = catalog_error(R"j({"id":"slow","lhs":"1/(k+1)","source":"x"})j");
  EXPECT_NE(div.find("sum not convergent"), std::string::npos) << div;
}

TEST(Catalog, BadRhsNamesField) {
  const auto msg = catalog_error(R"({"id":"r","lhs":"1/k^2","source":"x","rhs":{"terms":7}})");
  EXPECT_NE(msg.find("fixture r: field 'rhs'"), std::string::npos) << msg;
}

TEST(Catalog, MissingFieldsAndBadJson) {
  EXPECT_NE(catalog_error(R"({"lhs":"1/k^2"})").find("'id'"), std::string::npos);
  EXPECT_NE(catalog_error(R"({"id":"q","lhs":"1/k^2"})").find("'source'"), std::string::npos);
  EXPECT_NE(catalog_error("{not json").find("line 1"), std::string::npos);
}

TEST(Catalog, JsonRoundTrip) {
  for (const auto& f : catalog()) {
    const Fixture g = fixture_from_json(nlohmann::json::parse(fixture_to_json(f).dump()));
    EXPECT_EQ(g.id, f.id);
    EXPECT_EQ(g.lhs, f.lhs);
    EXPECT_EQ(g.rhs.has_value(), f.rhs.has_value());
    if (f.rhs) EXPECT_EQ(*g.rhs, *f.rhs);
    EXPECT_EQ(g.expected_digits, f.expected_digits);
  }
}

TEST(Verify, HalfSquareFixturePasses) {
  const auto e = verify_fixture(fixture("single/(2k+1)^2"), VerifyOptions{});
  EXPECT_TRUE(e.pass) << e.message;
  EXPECT_LT(e.log10_difference, -90);
  EXPECT_EQ(e.rhs_check, RhsCheck::Canonical);
}

TEST(Verify, InverseCubeIsFiveQuartersZetaFour) {
  VerifyOptions opts;
  opts.digits = 60;
  opts.tolerance_digits = 50;
  opts.terms = 2000;
  const auto e = verify_fixture(fixture("identity/k^3"), opts);
  EXPECT_TRUE(e.pass) << e.message;
  const BigFloat want = riemann_zeta_hp(4, 60) * 5 / 4;
  EXPECT_EQ(e.closed_value, want.to_string(40));
}

TEST(Verify, CorruptedRhsIsCanonicalMismatch) {
  Fixture f = fixture("single/(2k+1)^2");
  ASSERT_TRUE(f.rhs);
  auto j = to_json(*f.rhs);
  j["terms"][0]["coeff"]["num"] = "12345";
  f.rhs = from_json(j);
  VerifyOptions opts;
  opts.digits = 40;
  opts.tolerance_digits = 30;
  opts.terms = 1000;
  const auto e = verify_fixture(f, opts);
  EXPECT_FALSE(e.pass);
  EXPECT_EQ(e.rhs_check, RhsCheck::Mismatch);
  EXPECT_NE(e.message.find("canonical mismatch"), std::string::npos) << e.message;
  EXPECT_TRUE(e.difference_ok);
}

TEST(Verify, WrongExpectedDigitsFail) {
  Fixture f = fixture("worked/k^3+1");
  f.expected_digits = "0.828902143400992508752";
  VerifyOptions opts;
  opts.digits = 40;
  opts.tolerance_digits = 30;
  opts.terms = 1000;
  const auto e = verify_fixture(f, opts);
  EXPECT_FALSE(e.expected_ok);
  EXPECT_FALSE(e.pass);
  f.expected_digits = "0.828902143400992508742";
  EXPECT_TRUE(verify_fixture(f, opts).pass);
}

TEST(Verify, ParallelRunIsSortedAndDeterministic) {
  std::vector<Fixture> some(catalog().begin(), catalog().begin() + 12);
  std::reverse(some.begin(), some.end());
  VerifyOptions opts;
  opts.digits = 40;
  opts.tolerance_digits = 30;
  opts.terms = 1000;
  opts.jobs = 3;
  const auto a = verify_catalog(some, opts);
  opts.jobs = 1;
  const auto b = verify_catalog(some, opts);
  ASSERT_EQ(a.size(), 12u);
  for (size_t i = 0; i < a.size(); ++i) {
    if (i > 0) EXPECT_LT(a[i - 1].id, a[i].id);
    EXPECT_EQ(a[i].id, b[i].id);
    EXPECT_EQ(a[i].closed_value, b[i].closed_value);
    EXPECT_TRUE(a[i].pass) << a[i].id << " " << a[i].message;
  }
  std::ostringstream table;
  write_report_table(table, a);
  EXPECT_NE(table.str().find("12/12 fixtures passed"), std::string::npos);
  const auto j = report_to_json(a);
  EXPECT_EQ(j.size(), 12u);
  EXPECT_EQ(j[0]["rhs_check"], rhs_check_name(a[0].rhs_check));
}

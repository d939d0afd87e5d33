#pragma once

// Fixture corpus of known Euler sums and the runner that checks each one
// two ways: closed form plus polygamma values against direct summation.
// Fixtures are stored one JSON object per line:
//   {"id": ..., "lhs": "1/(2*k+1)^2", "rhs": {...}, "source": "B.1/(2k+1)^2",
//    "expected_digits": "0.82890..."}
// with "rhs" and "expected_digits" optional.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "eulersum/symbolic.hpp"

namespace eulersum {

struct Fixture {
  std::string id;
  std::string lhs;
  std::optional<SymbolicExpression> rhs;
  std::string source;
  std::optional<std::string> expected_digits;
};

/// Schema problems, naming the fixture and field.
class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Fixture fixture_from_json(const nlohmann::json& j);
nlohmann::json fixture_to_json(const Fixture& f);

/// Reads a JSON-lines catalog. Blank lines are skipped; ids must be unique
/// and every lhs must parse and be summable.
std::vector<Fixture> load_catalog(const std::string& path);
std::vector<Fixture> load_catalog(std::istream& in);

enum class RhsCheck {
  Absent,       // fixture has no rhs
  Canonical,    // rhs equals the derived closed form term for term
  Numeric,      // different shape, same value (e.g. special values applied)
  Mismatch,
};

struct VerificationEntry {
  std::string id;
  std::string closed_value;
  std::string direct_value;
  double log10_difference = 0;  // log10 |closed - direct|
  bool difference_ok = false;
  RhsCheck rhs_check = RhsCheck::Absent;
  bool expected_ok = true;
  bool pass = false;
  double closed_seconds = 0;
  double direct_seconds = 0;
  std::string message;

  double speedup() const { return closed_seconds > 0 ? direct_seconds / closed_seconds : 0; }
};

struct VerifyOptions {
  int digits = 100;
  long terms = 100000;
  int tolerance_digits = 90;  // pass when |closed - direct| < 10^-tolerance_digits
  int jobs = 1;
};

/// Throws std::runtime_error prefixed with the fixture id on failure to run.
VerificationEntry verify_fixture(const Fixture& f, const VerifyOptions& opts);

/// Runs every fixture on opts.jobs threads; result sorted by id.
std::vector<VerificationEntry> verify_catalog(const std::vector<Fixture>& fixtures, const VerifyOptions& opts);

std::string rhs_check_name(RhsCheck c);
void write_report_table(std::ostream& out, const std::vector<VerificationEntry>& entries);
nlohmann::json report_to_json(const std::vector<VerificationEntry>& entries);

}  // namespace eulersum

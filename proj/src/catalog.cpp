#include "eulersum/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <thread>

#include "eulersum/direct_sum.hpp"
#include "eulersum/evaluate.hpp"
#include "eulersum/ratfunc.hpp"
#include "eulersum/residue.hpp"
#include "eulersum/serialize.hpp"

namespace eulersum {

using nlohmann::json;

namespace {

std::string string_field(const json& j, const char* name, const std::string& id) {
  if (!j.contains(name) || !j.at(name).is_string())
    throw CatalogError("fixture " + id + ": field '" + name + "' must be a string");
  return j.at(name).get<std::string>();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

Fixture fixture_from_json(const json& j) {
  if (!j.is_object()) throw CatalogError("fixture record must be an object");
  if (!j.contains("id") || !j.at("id").is_string()) throw CatalogError("fixture without string field 'id'");
  Fixture f;
  f.id = j.at("id").get<std::string>();
  f.lhs = string_field(j, "lhs", f.id);
  f.source = string_field(j, "source", f.id);
  if (j.contains("rhs") && !j.at("rhs").is_null()) {
    try {
      f.rhs = from_json(j.at("rhs"));
    } catch (const std::exception& e) {
      throw CatalogError("fixture " + f.id + ": field 'rhs': " + e.what());
    }
  }
  if (j.contains("expected_digits") && !j.at("expected_digits").is_null())
    f.expected_digits = string_field(j, "expected_digits", f.id);
  try {
    require_summable(parse_ratfunc(f.lhs));
  } catch (const std::exception& e) {
    throw CatalogError("fixture " + f.id + ": field 'lhs': " + e.what());
  }
  return f;
}

json fixture_to_json(const Fixture& f) {
  json j = {{"id", f.id}, {"lhs", f.lhs}};
  if (f.rhs) j["rhs"] = to_json(*f.rhs);
  j["source"] = f.source;
  if (f.expected_digits) j["expected_digits"] = *f.expected_digits;
  return j;
}

std::vector<Fixture> load_catalog(std::istream& in) {
  std::vector<Fixture> out;
  std::set<std::string> ids;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw CatalogError("line " + std::to_string(line_no) + ": " + e.what());
    }
    Fixture f = fixture_from_json(j);
    if (!ids.insert(f.id).second) throw CatalogError("duplicate fixture id " + f.id);
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Fixture> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open catalog " + path);
  return load_catalog(in);
}

VerificationEntry verify_fixture(const Fixture& f, const VerifyOptions& opts) {
  VerificationEntry e;
  e.id = f.id;
  try {
    const RationalFunction r = parse_ratfunc(f.lhs);
    const long bits = bits_for_digits(opts.digits);
    const BigFloat tol = pow10_neg(opts.tolerance_digits, bits);

    auto t0 = std::chrono::steady_clock::now();
    const ClosedForm cf = closed_form(r);
    AtomEvaluator ev(opts.digits);
    const BigFloat closed = ev.expression(cf.expression);
    e.closed_seconds = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    DirectSumConfig cfg;
    cfg.digits = opts.digits;
    cfg.terms = opts.terms;
    const BigFloat direct = direct_euler_sum(r, cfg).value.with_precision(bits);
    e.direct_seconds = seconds_since(t0);

    const BigFloat diff = abs(closed - direct);
    e.closed_value = closed.to_string(40);
    e.direct_value = direct.to_string(40);
    e.log10_difference = diff.log10_abs();
    e.difference_ok = diff < tol;
    if (!e.difference_ok) e.message = "closed and direct values disagree";

    if (f.rhs) {
      if (*f.rhs == cf.expression) {
        e.rhs_check = RhsCheck::Canonical;
      } else {
        const BigFloat rhs_diff = abs(ev.expression(*f.rhs) - closed);
        if (rhs_diff < tol) {
          e.rhs_check = RhsCheck::Numeric;
        } else {
          e.rhs_check = RhsCheck::Mismatch;
          std::ostringstream msg;
          msg << "canonical mismatch: stored rhs differs from the derived closed form (|rhs - closed| ~ 1e"
              << std::lround(rhs_diff.log10_abs()) << ")";
          e.message = msg.str();
        }
      }
    }
    if (f.expected_digits) {
      const std::string& s = *f.expected_digits;
      const auto dot = s.find('.');
      const int decimals = dot == std::string::npos ? 0 : static_cast<int>(s.size() - dot - 1);
      const BigFloat expected = BigFloat::from_string(s, bits);
      e.expected_ok = abs(closed - expected) < pow10_neg(decimals, bits);
      if (!e.expected_ok) e.message = "value does not match expected digits " + s;
    }
    e.pass = e.difference_ok && e.rhs_check != RhsCheck::Mismatch && e.expected_ok;
  } catch (const std::exception& ex) {
    throw std::runtime_error("fixture " + f.id + ": " + ex.what());
  }
  return e;
}

std::vector<VerificationEntry> verify_catalog(const std::vector<Fixture>& fixtures, const VerifyOptions& opts) {
  std::vector<VerificationEntry> out(fixtures.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next++) < fixtures.size();) {
      try {
        out[i] = verify_fixture(fixtures[i], opts);
      } catch (const std::exception& ex) {
        out[i].id = fixtures[i].id;
        out[i].message = ex.what();
        out[i].pass = false;
      }
    }
  };
  const int jobs = std::max(1, std::min<int>(opts.jobs, static_cast<int>(fixtures.size())));
  std::vector<std::thread> threads;
  for (int t = 1; t < jobs; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

std::string rhs_check_name(RhsCheck c) {
  switch (c) {
    case RhsCheck::Absent: return "none";
    case RhsCheck::Canonical: return "canonical";
    case RhsCheck::Numeric: return "numeric";
    case RhsCheck::Mismatch: return "MISMATCH";
  }
  return "?";
}

void write_report_table(std::ostream& out, const std::vector<VerificationEntry>& entries) {
  size_t width = 2;
  for (const auto& e : entries) width = std::max(width, e.id.size());
  out << std::left << std::setw(static_cast<int>(width)) << "id" << "  result  log10|diff|  rhs        closed[s]  direct[s]  speedup\n";
  int passed = 0;
  for (const auto& e : entries) {
    passed += e.pass;
    out << std::left << std::setw(static_cast<int>(width)) << e.id << "  " << std::setw(6) << (e.pass ? "pass" : "FAIL")
        << "  " << std::right << std::setw(11) << std::fixed << std::setprecision(1) << e.log10_difference << "  "
        << std::left << std::setw(9) << rhs_check_name(e.rhs_check) << "  " << std::right << std::setw(9)
        << std::setprecision(3) << e.closed_seconds << "  " << std::setw(9) << e.direct_seconds << "  " << std::setw(7)
        << std::setprecision(1) << e.speedup();
    if (!e.message.empty()) out << "  " << e.message;
    out << '\n';
  }
  out << passed << "/" << entries.size() << " fixtures passed\n";
}

json report_to_json(const std::vector<VerificationEntry>& entries) {
  json arr = json::array();
  for (const auto& e : entries) {
    arr.push_back({{"id", e.id},
                   {"pass", e.pass},
                   {"closed_value", e.closed_value},
                   {"direct_value", e.direct_value},
                   {"log10_difference", e.log10_difference},
                   {"rhs_check", rhs_check_name(e.rhs_check)},
                   {"closed_seconds", e.closed_seconds},
                   {"direct_seconds", e.direct_seconds},
                   {"speedup", e.speedup()},
                   {"message", e.message}});
  }
  return arr;
}

}  // namespace eulersum

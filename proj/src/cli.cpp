#include "eulersum/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "eulersum/catalog.hpp"
#include "eulersum/direct_sum.hpp"
#include "eulersum/evaluate.hpp"
#include "eulersum/latex.hpp"
#include "eulersum/pslq.hpp"
#include "eulersum/ratfunc.hpp"
#include "eulersum/residue.hpp"
#include "eulersum/serialize.hpp"
#include "eulersum/special.hpp"

#ifndef EULERSUM_DEFAULT_CATALOG
#define EULERSUM_DEFAULT_CATALOG "data/catalog.jsonl"
#endif

namespace eulersum::cli {

namespace {

using nlohmann::json;

struct Common {
  int digits = 100;
  long terms = 100000;
  std::string format = "text";
  bool simplify = false;
};

class Mismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int default_digits() {
  if (const char* env = std::getenv("EULERSUM_DIGITS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 10 && v <= 100000) return static_cast<int>(v);
  }
  return 100;
}

void add_common(CLI::App* sub, Common& c, bool with_terms) {
  sub->add_option("-d,--digits", c.digits, "decimal digits")->check(CLI::Range(10, 100000));
  if (with_terms) sub->add_option("-n,--terms", c.terms, "explicit terms N for direct summation")->check(CLI::Range(10L, 1000000000L));
  sub->add_option("-f,--format", c.format, "text, latex or json")->check(CLI::IsMember({"text", "latex", "json"}));
}

SymbolicExpression maybe_simplify(const SymbolicExpression& e, bool simplify) {
  return simplify ? simplify_special_values(e) : e;
}

void print_expression(std::ostream& out, const SymbolicExpression& e, const std::string& format) {
  if (format == "latex")
    out << emit_latex(e) << '\n';
  else
    out << to_text(e) << '\n';
}

std::string value_text(const BigFloat& v, int digits) { return v.to_string(digits); }

int cmd_closed_form(const std::string& input, const std::string& method, const Common& c, std::ostream& out) {
  const RationalFunction r = parse_ratfunc(input);
  ClosedForm cf = method == "theorem3" ? closed_form_via_theorem3(r) : closed_form(r);
  const SymbolicExpression e = maybe_simplify(cf.expression, c.simplify);
  if (c.format == "json") {
    json j = {{"input", input}, {"method", cf.provenance.method}, {"expression", to_json(e)}, {"text", to_text(e)},
              {"latex", emit_latex(e)}, {"steps", cf.provenance.steps}};
    out << j.dump() << '\n';
  } else {
    print_expression(out, e, c.format);
  }
  return kOk;
}

int cmd_eval(const std::string& input, const std::string& method, const Common& c, std::ostream& out) {
  const RationalFunction r = parse_ratfunc(input);
  require_summable(r);
  json j = {{"input", input}, {"digits", c.digits}};
  std::optional<BigFloat> closed, direct;
  if (method != "direct") {
    closed = eval_symexpr(closed_form(r).expression, c.digits);
    j["closed"] = value_text(*closed, c.digits);
  }
  if (method != "closed") {
    DirectSumConfig cfg;
    cfg.digits = c.digits;
    cfg.terms = c.terms;
    direct = direct_euler_sum(r, cfg).value;
    j["direct"] = value_text(*direct, c.digits);
  }
  bool agree = true;
  if (closed && direct) {
    const BigFloat diff = abs(*closed - *direct);
    j["difference"] = diff.to_string(5);
    agree = diff < pow10_neg(c.digits - 10, bits_for_digits(c.digits));
    j["agree"] = agree;
  }
  if (c.format == "json") {
    out << j.dump() << '\n';
  } else {
    if (closed && !direct) out << value_text(*closed, c.digits) << '\n';
    if (direct && !closed) out << value_text(*direct, c.digits) << '\n';
    if (closed && direct) {
      out << "closed     " << j["closed"].get<std::string>() << '\n';
      out << "direct     " << j["direct"].get<std::string>() << '\n';
      out << "difference " << j["difference"].get<std::string>() << '\n';
    }
  }
  if (!agree) throw Mismatch("closed-form and direct values differ beyond 10^-(D-10)");
  return kOk;
}

int cmd_direct(const std::string& input, int tail_order, const Common& c, std::ostream& out) {
  const RationalFunction r = parse_ratfunc(input);
  DirectSumConfig cfg;
  cfg.digits = c.digits;
  cfg.terms = c.terms;
  cfg.tail_order = tail_order;
  const auto res = direct_euler_sum(r, cfg);
  if (c.format == "json") {
    json j = {{"input", input},           {"digits", c.digits},
              {"terms", c.terms},         {"value", value_text(res.value, c.digits)},
              {"partial", value_text(res.partial, c.digits)}, {"tail", value_text(res.tail, c.digits)},
              {"error_bound", res.error_bound.to_string(3)}};
    out << j.dump() << '\n';
  } else {
    out << value_text(res.value, c.digits) << '\n';
  }
  return kOk;
}

std::vector<SymbolicExpression> parse_basis(const std::vector<std::string>& items) {
  std::vector<SymbolicExpression> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string piece;
    while (std::getline(ss, piece, ';'))
      if (piece.find_first_not_of(' ') != std::string::npos) out.push_back(parse_monomial_text(piece));
  }
  return out;
}

int cmd_discover(const std::string& input, const std::vector<std::string>& basis_items, const std::string& max_coeff,
                 const Common& c, std::ostream& out) {
  const RationalFunction r = parse_ratfunc(input);
  require_summable(r);
  const auto constants = basis_items.empty() ? auto_basis_constants(r) : parse_basis(basis_items);
  const ConstantBasis basis = make_basis(constants, c.digits);
  const DiscoveryResult res = discover(r, basis, c.digits, Integer(max_coeff), c.terms);
  const bool found = res.status == DiscoveryResult::Status::Found;
  if (c.format == "json") {
    json j = {{"input", input}, {"found", found}, {"message", res.message}};
    json names = json::array();
    for (const auto& e : basis.entries) names.push_back(e.name);
    j["basis"] = names;
    if (found) {
      j["expression"] = to_json(res.closed_form.expression);
      j["text"] = to_text(res.closed_form.expression);
      json coeffs = json::array();
      for (const auto& v : res.relation.coefficients) coeffs.push_back(v.get_str());
      j["relation"] = coeffs;
      j["confidence"] = res.relation.confidence;
    }
    out << j.dump() << '\n';
  } else if (found) {
    print_expression(out, res.closed_form.expression, c.format);
  } else {
    out << "no formula: " << res.message << '\n';
  }
  return found ? kOk : kError;
}

int cmd_verify(const std::string& path, int jobs, int tolerance, const Common& c, std::ostream& out) {
  const auto fixtures = load_catalog(path);
  VerifyOptions opts;
  opts.digits = c.digits;
  opts.terms = c.terms;
  opts.jobs = jobs;
  opts.tolerance_digits = tolerance > 0 ? tolerance : c.digits - 10;
  const auto report = verify_catalog(fixtures, opts);
  if (c.format == "json")
    out << report_to_json(report).dump() << '\n';
  else
    write_report_table(out, report);
  for (const auto& e : report)
    if (!e.pass) throw Mismatch("catalog verification failed for " + e.id);
  return kOk;
}

Rational parse_rational_text(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("not a rational number: " + s);
  r.canonicalize();
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  return r;
}

int cmd_polygamma(int order, const std::string& arg, const Common& c, std::ostream& out) {
  const Rational x = parse_rational_text(arg);
  const BigFloat v = polygamma_hp(order, x, c.digits);
  if (c.format == "json")
    out << json{{"order", order}, {"arg", rational_to_json(x)}, {"value", value_text(v, c.digits)}}.dump() << '\n';
  else
    out << value_text(v, c.digits) << '\n';
  return kOk;
}

int cmd_bernoulli(int n, const Common& c, std::ostream& out) {
  if (n < 0) throw std::invalid_argument("index must be nonnegative");
  const Rational b = bernoulli_table(n / 2 + 1).b(n);
  if (c.format == "json")
    out << json{{"n", n}, {"value", rational_to_json(b)}}.dump() << '\n';
  else
    out << b.get_str() << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed forms and high-precision values of sum_{k>=1} R(k) H_k", "eulersum"};
  app.require_subcommand(1);
  Common c;
  c.digits = default_digits();

  std::string input, method_cf = "residue", method_eval = "both", catalog = EULERSUM_DEFAULT_CATALOG;
  std::string max_coeff = "100000", arg;
  std::vector<std::string> basis;
  int tail_order = 0, jobs = 1, tolerance = 0, order = 0, index = 0;

  auto* cf = app.add_subcommand("closed-form", "symbolic closed form of the sum");
  cf->add_option("R", input, "rational function of k")->required();
  cf->add_option("--method", method_cf, "residue or theorem3")->check(CLI::IsMember({"residue", "theorem3"}));
  cf->add_flag("--simplify", c.simplify, "rewrite known special values");
  add_common(cf, c, false);

  auto* ev = app.add_subcommand("eval", "numeric value of the sum");
  ev->add_option("R", input, "rational function of k")->required();
  ev->add_option("--method", method_eval, "closed, direct or both")->check(CLI::IsMember({"closed", "direct", "both"}));
  add_common(ev, c, true);

  auto* dr = app.add_subcommand("direct", "direct summation with an Euler-Maclaurin tail");
  dr->add_option("R", input, "rational function of k")->required();
  dr->add_option("--tail-order", tail_order, "highest power of 1/k in the tail (default 2D)");
  add_common(dr, c, true);

  auto* ds = app.add_subcommand("discover", "find a formula by integer relation search");
  ds->add_option("R", input, "rational function of k")->required();
  ds->add_option("--basis", basis, "constants such as 'zeta(6);zeta(3)^2' (default: automatic)");
  ds->add_option("--max-coeff", max_coeff, "largest coefficient searched");
  add_common(ds, c, true);

  auto* vc = app.add_subcommand("verify-catalog", "check every catalog fixture two ways");
  vc->add_option("catalog", catalog, "JSON-lines fixture file");
  vc->add_option("-j,--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));
  vc->add_option("--tolerance", tolerance, "pass when |difference| < 10^-tolerance (default D-10)");
  add_common(vc, c, true);

  auto* pg = app.add_subcommand("polygamma", "psi^(n)(x) at a rational x");
  pg->add_option("n", order, "order")->required()->check(CLI::Range(0, 10000));
  pg->add_option("x", arg, "rational argument such as 1/3")->required();
  add_common(pg, c, false);

  auto* bn = app.add_subcommand("bernoulli", "exact Bernoulli number B_n");
  bn->add_option("n", index, "index")->required()->check(CLI::Range(0, 100000));
  add_common(bn, c, false);

  std::vector<std::string> argv_store{"eulersum"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }

  try {
    if (cf->parsed()) return cmd_closed_form(input, method_cf, c, out);
    if (ev->parsed()) return cmd_eval(input, method_eval, c, out);
    if (dr->parsed()) return cmd_direct(input, tail_order, c, out);
    if (ds->parsed()) return cmd_discover(input, basis, max_coeff, c, out);
    if (vc->parsed()) return cmd_verify(catalog, jobs, tolerance, c, out);
    if (pg->parsed()) return cmd_polygamma(order, arg, c, out);
    if (bn->parsed()) return cmd_bernoulli(index, c, out);
  } catch (const SummabilityError& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == SummabilityError::Kind::NotConvergent ? kNotConvergent : kInfiniteSummand;
  } catch (const Mismatch& e) {
    err << "error: " << e.what() << '\n';
    return kMismatch;
  } catch (const TailOrderError& e) {
    err << "error: " << e.what() << "; try --terms " << e.suggested_terms() << '\n';
    return kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace eulersum::cli

#include "eulersum/serialize.hpp"

#include <stdexcept>

namespace eulersum {

using nlohmann::json;

json rational_to_json(const Rational& r) { return {{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}}; }

namespace {

Integer integer_field(const json& j, const char* name) {
  if (!j.contains(name)) throw std::invalid_argument(std::string("missing field '") + name + "'");
  const json& v = j.at(name);
  try {
    if (v.is_string()) return Integer(v.get<std::string>());
    if (v.is_number_integer()) return Integer(std::to_string(v.get<long long>()));
  } catch (const std::invalid_argument&) {
  }
  throw std::invalid_argument(std::string("field '") + name + "' is not an integer");
}

int small_field(const json& j, const char* name) {
  const Integer z = integer_field(j, name);
  if (!z.fits_sint_p()) throw std::invalid_argument(std::string("field '") + name + "' out of range");
  return static_cast<int>(z.get_si());
}

const char* kind_name(AtomKind k) {
  switch (k) {
    case AtomKind::Psi: return "psi";
    case AtomKind::Zeta: return "zeta";
    case AtomKind::Pi: return "pi";
    case AtomKind::Log: return "log";
    case AtomKind::Gamma: return "gamma";
    case AtomKind::Alpha: return "alpha";
    case AtomKind::PsiRoot: return "psi_root";
    case AtomKind::RootSum: return "root_sum";
  }
  return "?";
}

json atom_to_json(const Atom& a, int power) {
  json j = {{"kind", kind_name(a.kind)}};
  switch (a.kind) {
    case AtomKind::Psi:
      j["order"] = a.index;
      j["arg"] = rational_to_json(a.arg);
      break;
    case AtomKind::PsiRoot: j["order"] = a.index; break;
    case AtomKind::Zeta:
    case AtomKind::Log: j["n"] = a.index; break;
    case AtomKind::RootSum: {
      json poly = json::array();
      for (const auto& c : a.root_sum->poly.coeffs()) poly.push_back(rational_to_json(c));
      j["poly"] = poly;
      j["template"] = to_json(a.root_sum->templ);
      break;
    }
    default: break;
  }
  j["power"] = power;
  return j;
}

Atom atom_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    throw std::invalid_argument("atom needs a string field 'kind'");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "psi") {
    if (!j.contains("arg")) throw std::invalid_argument("missing field 'arg'");
    return Atom::psi(small_field(j, "order"), rational_from_json(j.at("arg")));
  }
  if (kind == "zeta") return Atom::zeta(small_field(j, "n"));
  if (kind == "log") return Atom::log(small_field(j, "n"));
  if (kind == "pi") return Atom::pi();
  if (kind == "gamma") return Atom::gamma();
  if (kind == "alpha") return Atom::alpha();
  if (kind == "psi_root") return Atom::psi_root(small_field(j, "order"));
  if (kind == "root_sum") {
    if (!j.contains("poly") || !j.at("poly").is_array()) throw std::invalid_argument("missing field 'poly'");
    if (!j.contains("template")) throw std::invalid_argument("missing field 'template'");
    std::vector<Rational> c;
    for (const auto& v : j.at("poly")) c.push_back(rational_from_json(v));
    return Atom::root_sum_of(Polynomial(std::move(c)), from_json(j.at("template")));
  }
  throw std::invalid_argument("unknown atom kind '" + kind + "'");
}

}  // namespace

Rational rational_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("rational must be an object with num and den");
  const Integer num = integer_field(j, "num");
  const Integer den = j.contains("den") ? integer_field(j, "den") : Integer(1);
  if (den == 0) throw std::invalid_argument("field 'den' is zero");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

json to_json(const SymbolicExpression& e) {
  json terms = json::array();
  for (const auto& [m, c] : e.terms()) {
    json atoms = json::array();
    for (const auto& [a, p] : m) atoms.push_back(atom_to_json(a, p));
    terms.push_back({{"coeff", rational_to_json(c)}, {"atoms", atoms}});
  }
  return {{"terms", terms}};
}

SymbolicExpression from_json(const json& j) {
  if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
    throw std::invalid_argument("expression needs an array field 'terms'");
  SymbolicExpression out;
  for (const auto& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("coeff")) throw std::invalid_argument("term needs field 'coeff'");
    SymbolicExpression term = sym_constant(rational_from_json(t.at("coeff")));
    if (t.contains("atoms")) {
      if (!t.at("atoms").is_array()) throw std::invalid_argument("field 'atoms' must be an array");
      for (const auto& a : t.at("atoms")) {
        const Atom atom = atom_from_json(a);
        const int p = a.contains("power") ? small_field(a, "power") : 1;
        if (p < 1) throw std::invalid_argument("field 'power' must be positive");
        for (int i = 0; i < p; ++i) term *= sym_atom(atom);
      }
    }
    out += term;
  }
  return out;
}

}  // namespace eulersum

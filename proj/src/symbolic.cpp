#include "eulersum/symbolic.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace eulersum {

Atom Atom::psi(int order, const Rational& arg) {
  if (order < 0) throw std::domain_error("negative polygamma order");
  if (arg <= 0 || arg > 1) throw std::domain_error("psi atom argument outside (0,1]");
  return Atom{AtomKind::Psi, order, arg, nullptr};
}

Atom Atom::zeta(int n) {
  if (n < 2) throw std::domain_error("zeta atom needs n >= 2");
  return Atom{AtomKind::Zeta, n, 0, nullptr};
}

Atom Atom::log(int n) {
  if (n < 2) throw std::domain_error("log atom needs n >= 2");
  return Atom{AtomKind::Log, n, 0, nullptr};
}

Atom Atom::psi_root(int order) {
  if (order < 0) throw std::domain_error("negative polygamma order");
  return Atom{AtomKind::PsiRoot, order, 0, nullptr};
}

Atom Atom::root_sum_of(Polynomial poly, SymbolicExpression templ) {
  auto data = std::make_shared<RootSumData>(RootSumData{std::move(poly), std::move(templ)});
  return Atom{AtomKind::RootSum, 0, 0, std::move(data)};
}

namespace {

std::strong_ordering compare_rational(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::strong_ordering compare_polynomial(const Polynomial& a, const Polynomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (int i = a.degree(); i >= 0; --i)
    if (auto c = compare_rational(a.coeff(i), b.coeff(i)); c != 0) return c;
  return std::strong_ordering::equal;
}

std::strong_ordering compare_monomial(const Monomial& a, const Monomial& b) {
  const size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    if (auto c = compare(a[i].first, b[i].first); c != 0) return c;
    if (auto c = a[i].second <=> b[i].second; c != 0) return c;
  }
  return a.size() <=> b.size();
}

}  // namespace

std::strong_ordering compare(const Atom& a, const Atom& b) {
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  switch (a.kind) {
    case AtomKind::Psi:
      if (auto c = b.index <=> a.index; c != 0) return c;  // order descending
      return compare_rational(a.arg, b.arg);
    case AtomKind::Zeta:
    case AtomKind::Log:
      return a.index <=> b.index;
    case AtomKind::PsiRoot:
      return b.index <=> a.index;
    case AtomKind::RootSum:
      if (auto c = compare_polynomial(a.root_sum->poly, b.root_sum->poly); c != 0) return c;
      return compare(a.root_sum->templ, b.root_sum->templ);
    default:
      return std::strong_ordering::equal;
  }
}

std::strong_ordering compare(const SymbolicExpression& a, const SymbolicExpression& b) {
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    if (auto c = compare_monomial(ia->first, ib->first); c != 0) return c;
    if (auto c = compare_rational(ia->second, ib->second); c != 0) return c;
  }
  return a.size() <=> b.size();
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const { return compare_monomial(a, b) < 0; }

Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

int monomial_degree(const Monomial& m) {
  int d = 0;
  for (const auto& [a, e] : m) d += e;
  return d;
}

SymbolicExpression sym_constant(const Rational& c) { return SymbolicExpression::constant(c); }
SymbolicExpression sym_atom(const Atom& a, const Rational& c) { return SymbolicExpression::atom(a, c); }

SymbolicExpression psi_value(int order, const Rational& t) {
  if (t <= 0 && t.get_den() == 1) throw std::domain_error("polygamma pole at a nonpositive integer");
  // Representative in (0, 1].
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  Rational base = t - Rational(fl);
  if (base == 0) {
    base = 1;
    fl -= 1;
  }
  Integer fact = 1;
  for (int i = 2; i <= order; ++i) fact *= i;
  const Rational sign_fact = (order % 2 == 0 ? 1 : -1) * Rational(fact);
  SymbolicExpression out = sym_atom(Atom::psi(order, base));
  Rational offset = 0;
  // t = base + fl
  if (fl > 0) {
    for (Integer j = 0; j < fl; ++j) {
      Rational z = base + Rational(j);
      Rational p = 1;
      for (int i = 0; i <= order; ++i) p *= z;
      offset += sign_fact / p;
    }
  } else {
    for (Integer j = 1; j <= -fl; ++j) {
      Rational z = base - Rational(j);
      Rational p = 1;
      for (int i = 0; i <= order; ++i) p *= z;
      offset -= sign_fact / p;
    }
  }
  out.add_term({}, offset);
  return out;
}

SymbolicExpression substitute(const SymbolicExpression& e,
                              const std::function<std::optional<SymbolicExpression>(const Atom&)>& f) {
  SymbolicExpression out;
  for (const auto& [mono, coeff] : e.terms()) {
    SymbolicExpression acc = sym_constant(coeff);
    Monomial kept;
    for (const auto& [atom, power] : mono) {
      if (auto repl = f(atom)) {
        for (int i = 0; i < power; ++i) acc = acc * *repl;
      } else {
        kept.emplace_back(atom, power);
      }
    }
    SymbolicExpression rest;
    rest.add_term(kept, 1);
    out += acc * rest;
  }
  return out;
}

Rational common_prefactor(const SymbolicExpression& e) {
  if (e.is_zero_poly()) return 1;
  Integer g = 0, l = 1;
  for (const auto& [m, c] : e.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational p(abs(g), l);
  p.canonicalize();
  return p;
}

namespace {

std::string rational_str(const Rational& r) {
  return r.get_den() == 1 ? r.get_num().get_str() : r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string monomial_text(const Monomial& m) {
  std::string s;
  for (const auto& [a, p] : m) {
    if (!s.empty()) s += "*";
    s += atom_text(a);
    if (p > 1) s += "^" + std::to_string(p);
  }
  return s;
}

}  // namespace

std::string atom_text(const Atom& a) {
  switch (a.kind) {
    case AtomKind::Psi: return "psi(" + std::to_string(a.index) + "," + rational_str(a.arg) + ")";
    case AtomKind::Zeta: return "zeta(" + std::to_string(a.index) + ")";
    case AtomKind::Pi: return "pi";
    case AtomKind::Log: return "log(" + std::to_string(a.index) + ")";
    case AtomKind::Gamma: return "gamma";
    case AtomKind::Alpha: return "alpha";
    case AtomKind::PsiRoot: return "psi(" + std::to_string(a.index) + ",-alpha)";
    case AtomKind::RootSum:
      return "RootSum(" + a.root_sum->poly.to_string("alpha") + ", " + to_text(a.root_sum->templ) + ")";
  }
  return "?";
}

std::string to_text(const SymbolicExpression& e) {
  if (e.is_zero_poly()) return "0";
  const Rational pre = common_prefactor(e);
  std::string body;
  for (const auto& [m, c] : e.terms()) {
    const Rational k = c / pre;
    std::string mono = monomial_text(m);
    const Rational mag = abs(k);
    std::string piece;
    if (mono.empty())
      piece = rational_str(mag);
    else if (mag == 1)
      piece = mono;
    else
      piece = rational_str(mag) + "*" + mono;
    if (body.empty())
      body = (k < 0 ? "-" : "") + piece;
    else
      body += (k < 0 ? " - " : " + ") + piece;
  }
  if (pre == 1) return body;
  return rational_str(pre) + "*(" + body + ")";
}

namespace {

class MonomialParser {
 public:
  explicit MonomialParser(const std::string& s) : s_(s) {}

  SymbolicExpression parse() {
    SymbolicExpression acc = sym_constant(1);
    skip();
    if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-')) {
      acc = sym_constant(rational());
      skip();
      if (pos_ == s_.size()) return acc;
      expect('*');
    }
    for (;;) {
      skip();
      Atom a = atom();
      int power = 1;
      skip();
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        power = static_cast<int>(integer());
      }
      for (int i = 0; i < power; ++i) acc = acc * sym_atom(a);
      skip();
      if (pos_ == s_.size()) return acc;
      expect('*');
    }
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c)
      throw std::invalid_argument("expected '" + std::string(1, c) + "' in '" + s_ + "' at column " +
                                  std::to_string(pos_ + 1));
    ++pos_;
  }
  long integer() {
    skip();
    size_t start = pos_;
    if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_ || (pos_ == start + 1 && s_[start] == '-'))
      throw std::invalid_argument("expected integer in '" + s_ + "'");
    return std::stol(s_.substr(start, pos_ - start));
  }
  Rational rational() {
    Rational r(integer());
    skip();
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      r /= Rational(integer());
    }
    return r;
  }
  Atom atom() {
    size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    const std::string name = s_.substr(start, pos_ - start);
    if (name == "gamma") return Atom::gamma();
    if (name == "pi") return Atom::pi();
    if (name == "zeta") {
      expect('(');
      const int n = static_cast<int>(integer());
      expect(')');
      return Atom::zeta(n);
    }
    if (name == "log" || name == "ln") {
      expect('(');
      const int n = static_cast<int>(integer());
      expect(')');
      return Atom::log(n);
    }
    if (name == "psi") {
      expect('(');
      const int order = static_cast<int>(integer());
      expect(',');
      const Rational t = rational();
      expect(')');
      return Atom::psi(order, t);
    }
    throw std::invalid_argument("unknown constant '" + name + "' in '" + s_ + "'");
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

SymbolicExpression parse_monomial_text(const std::string& text) { return MonomialParser(text).parse(); }

}  // namespace eulersum

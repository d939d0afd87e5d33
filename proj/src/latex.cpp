#include "eulersum/latex.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <tuple>

#include "eulersum/ratfunc.hpp"

namespace eulersum {

namespace {

struct TermKey {
  int group = 1;       // 0 when the monomial has psi atoms
  Integer arg_den = 0;
  Integer arg_num = 0;
  int level = 0;
  int factors = 0;
  int no_gamma = 1;
  int min_order = 0;
};

TermKey key_of(const Monomial& m) {
  TermKey k;
  bool have_psi = false;
  Rational best_arg;
  int min_order = 1 << 20;
  for (const auto& [a, p] : m) {
    k.factors += p;
    if (a.kind == AtomKind::Gamma) {
      k.level += p;
      k.no_gamma = 0;
    }
    if (a.kind != AtomKind::Psi) continue;
    k.level += (a.index + 1) * p;
    min_order = std::min(min_order, a.index);
    const auto this_key = std::make_pair(a.arg.get_den(), a.arg.get_num());
    if (!have_psi || this_key < std::make_pair(best_arg.get_den(), best_arg.get_num())) best_arg = a.arg;
    have_psi = true;
  }
  if (have_psi) {
    k.group = 0;
    k.arg_den = best_arg.get_den();
    k.arg_num = best_arg.get_num();
    k.min_order = min_order;
  }
  return k;
}

bool emit_less(const Monomial& a, const Monomial& b) {
  const TermKey ka = key_of(a), kb = key_of(b);
  const auto ta = std::tie(ka.group, ka.arg_den, ka.arg_num, ka.level, ka.factors, ka.no_gamma, ka.min_order);
  const auto tb = std::tie(kb.group, kb.arg_den, kb.arg_num, kb.level, kb.factors, kb.no_gamma, kb.min_order);
  if (ta != tb) return ta < tb;
  return MonomialLess{}(a, b);
}

std::string atom_latex(const Atom& a) {
  switch (a.kind) {
    case AtomKind::Psi: return "\\psi(" + std::to_string(a.index) + "," + a.arg.get_str() + ")";
    case AtomKind::Zeta: return "\\zeta(" + std::to_string(a.index) + ")";
    case AtomKind::Pi: return "\\pi";
    case AtomKind::Log: return "\\log(" + std::to_string(a.index) + ")";
    case AtomKind::Gamma: return "\\gamma";
    case AtomKind::Alpha: return "\\alpha";
    case AtomKind::PsiRoot: return "\\psi(" + std::to_string(a.index) + ",-\\alpha)";
    case AtomKind::RootSum:
      return "\\sum_{\\alpha:\\," + a.root_sum->poly.to_string("\\alpha") + "=0}" + emit_latex(a.root_sum->templ);
  }
  return "?";
}

// Catalog order inside a product: gamma and other constants first, then
// psi factors by increasing order.
int latex_rank(AtomKind k) {
  switch (k) {
    case AtomKind::Gamma: return 0;
    case AtomKind::Zeta: return 1;
    case AtomKind::Pi: return 2;
    case AtomKind::Log: return 3;
    case AtomKind::Alpha: return 4;
    case AtomKind::Psi: return 5;
    case AtomKind::PsiRoot: return 6;
    case AtomKind::RootSum: return 7;
  }
  return 8;
}

std::string monomial_latex(Monomial m) {
  std::stable_sort(m.begin(), m.end(), [](const auto& x, const auto& y) {
    const Atom& a = x.first;
    const Atom& b = y.first;
    if (a.kind != b.kind) return latex_rank(a.kind) < latex_rank(b.kind);
    if ((a.kind == AtomKind::Psi || a.kind == AtomKind::PsiRoot) && a.index != b.index) return a.index < b.index;
    return false;
  });
  std::string out;
  for (const auto& [a, p] : m) {
    const std::string s = atom_latex(a);
    // psi powers are written as repeated factors, as in the catalog.
    if (a.kind == AtomKind::Psi || a.kind == AtomKind::PsiRoot) {
      for (int i = 0; i < p; ++i) out += s;
    } else {
      out += s;
      if (p > 1) out += "^{" + std::to_string(p) + "}";
    }
  }
  return out;
}

}  // namespace

std::string emit_latex(const SymbolicExpression& e) {
  if (e.is_zero_poly()) return "0";
  const Rational pre = common_prefactor(e);
  std::vector<std::pair<Monomial, Integer>> terms;
  for (const auto& [m, c] : e.terms()) terms.emplace_back(m, Integer(c / pre));
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return emit_less(a.first, b.first); });

  std::ostringstream out;
  if (pre.get_den() != 1)
    out << "\\frac{" << pre.get_num().get_str() << "}{" << pre.get_den().get_str() << "}";
  else if (pre != 1)
    out << pre.get_num().get_str();
  out << "\\left(";
  bool first = true;
  for (const auto& [m, c] : terms) {
    if (c < 0)
      out << " -" << Integer(-c).get_str();
    else
      out << (first ? "  " : " +") << c.get_str();
    first = false;
    out << monomial_latex(m);
  }
  out << "\\right)";
  return out.str();
}

namespace {

class LatexParser {
 public:
  explicit LatexParser(const std::string& s) : s_(s) {}

  SymbolicExpression parse_all() {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == '0') {
      size_t save = pos_;
      ++pos_;
      skip_space();
      if (pos_ == s_.size()) return {};
      pos_ = save;
    }
    SymbolicExpression e = parse_expression();
    skip_space();
    if (pos_ != s_.size()) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, static_cast<int>(pos_) + 1); }

  bool starts(const char* lit) const { return s_.compare(pos_, std::char_traits<char>::length(lit), lit) == 0; }

  bool accept(const char* lit) {
    if (!starts(lit)) return false;
    pos_ += std::char_traits<char>::length(lit);
    return true;
  }

  void expect(const char* lit) {
    skip_space();
    if (!accept(lit)) fail(std::string("expected '") + lit + "'");
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  // Whitespace plus the catalog's line-continuation markup.
  void skip_markup() {
    for (;;) {
      skip_space();
      if (accept("\\right.") || accept("\\left.") || accept("\\nonumber") || accept("\\\\") || accept("&") ||
          accept("\\hspace{1em}") || accept("\\,"))
        continue;
      return;
    }
  }

  Integer parse_integer() {
    skip_space();
    bool neg = false;
    if (accept("-"))
      neg = true;
    else
      accept("+");
    skip_space();
    const size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    Integer z(s_.substr(start, pos_ - start));
    return neg ? Integer(-z) : z;
  }

  int parse_small_int() {
    const Integer z = parse_integer();
    if (!z.fits_sint_p()) fail("integer out of range");
    return static_cast<int>(z.get_si());
  }

  Rational parse_prefactor() {
    skip_space();
    if (accept("\\frac{")) {
      const Integer num = parse_integer();
      expect("}");
      expect("{");
      const Integer den = parse_integer();
      expect("}");
      if (den == 0) fail("zero denominator");
      Rational r(num, den);
      r.canonicalize();
      return r;
    }
    if (starts("\\left(")) return 1;
    return Rational(parse_integer());
  }

  SymbolicExpression parse_expression() {
    const Rational pre = parse_prefactor();
    expect("\\left(");
    SymbolicExpression sum;
    for (;;) {
      skip_markup();
      if (accept("\\right)")) break;
      if (pos_ >= s_.size()) fail("unterminated \\left(");
      sum += parse_term();
    }
    return sum.scaled(pre);
  }

  SymbolicExpression parse_term() {
    Rational coeff = 1;
    if (accept("-"))
      coeff = -1;
    else
      accept("+");
    skip_space();
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) coeff *= Rational(parse_integer());
    SymbolicExpression term = sym_constant(coeff);
    for (;;) {
      skip_space();
      if (!starts("\\") || starts("\\right") || starts("\\left.") || starts("\\nonumber") || starts("\\\\") ||
          starts("\\hspace"))
        break;
      term *= parse_power();
    }
    return term;
  }

  SymbolicExpression parse_power() {
    const SymbolicExpression base = parse_atom();
    skip_space();
    if (!accept("^")) return base;
    int p;
    if (accept("{")) {
      p = parse_small_int();
      expect("}");
    } else {
      p = parse_small_int();
    }
    if (p < 1) fail("exponent must be positive");
    SymbolicExpression out = sym_constant(1);
    for (int i = 0; i < p; ++i) out *= base;
    return out;
  }

  Rational parse_arg() {
    const Integer num = parse_integer();
    skip_space();
    Integer den = 1;
    if (accept("/")) den = parse_integer();
    if (den == 0) fail("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  SymbolicExpression parse_atom() {
    const size_t at = pos_;
    try {
      if (accept("\\psi(")) {
        const int order = parse_small_int();
        expect(",");
        skip_space();
        if (accept("-\\alpha")) {
          expect(")");
          return sym_atom(Atom::psi_root(order));
        }
        const Rational t = parse_arg();
        expect(")");
        return sym_atom(Atom::psi(order, t));
      }
      if (accept("\\zeta(")) {
        const int n = parse_small_int();
        expect(")");
        return sym_atom(Atom::zeta(n));
      }
      if (accept("\\log(")) {
        const int n = parse_small_int();
        expect(")");
        return sym_atom(Atom::log(n));
      }
      if (accept("\\pi")) return sym_atom(Atom::pi());
      if (accept("\\gamma")) return sym_atom(Atom::gamma());
      if (accept("\\alpha")) return sym_atom(Atom::alpha());
      if (accept("\\sum_{\\alpha:")) {
        skip_markup();
        const size_t eq = s_.find("=0}", pos_);
        if (eq == std::string::npos) fail("expected '=0}'");
        std::string poly = s_.substr(pos_, eq - pos_);
        for (size_t i; (i = poly.find("\\alpha")) != std::string::npos;) poly.replace(i, 6, "a");
        const RationalFunction q = parse_ratfunc(poly, "a");
        if (q.denominator().degree() != 0) fail("root-sum polynomial expected");
        pos_ = eq + 3;
        const SymbolicExpression templ = parse_expression();
        return sym_atom(Atom::root_sum_of(q.numerator().monic(), templ));
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& ex) {
      pos_ = at;
      fail(ex.what());
    }
    fail("unknown atom");
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

SymbolicExpression parse_latex(const std::string& text) { return LatexParser(text).parse_all(); }

}  // namespace eulersum

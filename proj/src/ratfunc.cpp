#include "eulersum/ratfunc.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <vector>

namespace eulersum {

namespace {

// Normalizes (num, den): cancels the gcd and scales so that den is a
// primitive integer polynomial with positive leading coefficient.
void normalize(Polynomial& num, Polynomial& den) {
  if (den.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (num.is_zero()) {
    den = Polynomial::constant(1);
    return;
  }
  Polynomial g = poly_gcd(num, den);
  if (!g.is_one()) {
    num = exact_div(num, g);
    den = exact_div(den, g);
  }
  auto [scale, ints] = den.primitive_part();
  std::vector<Rational> dc;
  dc.reserve(ints.size());
  for (auto& v : ints) dc.emplace_back(v);
  den = Polynomial(std::move(dc));
  num *= 1 / scale;
}

}  // namespace

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  normalize(num_, den_);
}

Rational RationalFunction::operator()(const Rational& x) const {
  Rational d = den_(x);
  if (d == 0) throw std::domain_error("evaluation at a pole");
  return num_(x) / d;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.num_.is_zero()) throw std::domain_error("division by the zero polynomial");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

RationalFunction RationalFunction::pow(int e) const {
  if (e >= 0) return {num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e))};
  if (num_.is_zero()) throw std::domain_error("division by the zero polynomial");
  return {den_.pow(static_cast<unsigned>(-e)), num_.pow(static_cast<unsigned>(-e))};
}

std::string RationalFunction::to_string(const std::string& var) const {
  auto wrap = [&](const Polynomial& p) {
    std::string s = p.to_string(var);
    const bool single_term =
        std::count_if(p.coeffs().begin(), p.coeffs().end(), [](const Rational& c) { return c != 0; }) <= 1;
    const bool plain = single_term && s.find('/') == std::string::npos && s.find('*') == std::string::npos &&
                       s.find('^') == std::string::npos && s[0] != '-';
    return plain ? s : "(" + s + ")";
  };
  if (den_.is_one()) return num_.to_string(var);
  return wrap(num_) + "/" + wrap(den_);
}

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  size_t column;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    const size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Int, std::string(s.substr(i, j - i)), col});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), col});
      i = j;
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '/': k = Tok::Slash; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", col);
    }
    out.push_back({k, std::string(1, c), col});
    ++i;
  }
  out.push_back({Tok::End, "", s.size() + 1});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, std::string_view var) : toks_(tokenize(text)), var_(var) {}

  RationalFunction parse() {
    RationalFunction r = expr();
    if (peek().kind != Tok::End) throw ParseError("unexpected '" + peek().text + "'", peek().column);
    return r;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  RationalFunction expr() {
    RationalFunction acc = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool plus = next().kind == Tok::Plus;
      RationalFunction rhs = term();
      acc = plus ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  RationalFunction term() {
    RationalFunction acc = unary();
    for (;;) {
      const Token& t = peek();
      if (t.kind == Tok::Star) {
        next();
        acc = acc * unary();
      } else if (t.kind == Tok::Slash) {
        const size_t col = next().column;
        RationalFunction rhs = unary();
        if (rhs.is_zero()) throw ParseError("division by the zero polynomial", col);
        acc = acc / rhs;
      } else if (t.kind == Tok::Ident || t.kind == Tok::LParen) {
        acc = acc * unary();  // implicit multiplication
      } else {
        return acc;
      }
    }
  }

  RationalFunction unary() {
    if (peek().kind == Tok::Minus) {
      next();
      return -unary();
    }
    if (peek().kind == Tok::Plus) {
      next();
      return unary();
    }
    return power();
  }

  RationalFunction power() {
    RationalFunction base = primary();
    if (peek().kind != Tok::Caret) return base;
    const size_t col = next().column;
    const long e = exponent();
    if (e < -10000 || e > 10000) throw ParseError("exponent out of range", col);
    if (e < 0 && base.is_zero()) throw ParseError("division by the zero polynomial", col);
    return base.pow(static_cast<int>(e));
  }

  long exponent() {
    long sign = 1;
    if (peek().kind == Tok::Minus || peek().kind == Tok::Plus) sign = next().kind == Tok::Minus ? -1 : 1;
    const Token& t = next();
    if (t.kind != Tok::Int) throw ParseError("expected integer exponent", t.column);
    Integer v(t.text);
    if (peek().kind == Tok::Caret) {
      const size_t col = next().column;
      const long inner = exponent();
      if (inner < 0) throw ParseError("negative exponent in integer power", col);
      Integer r;
      mpz_pow_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(inner));
      v = r;
    }
    if (!v.fits_slong_p()) throw ParseError("exponent out of range", t.column);
    return sign * v.get_si();
  }

  RationalFunction primary() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::Int:
        return RationalFunction::from_polynomial(Polynomial::constant(Rational(Integer(t.text))));
      case Tok::Ident:
        if (t.text != var_) throw ParseError("unknown identifier '" + t.text + "'", t.column);
        return RationalFunction::from_polynomial(Polynomial::monomial(1, 1));
      case Tok::LParen: {
        RationalFunction inner = expr();
        const Token& close = next();
        if (close.kind != Tok::RParen) throw ParseError("expected ')'", close.column);
        return inner;
      }
      case Tok::End:
        throw ParseError("unexpected end of input", t.column);
      default:
        throw ParseError("unexpected '" + t.text + "'", t.column);
    }
  }

  std::vector<Token> toks_;
  std::string var_;
  size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_ratfunc(std::string_view text, std::string_view variable) {
  try {
    return Parser(text, variable).parse();
  } catch (const ParseError&) {
    throw;
  } catch (const std::domain_error& e) {
    throw ParseError(e.what(), 1);
  }
}

SummabilityReport check_summable(const RationalFunction& r) {
  SummabilityReport rep;
  const Polynomial& q = r.denominator();
  if (r.is_zero()) {
    rep.degree_gap = std::numeric_limits<int>::max();
    return rep;
  }
  rep.degree_gap = q.degree() - r.numerator().degree();
  rep.has_pole_at_zero = q.coeff(0) == 0;
  if (q.degree() > 0) {
    for (const auto& root : rational_roots(q)) {
      if (root.root > 0 && root.root.get_den() == 1) {
        rep.offending_positive_integer_pole = root.root;
        break;
      }
    }
  }
  return rep;
}

void require_summable(const RationalFunction& r) {
  const auto rep = check_summable(r);
  if (!rep.convergent()) throw SummabilityError(SummabilityError::Kind::NotConvergent);
  if (rep.offending_positive_integer_pole) throw SummabilityError(SummabilityError::Kind::InfiniteSummand);
}

}  // namespace eulersum

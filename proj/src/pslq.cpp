#include "eulersum/pslq.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "eulersum/direct_sum.hpp"
#include "eulersum/evaluate.hpp"

namespace eulersum {

namespace {

Integer nearest_integer(const BigFloat& v) {
  Integer z;
  mpfr_get_z(z.get_mpz_t(), v.get(), MPFR_RNDN);
  return z;
}

size_t decimal_size(const Integer& z) { return z == 0 ? 0 : mpz_sizeinbase(z.get_mpz_t(), 10); }

class Pslq {
 public:
  Pslq(const std::vector<BigFloat>& x, long bits) : n_(x.size()), bits_(bits) {
    BigFloat norm(bits);
    for (const auto& v : x) norm += v.with_precision(bits) * v.with_precision(bits);
    norm = sqrt(norm);
    for (const auto& v : x) y_.push_back(v.with_precision(bits) / norm);

    std::vector<BigFloat> s(n_, BigFloat(bits));
    BigFloat acc(bits);
    for (size_t k = n_; k-- > 0;) {
      acc += y_[k] * y_[k];
      s[k] = sqrt(acc);
    }
    h_.assign(n_, std::vector<BigFloat>(n_ - 1, BigFloat(bits)));
    for (size_t j = 0; j + 1 < n_; ++j) {
      h_[j][j] = s[j + 1] / s[j];
      for (size_t i = j + 1; i < n_; ++i) h_[i][j] = -(y_[i] * y_[j]) / (s[j] * s[j + 1]);
    }
    b_.assign(n_, std::vector<Integer>(n_, 0));
    for (size_t i = 0; i < n_; ++i) b_[i][i] = 1;
    for (size_t i = 1; i < n_; ++i) reduce_row(i, i - 1);
  }

  // One PSLQ iteration: exchange at the row maximizing gamma^i |H_ii|,
  // restore the lower-trapezoidal shape, then size-reduce.
  void step(const BigFloat& gamma) {
    size_t m = 0;
    BigFloat best(bits_), gpow(1, bits_);
    for (size_t i = 0; i + 1 < n_; ++i) {
      gpow *= gamma;
      const BigFloat v = gpow * abs(h_[i][i]);
      if (i == 0 || v > best) {
        best = v;
        m = i;
      }
    }
    std::swap(y_[m], y_[m + 1]);
    std::swap(h_[m], h_[m + 1]);
    for (auto& row : b_) std::swap(row[m], row[m + 1]);
    if (m + 2 < n_) {
      const BigFloat t0 = sqrt(h_[m][m] * h_[m][m] + h_[m][m + 1] * h_[m][m + 1]);
      const BigFloat t1 = h_[m][m] / t0;
      const BigFloat t2 = h_[m][m + 1] / t0;
      for (size_t i = m; i < n_; ++i) {
        const BigFloat t3 = h_[i][m];
        const BigFloat t4 = h_[i][m + 1];
        h_[i][m] = t1 * t3 + t2 * t4;
        h_[i][m + 1] = t1 * t4 - t2 * t3;
      }
    }
    for (size_t i = m + 1; i < n_; ++i) reduce_row(i, std::min(i - 1, m + 1));
  }

  size_t smallest_y(BigFloat& smallest, BigFloat& second) const {
    size_t at = 0;
    smallest = abs(y_[0]);
    second = BigFloat(1, bits_);
    for (size_t j = 1; j < n_; ++j) {
      const BigFloat v = abs(y_[j]);
      if (v < smallest) {
        second = smallest;
        smallest = v;
        at = j;
      } else if (v < second) {
        second = v;
      }
    }
    return at;
  }

  /// Every relation has norm at least 1 / max |H_jj|.
  BigFloat norm_bound() const {
    BigFloat mx(bits_);
    for (size_t j = 0; j + 1 < n_; ++j) mx = std::max(mx, abs(h_[j][j]));
    if (mx.is_zero()) return BigFloat(0, bits_);
    return BigFloat(1, bits_) / mx;
  }

  size_t max_b_digits() const {
    size_t d = 0;
    for (const auto& row : b_)
      for (const auto& v : row) d = std::max(d, decimal_size(v));
    return d;
  }

  std::vector<Integer> column(size_t j) const {
    std::vector<Integer> c;
    for (size_t i = 0; i < n_; ++i) c.push_back(b_[i][j]);
    return c;
  }

  bool has_zero_diagonal() const {
    for (size_t j = 0; j + 1 < n_; ++j)
      if (h_[j][j].is_zero()) return true;
    return false;
  }

 private:
  // Size-reduces row i against rows j_top, ..., 0.
  void reduce_row(size_t i, size_t j_top) {
    for (size_t j = j_top + 1; j-- > 0;) {
      if (h_[j][j].is_zero()) continue;
      const Integer t = nearest_integer(h_[i][j] / h_[j][j]);
      if (t == 0) continue;
      const BigFloat tf = BigFloat::from_integer(t, bits_);
      y_[j] += tf * y_[i];
      for (size_t k = 0; k <= j; ++k) h_[i][k] -= tf * h_[j][k];
      for (size_t r = 0; r < n_; ++r) b_[r][j] += t * b_[r][i];
    }
  }

  size_t n_;
  long bits_;
  std::vector<BigFloat> y_;
  std::vector<std::vector<BigFloat>> h_;
  std::vector<std::vector<Integer>> b_;
};

std::vector<Integer> normalized(std::vector<Integer> c) {
  Integer g = 0;
  for (const auto& v : c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g > 1)
    for (auto& v : c) v /= g;
  for (const auto& v : c) {
    if (v == 0) continue;
    if (v < 0)
      for (auto& w : c) w = -w;
    break;
  }
  return c;
}

}  // namespace

RelationResult pslq_find(const std::vector<BigFloat>& x, const Integer& max_coeff, int digits) {
  const size_t n = x.size();
  if (n < 2) throw std::invalid_argument("pslq needs at least two values");
  const long bits = bits_for_digits(digits);
  RelationResult res;
  res.residual = BigFloat(bits);
  res.norm_bound = BigFloat(bits);
  for (size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) {
      res.status = RelationResult::Status::Found;
      res.coefficients.assign(n, 0);
      res.coefficients[i] = 1;
      res.confidence = digits;
      return res;
    }
  }
  const BigFloat threshold = pow10_neg(static_cast<int>(std::ceil(0.9 * digits)), bits);
  const BigFloat gamma = sqrt(BigFloat(Rational(4, 3), bits)) + BigFloat(Rational(1, 1000), bits);
  BigFloat max_norm = BigFloat::from_integer(max_coeff, bits) * sqrt(BigFloat(static_cast<long>(n), bits));
  // Noise in y grows with the size of B; past this many digits it reaches the
  // detection threshold and no further result can be trusted.
  const size_t b_digit_limit = static_cast<size_t>(0.1 * digits) + 8;
  const int max_iterations = 2000 * static_cast<int>(n) + 10 * digits;

  Pslq state(x, bits);
  BigFloat smallest(bits), second(bits);
  for (int it = 0;; ++it) {
    res.iterations = it;
    const size_t j = state.smallest_y(smallest, second);
    if (smallest < threshold || state.has_zero_diagonal()) {
      auto c = normalized(state.column(j));
      Integer biggest = 0;
      for (const auto& v : c) biggest = std::max(biggest, Integer(abs(v)));
      res.norm_bound = state.norm_bound();
      if (biggest > max_coeff) {
        res.status = RelationResult::Status::NoneFound;
        return res;
      }
      BigFloat r(bits);
      for (size_t i = 0; i < n; ++i) r += BigFloat::from_integer(c[i], bits) * x[i].with_precision(bits);
      res.residual = abs(r);
      const double lo = smallest.is_zero() ? -static_cast<double>(bits) * 0.30102999566398120 : smallest.log10_abs();
      res.confidence = second.log10_abs() - lo;
      res.coefficients = std::move(c);
      res.status = RelationResult::Status::Found;
      return res;
    }
    res.norm_bound = state.norm_bound();
    if (res.norm_bound > max_norm) {
      res.status = RelationResult::Status::NoneFound;
      return res;
    }
    if (state.max_b_digits() > b_digit_limit || it >= max_iterations) {
      res.status = RelationResult::Status::PrecisionExhausted;
      return res;
    }
    state.step(gamma);
  }
}

void ConstantBasis::add(std::string name, BigFloat value, SymbolicExpression expr) {
  entries.push_back({std::move(name), std::move(value), std::move(expr)});
}

ConstantBasis make_basis(const std::vector<SymbolicExpression>& constants, int digits) {
  ConstantBasis basis;
  AtomEvaluator ev(digits);
  for (const auto& e : constants) basis.add(to_text(e), ev.expression(e), e);
  return basis;
}

namespace {

// psi^(k)(1) and psi^(k)(1/2) through zeta values; the rest is left to the
// special-value table.
std::optional<SymbolicExpression> psi_to_zeta(const Atom& a) {
  if (a.kind != AtomKind::Psi || a.index < 1) return std::nullopt;
  const int k = a.index;
  if (a.arg != 1 && a.arg != Rational(1, 2)) return std::nullopt;
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  Rational c(f);
  if (k % 2 == 0) c = -c;  // (-1)^(k+1) k!
  if (a.arg == Rational(1, 2)) {
    Integer p2;
    mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(k + 1));
    c *= Rational(p2 - 1);
  }
  return sym_atom(Atom::zeta(k + 1), c);
}

SymbolicExpression rewrite_for_basis(const SymbolicExpression& e) {
  SimplifyOptions opts;
  opts.even_zeta_to_pi = true;
  return simplify_special_values(substitute(e, psi_to_zeta), opts);
}

void zeta_products(int weight, int min_part, Monomial& current, std::vector<Monomial>& out) {
  if (weight == 0) {
    if (!current.empty()) out.push_back(current);
    return;
  }
  for (int part = min_part; part <= weight; ++part) {
    if (weight - part == 1) continue;
    current.push_back({Atom::zeta(part), 1});
    zeta_products(weight - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<SymbolicExpression> auto_basis_constants(const RationalFunction& r) {
  const auto pfd = partial_fractions(r);
  if (!pfd.all_rational()) throw std::domain_error("automatic basis needs rational poles only");
  std::map<Rational, int> max_power;
  for (const auto& term : pfd.rational_terms) max_power[term.t] = std::max(max_power[term.t], term.power);

  std::vector<SymbolicExpression> shapes;
  for (const auto& [t, p] : max_power) {
    if (t == 0) {
      for (int w = 2; w <= p + 1; ++w) {
        std::vector<Monomial> prods;
        Monomial cur;
        zeta_products(w, 2, cur, prods);
        for (const auto& m : prods) {
          SymbolicExpression e;
          e.add_term(m, 1);
          shapes.push_back(e);
        }
      }
      continue;
    }
    for (int i = 1; i <= p; ++i) {
      const SymbolicExpression ti = T_func(t, i);
      for (const auto& [m, c] : ti.terms()) {
        SymbolicExpression e;
        e.add_term(m, 1);
        shapes.push_back(e);
      }
    }
  }
  std::set<Monomial, MonomialLess> seen;
  std::vector<SymbolicExpression> out;
  for (const auto& s : shapes) {
    const SymbolicExpression rewritten = rewrite_for_basis(s);
    for (const auto& [m, c] : rewritten.terms()) {
      if (!seen.insert(m).second) continue;
      SymbolicExpression e;
      e.add_term(m, 1);
      out.push_back(e);
    }
  }
  // Weight order keeps the basis readable: constants first, then by degree.
  std::stable_sort(out.begin(), out.end(), [](const SymbolicExpression& a, const SymbolicExpression& b) {
    return monomial_degree(a.terms().begin()->first) < monomial_degree(b.terms().begin()->first);
  });
  return out;
}

DiscoveryResult discover_from_value(const BigFloat& sum, const ConstantBasis& basis, int digits, const Integer& max_coeff) {
  DiscoveryResult out;
  out.closed_form.provenance.method = "pslq";
  out.closed_form.numeric_value = sum;
  if (basis.size() == 0) {
    out.message = "empty basis";
    return out;
  }
  std::vector<BigFloat> values;
  for (const auto& e : basis.entries) values.push_back(e.value);

  if (values.size() >= 2) {
    const auto self = pslq_find(values, max_coeff, digits);
    if (self.found()) {
      out.status = DiscoveryResult::Status::Ambiguous;
      out.relation = self;
      out.message = "basis constants are linearly dependent over Q";
      return out;
    }
  }

  values.insert(values.begin(), sum);
  out.relation = pslq_find(values, max_coeff, digits);
  switch (out.relation.status) {
    case RelationResult::Status::PrecisionExhausted:
      out.status = DiscoveryResult::Status::PrecisionExhausted;
      out.message = "precision exhausted after " + std::to_string(out.relation.iterations) + " iterations";
      return out;
    case RelationResult::Status::NoneFound:
      out.status = DiscoveryResult::Status::NoRelation;
      out.message = "no relation with coefficients up to " + max_coeff.get_str() + " (norm bound " +
                    out.relation.norm_bound.to_string(6) + ")";
      return out;
    case RelationResult::Status::Found:
      break;
  }
  const auto& c = out.relation.coefficients;
  if (c[0] == 0) {
    out.status = DiscoveryResult::Status::Ambiguous;
    out.message = "relation does not involve the sum";
    return out;
  }
  SymbolicExpression expr;
  for (size_t i = 1; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    Rational q(-c[i], c[0]);
    q.canonicalize();
    expr += basis.entries[i - 1].expr.scaled(q);
  }
  out.closed_form.expression = expr;
  std::ostringstream rel;
  rel << "relation";
  for (const auto& v : c) rel << ' ' << v.get_str();
  out.closed_form.provenance.steps.push_back(rel.str());
  out.closed_form.provenance.steps.push_back("residual " + out.relation.residual.to_string(3));
  out.closed_form.provenance.steps.push_back("confidence " + std::to_string(out.relation.confidence) + " digits");
  out.status = DiscoveryResult::Status::Found;
  return out;
}

DiscoveryResult discover(const RationalFunction& r, const ConstantBasis& basis, int digits, const Integer& max_coeff,
                         long terms) {
  DirectSumConfig cfg;
  cfg.digits = digits;
  cfg.terms = terms;
  const auto direct = direct_euler_sum(r, cfg);
  return discover_from_value(direct.value.with_precision(bits_for_digits(digits)), basis, digits, max_coeff);
}

}  // namespace eulersum

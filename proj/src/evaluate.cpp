#include "eulersum/evaluate.hpp"

#include <algorithm>
#include <stdexcept>

#include "eulersum/roots.hpp"
#include "eulersum/special.hpp"

namespace eulersum {

AtomEvaluator::AtomEvaluator(int digits) : digits_(digits), bits_(bits_for_digits(digits)) {
  if (digits < 1) throw std::invalid_argument("digits must be positive");
}

BigFloat AtomEvaluator::psi(int order, const Rational& t) {
  auto it = psi_cache_.find(t);
  if (it == psi_cache_.end() || static_cast<int>(it->second.size()) <= order) {
    // Fetch a few orders at once; nearby orders are usually needed together.
    const int want = std::max(order, it == psi_cache_.end() ? 0 : static_cast<int>(it->second.size()) + 2);
    psi_cache_[t] = polygamma_orders_hp(want, t, digits_);
    it = psi_cache_.find(t);
  }
  return it->second[static_cast<size_t>(order)];
}

BigFloat AtomEvaluator::root_sum(const RootSumData& data) {
  int max_order = 0;
  for (const auto& [mono, c] : data.templ.terms())
    for (const auto& [a, p] : mono)
      if (a.kind == AtomKind::PsiRoot) max_order = std::max(max_order, a.index);
  BigComplex total(bits_);
  for (const auto& root : find_roots_hp(data.poly, digits_)) {
    const auto psis = polygamma_orders_hp(max_order, -root, digits_);
    for (const auto& [mono, c] : data.templ.terms()) {
      BigComplex term(BigFloat(c, bits_));
      for (const auto& [a, p] : mono) {
        BigComplex v(bits_);
        switch (a.kind) {
          case AtomKind::Alpha: v = root; break;
          case AtomKind::PsiRoot: v = psis[static_cast<size_t>(a.index)]; break;
          default: v = BigComplex(atom(a)); break;
        }
        term *= pow_si(v, p);
      }
      total += term;
    }
  }
  return total.re();
}

BigFloat AtomEvaluator::atom(const Atom& a) {
  if (gamma_pi_.empty()) {
    gamma_pi_.push_back(euler_gamma_hp(digits_));
    gamma_pi_.push_back(const_pi(bits_));
  }
  switch (a.kind) {
    case AtomKind::Psi: return psi(a.index, a.arg);
    case AtomKind::Zeta: {
      auto it = zeta_cache_.find(a.index);
      if (it == zeta_cache_.end()) it = zeta_cache_.emplace(a.index, riemann_zeta_hp(a.index, digits_)).first;
      return it->second;
    }
    case AtomKind::Pi: return gamma_pi_[1];
    case AtomKind::Log: {
      auto it = log_cache_.find(a.index);
      if (it == log_cache_.end()) it = log_cache_.emplace(a.index, const_log(a.index, bits_)).first;
      return it->second;
    }
    case AtomKind::Gamma: return gamma_pi_[0];
    case AtomKind::RootSum: return root_sum(*a.root_sum);
    case AtomKind::Alpha:
    case AtomKind::PsiRoot: break;
  }
  throw std::domain_error("atom " + atom_text(a) + " has no value outside a RootSum template");
}

BigFloat AtomEvaluator::monomial(const Monomial& m) {
  BigFloat v(1, bits_);
  for (const auto& [a, p] : m) v *= pow_si(atom(a), p);
  return v;
}

BigFloat AtomEvaluator::expression(const SymbolicExpression& e) {
  BigFloat sum(bits_);
  for (const auto& [m, c] : e.terms()) sum += monomial(m) * BigFloat(c, bits_);
  return sum;
}

BigFloat eval_symexpr(const SymbolicExpression& e, int digits) {
  AtomEvaluator ev(digits);
  return ev.expression(e);
}

}  // namespace eulersum

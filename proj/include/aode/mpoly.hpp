#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "aode/monomial.hpp"
#include "aode/vartable.hpp"

namespace aode::poly {

/// Sparse multivariate polynomial over a field K. Terms are stored under the
/// canonical monomial order (container order); division and Groebner code put
/// a MonomialOrder on top. No zero coefficients are ever stored.
///
/// K needs: +, binary/unary -, *, inv(), ==, is_zero(), one_like(),
/// times_int(long), times_rat(Rational-like).
template <class K>
class MPoly {
 public:
  using Terms = std::map<Monomial, K>;

  explicit MPoly(TablePtr table) : table_(std::move(table)) {}

  MPoly(TablePtr table, K c) : table_(std::move(table)) {
    if (!c.is_zero()) terms_.emplace(Monomial(), std::move(c));
  }

  static MPoly constant(TablePtr table, K c) { return MPoly(std::move(table), std::move(c)); }

  static MPoly variable(TablePtr table, std::size_t i, const K& one, std::uint32_t pow = 1) {
    check(i < table->size(), Errc::usage, "variable index outside table");
    MPoly p(std::move(table));
    if (pow == 0) {
      p.terms_.emplace(Monomial(), one);
    } else {
      p.terms_.emplace(Monomial::var(i, pow), one);
    }
    return p;
  }

  static MPoly from_terms(TablePtr table, Terms t) {
    MPoly p(std::move(table));
    for (auto it = t.begin(); it != t.end();) {
      it = it->second.is_zero() ? t.erase(it) : std::next(it);
    }
    p.terms_ = std::move(t);
    return p;
  }

  const Terms& terms() const { return terms_; }
  const TablePtr& table() const { return table_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
  }
  /// Value of the constant term; the polynomial must be constant. A zero
  /// polynomial yields a default-constructed K.
  K constant_coeff() const {
    icheck(is_constant(), "constant_coeff of a non-constant polynomial");
    return terms_.empty() ? K{} : terms_.begin()->second;
  }
  const K* coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? nullptr : &it->second;
  }

  std::uint64_t total_degree() const {  // max over terms; 0 for the zero polynomial
    std::uint64_t d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
  }
  std::uint32_t degree_in(std::size_t i) const {
    std::uint32_t d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.exp(i));
    return d;
  }
  bool uses_var(std::size_t i) const {
    for (auto& [m, c] : terms_)
      if (m.exp(i) != 0) return true;
    return false;
  }
  std::optional<std::size_t> support_max() const {
    std::optional<std::size_t> r;
    for (auto& [m, c] : terms_)
      if (m.width() > 0) r = std::max(r.value_or(0), m.width() - 1);
    return r;
  }

  bool operator==(const MPoly& o) const { return terms_ == o.terms_; }

  MPoly operator+(const MPoly& o) const {
    MPoly r(merge_tables(table_, o.table_));
    r.terms_ = terms_;
    for (auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }
  MPoly operator-(const MPoly& o) const {
    MPoly r(merge_tables(table_, o.table_));
    r.terms_ = terms_;
    for (auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
  }
  MPoly operator-() const {
    MPoly r(table_);
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  MPoly operator*(const MPoly& o) const {
    MPoly r(merge_tables(table_, o.table_));
    for (auto& [m1, c1] : terms_)
      for (auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
  }

  MPoly scaled(const K& k) const {
    MPoly r(table_);
    if (k.is_zero()) return r;
    for (auto& [m, c] : terms_) {
      K v = c * k;
      if (!v.is_zero()) r.terms_.emplace(m, std::move(v));
    }
    return r;
  }
  MPoly times_int(long n) const {
    MPoly r(table_);
    if (n == 0) return r;
    for (auto& [m, c] : terms_) {
      K v = c.times_int(n);
      if (!v.is_zero()) r.terms_.emplace(m, std::move(v));
    }
    return r;
  }
  template <class Q>
  MPoly times_rat(const Q& q) const {
    MPoly r(table_);
    if (q.is_zero()) return r;
    for (auto& [m, c] : terms_) {
      K v = c.times_rat(q);
      if (!v.is_zero()) r.terms_.emplace(m, std::move(v));
    }
    return r;
  }
  MPoly times_term(const Monomial& m0, const K& c0) const {
    MPoly r(table_);
    if (c0.is_zero()) return r;
    for (auto& [m, c] : terms_) {
      K v = c * c0;
      if (!v.is_zero()) r.terms_.emplace(m * m0, std::move(v));
    }
    return r;
  }

  MPoly pow(std::uint32_t e) const {
    if (e == 0) {
      icheck(!terms_.empty(), "0^0 has no coefficient sample");
      return constant(table_, terms_.begin()->second.one_like());
    }
    MPoly r = *this;
    for (std::uint32_t i = 1; i < e; ++i) r = r * *this;
    return r;
  }

  MPoly substitute(std::size_t i, const MPoly& v) const {
    MPoly r(merge_tables(table_, v.table_));
    std::map<std::uint32_t, MPoly> powers;
    for (auto& [m, c] : terms_) {
      std::uint32_t e = m.exp(i);
      if (e == 0) {
        r.add_term(m, c);
        continue;
      }
      auto it = powers.find(e);
      if (it == powers.end()) it = powers.emplace(e, v.pow(e)).first;
      Monomial rest = m.divided_by(Monomial::var(i, e));
      for (auto& [vm, vc] : it->second.terms_) r.add_term(rest * vm, c * vc);
    }
    return r;
  }

  MPoly substitute_scalar(std::size_t i, const K& v) const {
    MPoly r(table_);
    for (auto& [m, c] : terms_) {
      std::uint32_t e = m.exp(i);
      if (e == 0) {
        r.add_term(m, c);
        continue;
      }
      K f = c;
      for (std::uint32_t j = 0; j < e; ++j) f = f * v;
      if (!f.is_zero()) r.add_term(m.divided_by(Monomial::var(i, e)), f);
    }
    return r;
  }

  K eval(std::span<const K> vals, K acc) const {  // acc: a zero of the right field tag
    for (auto& [m, c] : terms_) {
      K t = c;
      for (std::size_t i = 0; i < m.width(); ++i) {
        check(m.exp(i) == 0 || i < vals.size(), Errc::insufficient_jet,
              "evaluation point shorter than polynomial support");
        for (std::uint32_t j = 0; j < m.exp(i); ++j) t = t * vals[i];
      }
      acc = acc + t;
    }
    return acc;
  }

  struct TermRef {
    const Monomial& mono;
    const K& coeff;
  };
  /// Leading term under the given order; polynomial must be nonzero.
  TermRef leading(const MonomialOrder& ord) const {
    icheck(!terms_.empty(), "leading term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
      if (ord.less(best->first, it->first)) best = it;
    return {best->first, best->second};
  }

  /// Univariate view in variable i: power -> coefficient polynomial (without i).
  std::map<std::uint32_t, MPoly> coeffs_in(std::size_t i) const {
    std::map<std::uint32_t, MPoly> r;
    for (auto& [m, c] : terms_) {
      std::uint32_t e = m.exp(i);
      auto it = r.find(e);
      if (it == r.end()) it = r.emplace(e, MPoly(table_)).first;
      it->second.add_term(m.divided_by(Monomial::var(i, e)), c);
    }
    return r;
  }

  MPoly lifted(const TablePtr& t) const {
    MPoly r(merge_tables(table_, t));
    r.terms_ = terms_;
    return r;
  }

  void add_term(const Monomial& m, const K& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

 private:
  TablePtr table_;
  Terms terms_;
};

/// Formal partial derivative with respect to variable i.
template <class K>
MPoly<K> partial_derivative(const MPoly<K>& p, std::size_t i) {
  MPoly<K> r(p.table());
  for (const auto& [m, c] : p.terms()) {
    std::uint32_t e = m.exp(i);
    if (e == 0) continue;
    r.add_term(m.divided_by(Monomial::var(i)), c.times_int(static_cast<long>(e)));
  }
  return r;
}

}  // namespace aode::poly

#include "aode/qgcd.hpp"

#include <map>
#include <utility>
#include <vector>

#include "aode/error.hpp"

namespace aode::poly {

using arith::Rational;

Rational rational_content(const QPoly& p) {
  Rational g(0);
  for (const auto& [m, c] : p.terms()) g = Rational::gcd(g, c);
  return g;
}

QPoly primitive_part(const QPoly& p) {
  if (p.is_zero()) return p;
  Rational cont = rational_content(p);
  // canonical lead: largest monomial in the term map
  const Rational& lead = p.terms().rbegin()->second;
  if (lead.is_negative()) cont = -cont;
  return p.times_rat(cont.inv());
}

std::optional<QPoly> exact_divide(const QPoly& a, const QPoly& b) {
  icheck(!b.is_zero(), "exact_divide by zero polynomial");
  auto table = merge_tables(a.table(), b.table());
  MonomialOrder ord = MonomialOrder::degrevlex();
  QPoly rem = a.lifted(table);
  QPoly lb = b.lifted(table);
  auto ltb = lb.leading(ord);
  QPoly quot(table, Rational(0));
  while (!rem.is_zero()) {
    auto ltr = rem.leading(ord);
    if (!ltb.mono.divides(ltr.mono)) return std::nullopt;
    Monomial m = ltr.mono.divided_by(ltb.mono);
    Rational c = ltr.coeff / ltb.coeff;
    quot.add_term(m, c);
    rem = rem - lb.times_term(m, c);
  }
  return quot;
}

namespace {

// p as a univariate polynomial in variable x with QPoly coefficients
using UniView = std::map<std::uint32_t, QPoly>;

std::uint32_t udeg(const UniView& v) { return v.empty() ? 0 : v.rbegin()->first; }

// gcd folded over the x-coefficients of p; the content of p w.r.t. x
QPoly content_in(const QPoly& p, std::size_t x) {
  QPoly g(p.table(), Rational(0));
  for (const auto& [pw, c] : p.coeffs_in(x)) {
    g = qgcd(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

// pseudo-remainder of a by b in x, up to a nonzero content factor
QPoly pseudo_rem(QPoly a, const QPoly& b, std::size_t x) {
  UniView vb = b.coeffs_in(x);
  std::uint32_t db = udeg(vb);
  const QPoly lb = vb.rbegin()->second;
  QPoly xv = QPoly::variable(a.table(), x, Rational(1));
  while (!a.is_zero()) {
    UniView va = a.coeffs_in(x);
    std::uint32_t da = udeg(va);
    if (da < db) break;
    const QPoly la = va.rbegin()->second;
    a = a * lb - b * la * xv.pow(da - db);
  }
  return a;
}

}  // namespace

QPoly qgcd(QPoly a, QPoly b) {
  auto table = merge_tables(a.table(), b.table());
  a = a.lifted(table);
  b = b.lifted(table);
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  if (a.is_constant() || b.is_constant()) return QPoly(table, Rational(1));

  std::size_t x = std::max(*a.support_max(), *b.support_max());
  QPoly ca = content_in(a, x);
  QPoly cb = content_in(b, x);
  auto qa = exact_divide(a, ca);
  auto qb = exact_divide(b, cb);
  icheck(qa && qb, "content division not exact");
  QPoly u = *qa, v = *qb;
  if (udeg(u.coeffs_in(x)) < udeg(v.coeffs_in(x))) std::swap(u, v);
  while (!v.is_zero()) {
    QPoly r = pseudo_rem(u, v, x);
    u = std::move(v);
    if (r.is_zero()) {
      v = r;
    } else {
      QPoly cr = content_in(r, x);
      auto q = exact_divide(r, cr);
      icheck(q.has_value(), "content division not exact");
      v = *q;
    }
  }
  if (udeg(u.coeffs_in(x)) == 0) u = QPoly(table, Rational(1));
  return primitive_part(u * qgcd(ca, cb));
}

}  // namespace aode::poly

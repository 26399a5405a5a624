#include "aode/introots.hpp"

#include <algorithm>
#include <map>

#include "aode/error.hpp"
#include "aode/qgcd.hpp"

namespace aode::poly {

using arith::FieldElement;
using arith::FieldKind;
using arith::Gaussian;
using arith::ParamRational;
using arith::Rational;

namespace {

// The polynomial split along a Q-basis of the field: a common integer root of
// the components is an integer root of p and conversely.
std::vector<QPoly> components(const MultiPoly& p) {
  const TablePtr& tt = p.table();
  std::vector<QPoly> out;
  auto add = [&](const std::map<Monomial, Rational>& terms) {
    QPoly q(tt, Rational(0));
    for (const auto& [m, c] : terms) q.add_term(m, c);
    if (!q.is_zero()) out.push_back(q);
  };
  FieldKind kind = p.terms().begin()->second.kind();
  if (kind == FieldKind::rational) {
    std::map<Monomial, Rational> one;
    for (const auto& [m, c] : p.terms()) one[m] = c.rational();
    add(one);
  } else if (kind == FieldKind::gaussian) {
    std::map<Monomial, Rational> re, im;
    for (const auto& [m, c] : p.terms()) {
      re[m] = c.gaussian().re();
      im[m] = c.gaussian().im();
    }
    add(re);
    add(im);
  } else {
    // clear to a common denominator, then split by parameter monomial
    const TablePtr& pt = p.terms().begin()->second.param().table();
    QPoly den(pt, Rational(1));
    for (const auto& [m, c] : p.terms()) {
      QPoly d = c.param().den();
      den = den * *exact_divide(d, qgcd(den, d));
    }
    std::map<Monomial, std::map<Monomial, Rational>> split;
    for (const auto& [m, c] : p.terms()) {
      QPoly cleared = c.param().num() * *exact_divide(den, c.param().den());
      for (const auto& [pm, q] : cleared.terms()) split[pm][m] = q;
    }
    for (const auto& [pm, terms] : split) add(terms);
  }
  return out;
}

}  // namespace

std::vector<long> integer_roots(const MultiPoly& p) {
  check(!p.is_zero(), Errc::zero_polynomial,
        "integer roots of the zero polynomial are undefined");
  icheck(p.support_max() == 0 || p.is_constant(), "expected a univariate polynomial");
  if (p.is_constant()) return {};

  QPoly g(p.table(), Rational(0));
  for (const QPoly& c : components(p)) {
    g = qgcd(g, c);
    if (g.is_constant()) break;
  }
  if (g.is_constant()) return {};

  // g is primitive with integer coefficients; strip the power of t first
  auto uni = g.coeffs_in(0);
  std::uint32_t val = uni.begin()->first;
  std::vector<long> roots;
  if (val > 0) roots.push_back(0);
  Rational trailing = uni.begin()->second.constant_coeff();
  if (uni.size() > 1 || val == 0) {
    icheck(trailing.is_integer(), "primitive part not integral");
    FieldElement onek = p.terms().begin()->second.one_like();
    for (const mpz_class& d : arith::divisors(trailing.numerator())) {
      for (int sign : {1, -1}) {
        mpz_class cand = sign * d;
        icheck(cand.fits_slong_p(), "integer root candidate out of range");
        long r = cand.get_si();
        std::vector<FieldElement> at{onek.times_int(r)};
        if (p.eval(at, onek.times_int(0)).is_zero()) roots.push_back(r);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace aode::poly

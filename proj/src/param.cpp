#include "aode/param.hpp"

#include <utility>

#include "aode/error.hpp"
#include "aode/render.hpp"

namespace aode::arith {

using poly::QPoly;

namespace {

poly::CoeffForm rational_form(const Rational& r) {
  poly::CoeffForm f;
  f.negative = r.is_negative();
  Rational a = r.abs();
  f.is_one = a.is_one();
  f.text = a.str();
  return f;
}

std::string render_q(const QPoly& p) { return poly::render_poly(p, rational_form); }

}  // namespace

ParamRational::ParamRational(QPoly num, QPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  check(!den_.is_zero(), Errc::division_by_zero, "zero denominator");
  auto table = poly::merge_tables(num_.table(), den_.table());
  num_ = num_.lifted(table);
  den_ = den_.lifted(table);
  normalize();
}

void ParamRational::normalize() {
  if (num_.is_zero()) {
    den_ = QPoly(den_.table(), Rational(1));
    return;
  }
  QPoly g = poly::qgcd(num_, den_);
  if (!g.is_constant()) {
    auto n = poly::exact_divide(num_, g);
    auto d = poly::exact_divide(den_, g);
    icheck(n && d, "gcd does not divide");
    num_ = *n;
    den_ = *d;
  }
  Rational lead = den_.leading(poly::MonomialOrder::degrevlex()).coeff;
  if (!lead.is_one()) {
    Rational s = lead.inv();
    num_ = num_.times_rat(s);
    den_ = den_.times_rat(s);
  }
}

ParamRational ParamRational::from_poly(QPoly num) {
  QPoly den(num.table(), Rational(1));
  return ParamRational(std::move(num), std::move(den));
}

ParamRational ParamRational::zero(const poly::TablePtr& table) {
  return from_poly(QPoly(table, Rational(0)));
}

ParamRational ParamRational::one(const poly::TablePtr& table) {
  return from_poly(QPoly(table, Rational(1)));
}

ParamRational ParamRational::constant(const poly::TablePtr& table, const Rational& c) {
  return from_poly(QPoly(table, c));
}

ParamRational ParamRational::variable(const poly::TablePtr& table, std::size_t idx) {
  return from_poly(QPoly::variable(table, idx, Rational(1)));
}

bool ParamRational::is_one() const {
  return num_.is_constant() && den_.is_constant() && num_.constant_coeff().is_one() &&
         den_.constant_coeff().is_one();
}

Rational ParamRational::rational_value() const {
  check(is_rational(), Errc::unsupported, "parametric value is not a plain rational");
  return num_.constant_coeff() / den_.constant_coeff();
}

ParamRational ParamRational::operator+(const ParamRational& o) const {
  return ParamRational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

ParamRational ParamRational::operator-(const ParamRational& o) const {
  return ParamRational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

ParamRational ParamRational::operator*(const ParamRational& o) const {
  return ParamRational(num_ * o.num_, den_ * o.den_);
}

ParamRational ParamRational::operator/(const ParamRational& o) const {
  check(!o.is_zero(), Errc::division_by_zero, "division by zero");
  return ParamRational(num_ * o.den_, den_ * o.num_);
}

ParamRational ParamRational::operator-() const {
  ParamRational r = *this;
  r.num_ = -r.num_;
  return r;
}

bool ParamRational::operator==(const ParamRational& o) const {
  return num_ == o.num_ && den_ == o.den_;
}

ParamRational ParamRational::inv() const {
  check(!is_zero(), Errc::division_by_zero, "inverse of zero");
  return ParamRational(den_, num_);
}

ParamRational ParamRational::times_int(long n) const {
  return ParamRational(num_.times_rat(Rational(n)), den_);
}

ParamRational ParamRational::times_rat(const Rational& q) const {
  return ParamRational(num_.times_rat(q), den_);
}

std::optional<ParamRational> ParamRational::sqrt_exact() const {
  if (!is_rational()) return std::nullopt;
  auto r = rational_value().sqrt_exact();
  if (!r) return std::nullopt;
  return constant(table(), *r);
}

std::string ParamRational::str() const {
  // den is exactly 1 when constant (monic after normalize)
  if (den_.is_constant()) return render_q(num_);
  std::string n =
      num_.terms().size() == 1 ? render_q(num_) : "(" + render_q(num_) + ")";
  return n + "/(" + render_q(den_) + ")";
}

}  // namespace aode::arith

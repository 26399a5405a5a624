#include "aode/field.hpp"

#include "aode/error.hpp"

namespace aode::arith {

namespace {

void same_kind(const FieldElement& a, const FieldElement& b) {
  check(a.kind() == b.kind(), Errc::mixed_field,
        "elements of different coefficient fields in one expression");
}

poly::CoeffForm form_of(const Rational& r) {
  poly::CoeffForm f;
  f.negative = r.is_negative();
  Rational a = r.abs();
  f.is_one = a.is_one();
  f.text = a.str();
  return f;
}

poly::CoeffForm form_of(const Gaussian& g) {
  if (g.is_real()) return form_of(g.re());
  poly::CoeffForm f;
  if (g.re().is_zero()) {
    Rational im = g.im();
    f.negative = im.is_negative();
    Rational a = im.abs();
    f.text = a.is_one() ? "i" : a.str() + "*i";
    return f;
  }
  Rational ia = g.im().abs();
  f.text = g.re().str() + (g.im().is_negative() ? " - " : " + ") +
           (ia.is_one() ? "i" : ia.str() + "*i");
  f.needs_parens = true;
  return f;
}

poly::CoeffForm form_of(const ParamRational& p) {
  poly::CoeffForm f;
  if (p.den().is_constant() && p.num().terms().size() <= 1) {
    if (p.is_zero()) {
      f.text = "0";
      return f;
    }
    const auto& [mono, coeff] = *p.num().terms().begin();
    f.negative = coeff.is_negative();
    Rational a = coeff.abs();
    std::string ms = poly::render_monomial(mono, *p.table());
    if (ms.empty()) {
      f.is_one = a.is_one();
      f.text = a.str();
    } else {
      f.text = a.is_one() ? ms : a.str() + "*" + ms;
    }
    return f;
  }
  f.text = p.str();
  f.needs_parens = true;
  return f;
}

}  // namespace

FieldKind FieldElement::kind() const {
  switch (v_.index()) {
    case 0: return FieldKind::rational;
    case 1: return FieldKind::gaussian;
    default: return FieldKind::parametric;
  }
}

bool FieldElement::is_zero() const {
  return std::visit([](const auto& x) { return x.is_zero(); }, v_);
}

bool FieldElement::is_one() const {
  return std::visit([](const auto& x) { return x.is_one(); }, v_);
}

const Rational& FieldElement::rational() const {
  check(v_.index() == 0, Errc::mixed_field, "expected a rational value");
  return std::get<Rational>(v_);
}

const Gaussian& FieldElement::gaussian() const {
  check(v_.index() == 1, Errc::mixed_field, "expected a gaussian rational value");
  return std::get<Gaussian>(v_);
}

const ParamRational& FieldElement::param() const {
  check(v_.index() == 2, Errc::mixed_field, "expected a parametric value");
  return std::get<ParamRational>(v_);
}

#define AODE_FIELD_BINOP(op)                                                  \
  FieldElement FieldElement::operator op(const FieldElement& o) const {       \
    same_kind(*this, o);                                                      \
    return std::visit(                                                        \
        [&](const auto& a) {                                                  \
          using T = std::decay_t<decltype(a)>;                                \
          return FieldElement(a op std::get<T>(o.v_));                        \
        },                                                                    \
        v_);                                                                  \
  }

AODE_FIELD_BINOP(+)
AODE_FIELD_BINOP(-)
AODE_FIELD_BINOP(*)
AODE_FIELD_BINOP(/)
#undef AODE_FIELD_BINOP

FieldElement FieldElement::operator-() const {
  return std::visit([](const auto& a) { return FieldElement(-a); }, v_);
}

bool FieldElement::operator==(const FieldElement& o) const {
  same_kind(*this, o);
  return v_ == o.v_;
}

FieldElement FieldElement::inv() const {
  return std::visit([](const auto& a) { return FieldElement(a.inv()); }, v_);
}

FieldElement FieldElement::one_like() const {
  return std::visit([](const auto& a) { return FieldElement(a.one_like()); }, v_);
}

FieldElement FieldElement::times_int(long n) const {
  return std::visit([&](const auto& a) { return FieldElement(a.times_int(n)); }, v_);
}

FieldElement FieldElement::times_rat(const Rational& q) const {
  return std::visit([&](const auto& a) { return FieldElement(a.times_rat(q)); }, v_);
}

std::optional<FieldElement> FieldElement::sqrt_exact() const {
  return std::visit(
      [](const auto& a) -> std::optional<FieldElement> {
        auto r = a.sqrt_exact();
        if (!r) return std::nullopt;
        return FieldElement(*r);
      },
      v_);
}

poly::CoeffForm FieldElement::coeff_form() const {
  return std::visit([](const auto& a) { return form_of(a); }, v_);
}

std::string FieldElement::str() const {
  if (v_.index() == 2) return std::get<ParamRational>(v_).str();
  poly::CoeffForm f = coeff_form();
  return f.negative ? "-" + f.text : f.text;
}

FieldContext FieldContext::rationals() { return FieldContext{FieldKind::rational, nullptr}; }

FieldContext FieldContext::gaussian_rationals() {
  return FieldContext{FieldKind::gaussian, nullptr};
}

FieldContext FieldContext::parametric(const std::vector<std::string>& names) {
  return FieldContext{FieldKind::parametric, poly::VarTable::make(names)};
}

FieldElement FieldContext::from_rational(const Rational& q) const {
  switch (kind) {
    case FieldKind::rational: return FieldElement(q);
    case FieldKind::gaussian: return FieldElement(Gaussian(q, Rational(0)));
    default: return FieldElement(ParamRational::constant(params, q));
  }
}

FieldElement FieldContext::zero() const { return from_rational(Rational(0)); }
FieldElement FieldContext::one() const { return from_rational(Rational(1)); }
FieldElement FieldContext::integer(long n) const { return from_rational(Rational(n)); }

FieldElement FieldContext::imag_unit() const {
  check(kind == FieldKind::gaussian, Errc::mixed_field,
        "imaginary unit requires the gaussian rational field");
  return FieldElement(Gaussian::i());
}

FieldElement FieldContext::param(std::size_t i) const {
  check(kind == FieldKind::parametric, Errc::mixed_field,
        "parameters require a parametric field");
  return FieldElement(ParamRational::variable(params, i));
}

}  // namespace aode::arith

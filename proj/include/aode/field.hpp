#pragma once

#include <optional>
#include <string>
#include <variant>

#include "aode/gaussian.hpp"
#include "aode/param.hpp"
#include "aode/render.hpp"

namespace aode::arith {

enum class FieldKind { rational, gaussian, parametric };

/// One element of the active coefficient field. All elements appearing in a
/// single computation carry the same kind; mixing kinds is an error.
class FieldElement {
 public:
  FieldElement() : v_(Rational(0)) {}
  explicit FieldElement(Rational r) : v_(std::move(r)) {}
  explicit FieldElement(Gaussian g) : v_(std::move(g)) {}
  explicit FieldElement(ParamRational p) : v_(std::move(p)) {}

  FieldKind kind() const;
  bool is_zero() const;
  bool is_one() const;

  const Rational& rational() const;
  const Gaussian& gaussian() const;
  const ParamRational& param() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  FieldElement inv() const;
  FieldElement one_like() const;
  FieldElement times_int(long n) const;
  FieldElement times_rat(const Rational& q) const;
  std::optional<FieldElement> sqrt_exact() const;

  poly::CoeffForm coeff_form() const;
  std::string str() const;

 private:
  std::variant<Rational, Gaussian, ParamRational> v_;
};

/// Factory for elements of the chosen field. For parametric fields holds the
/// parameter name table.
struct FieldContext {
  FieldKind kind = FieldKind::rational;
  poly::TablePtr params;  // set iff kind == parametric

  static FieldContext rationals();
  static FieldContext gaussian_rationals();
  static FieldContext parametric(const std::vector<std::string>& names);

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement integer(long n) const;
  FieldElement from_rational(const Rational& q) const;
  FieldElement imag_unit() const;          // gaussian only
  FieldElement param(std::size_t i) const;  // parametric only
};

}  // namespace aode::arith

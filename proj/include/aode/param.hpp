#pragma once

#include <optional>
#include <string>

#include "aode/qgcd.hpp"

namespace aode::arith {

/// Element of Q(p_1,...,p_s): a reduced fraction of polynomials with rational
/// coefficients. Canonical form: gcd(num, den) constant, den monic w.r.t.
/// degrevlex. Equality is structural.
class ParamRational {
 public:
  ParamRational(poly::QPoly num, poly::QPoly den);
  static ParamRational from_poly(poly::QPoly num);
  static ParamRational zero(const poly::TablePtr& table);
  static ParamRational one(const poly::TablePtr& table);
  static ParamRational constant(const poly::TablePtr& table, const Rational& c);
  static ParamRational variable(const poly::TablePtr& table, std::size_t idx);

  const poly::QPoly& num() const { return num_; }
  const poly::QPoly& den() const { return den_; }
  const poly::TablePtr& table() const { return num_.table(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
  Rational rational_value() const;

  ParamRational operator+(const ParamRational& o) const;
  ParamRational operator-(const ParamRational& o) const;
  ParamRational operator*(const ParamRational& o) const;
  ParamRational operator/(const ParamRational& o) const;
  ParamRational operator-() const;
  bool operator==(const ParamRational& o) const;
  bool operator!=(const ParamRational& o) const { return !(*this == o); }

  ParamRational inv() const;
  ParamRational one_like() const { return one(table()); }
  ParamRational times_int(long n) const;
  ParamRational times_rat(const Rational& q) const;
  std::optional<ParamRational> sqrt_exact() const;

  std::string str() const;

 private:
  poly::QPoly num_, den_;
  void normalize();
};

}  // namespace aode::arith

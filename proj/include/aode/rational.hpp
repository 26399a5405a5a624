#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aode/error.hpp"

namespace aode::arith {

/// Exact rational with arbitrary-precision numerator and denominator.
/// Canonical at all times: gcd(num, den) = 1, den > 0, zero stored as 0/1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
  Rational(long n, long d);
  explicit Rational(mpz_class n) : v_(std::move(n)) {}
  Rational(mpz_class n, mpz_class d);

  /// Accepts "p" or "p/q" with optional leading '-'.
  static Rational from_string(const std::string& s);

  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
  Rational operator/(const Rational& o) const;
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }
  bool operator<=(const Rational& o) const { return v_ <= o.v_; }
  bool operator>(const Rational& o) const { return v_ > o.v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  bool is_negative() const { return sgn(v_) < 0; }
  int sign() const { return sgn(v_); }

  Rational inv() const;
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  Rational pow_u(unsigned long e) const;

  // Coefficient-field hooks shared by every scalar type the polynomial
  // template can carry.
  Rational one_like() const { return Rational(1); }
  Rational times_int(long n) const { return *this * Rational(n); }
  Rational times_rat(const Rational& q) const { return *this * q; }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  /// Exact square root when one exists in Q.
  std::optional<Rational> sqrt_exact() const;

  /// gcd(a/b, c/d) = gcd(a,c)/lcm(b,d); used for content extraction.
  static Rational gcd(const Rational& a, const Rational& b);

  std::string str() const { return v_.get_str(); }

 private:
  explicit Rational(mpq_class q) : v_(std::move(q)) {}
  mpq_class v_;  // gmp keeps arithmetic results canonical
};

/// All integers d with |d| dividing |n|, ascending by absolute value; n != 0.
/// Trial division; throws unsupported if |n| is too large to enumerate.
std::vector<mpz_class> divisors(const mpz_class& n);

}  // namespace aode::arith

#pragma once

#include <optional>

#include "aode/rational.hpp"

namespace aode::arith {

/// Element of Q(i), stored component-wise.
class Gaussian {
 public:
  Gaussian() = default;
  Gaussian(Rational re, Rational im = Rational(0)) : re_(std::move(re)), im_(std::move(im)) {}
  static Gaussian i() { return Gaussian(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  Gaussian operator+(const Gaussian& o) const { return {re_ + o.re_, im_ + o.im_}; }
  Gaussian operator-(const Gaussian& o) const { return {re_ - o.re_, im_ - o.im_}; }
  Gaussian operator-() const { return {-re_, -im_}; }
  Gaussian operator*(const Gaussian& o) const {
    return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
  }
  Gaussian operator/(const Gaussian& o) const { return *this * o.inv(); }

  bool operator==(const Gaussian& o) const { return re_ == o.re_ && im_ == o.im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const { return re_.is_one() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  Rational norm() const { return re_ * re_ + im_ * im_; }  // |z|^2, a nonnegative rational

  Gaussian inv() const {
    check(!is_zero(), Errc::division_by_zero, "inverse of zero");
    Rational n = norm();
    return {re_ / n, -im_ / n};
  }

  Gaussian one_like() const { return Gaussian(Rational(1)); }
  Gaussian times_int(long n) const { return {re_.times_int(n), im_.times_int(n)}; }
  Gaussian times_rat(const Rational& q) const { return {re_ * q, im_ * q}; }

  /// Exact square root when one exists in Q(i).
  std::optional<Gaussian> sqrt_exact() const;

 private:
  Rational re_, im_;
};

}  // namespace aode::arith

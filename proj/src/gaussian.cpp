#include "aode/gaussian.hpp"

namespace aode::arith {

// (a+bi)^2 = c+di needs a^2 = (c + |z|)/2 with |z| = sqrt(c^2+d^2) in Q,
// then b = d/(2a); pure-real inputs split by sign instead.
std::optional<Gaussian> Gaussian::sqrt_exact() const {
  if (is_zero()) return Gaussian(Rational(0));
  const Rational& c = re_;
  const Rational& d = im_;
  if (d.is_zero()) {
    if (!c.is_negative()) {
      auto s = c.sqrt_exact();
      if (!s) return std::nullopt;
      return Gaussian(*s);
    }
    auto s = (-c).sqrt_exact();
    if (!s) return std::nullopt;
    return Gaussian(Rational(0), *s);
  }
  auto n = norm().sqrt_exact();
  if (!n) return std::nullopt;
  Rational a2 = (c + *n) / Rational(2);
  auto a = a2.sqrt_exact();
  if (!a || a->is_zero()) return std::nullopt;
  Rational b = d / (Rational(2) * *a);
  Gaussian r(*a, b);
  if (r * r == *this) return r;
  return std::nullopt;
}

}  // namespace aode::arith

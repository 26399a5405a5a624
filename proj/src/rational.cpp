#include "aode/rational.hpp"

namespace aode::arith {

Rational::Rational(long n, long d) {
  check(d != 0, Errc::division_by_zero, "rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational::Rational(mpz_class n, mpz_class d) {
  check(sgn(d) != 0, Errc::division_by_zero, "rational with zero denominator");
  v_ = mpq_class(std::move(n)) / mpq_class(std::move(d));
}

Rational Rational::from_string(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) fail(Errc::syntax, "bad rational literal: " + s);
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::operator/(const Rational& o) const {
  check(!o.is_zero(), Errc::division_by_zero, "division by zero");
  return Rational(mpq_class(v_ / o.v_));
}

Rational Rational::inv() const {
  check(!is_zero(), Errc::division_by_zero, "inverse of zero");
  return Rational(mpq_class(1 / v_));
}

Rational Rational::pow_u(unsigned long e) const {
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), e);
  return Rational(std::move(r));  // canonical input stays canonical under powering
}

std::optional<Rational> Rational::sqrt_exact() const {
  if (is_negative()) return std::nullopt;
  mpz_class n = v_.get_num(), d = v_.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(rn, rd);
}

Rational Rational::gcd(const Rational& a, const Rational& b) {
  if (a.is_zero()) return b.abs();
  if (b.is_zero()) return a.abs();
  mpz_class gn, gd;
  mpz_gcd(gn.get_mpz_t(), a.numerator().get_mpz_t(), b.numerator().get_mpz_t());
  mpz_lcm(gd.get_mpz_t(), a.denominator().get_mpz_t(), b.denominator().get_mpz_t());
  return Rational(gn, gd);
}

std::vector<mpz_class> divisors(const mpz_class& n) {
  icheck(sgn(n) != 0, "divisor enumeration of zero");
  mpz_class a = ::abs(n);
  // 10^18 keeps trial division around 1e9 steps at the extreme; desk-scale
  // inputs are far below, and failing loudly beats silently missing roots.
  check(mpz_sizeinbase(a.get_mpz_t(), 10) <= 18, Errc::unsupported,
        "constant term too large for integer root enumeration");
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      small.push_back(d);
      if (d * d != a) large.push_back(a / d);
    }
  }
  for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
  return small;
}

}  // namespace aode::arith

#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "aode/error.hpp"

namespace aode::poly {

/// Exponent vector with trailing zeros trimmed, so a monomial is meaningful
/// in every table that extends the one it was built for.
class Monomial {
 public:
  Monomial() = default;  // the monomial 1

  static Monomial var(std::size_t i, std::uint32_t p = 1);

  std::uint32_t exp(std::size_t i) const { return i < e_.size() ? e_[i] : 0; }
  std::size_t width() const { return e_.size(); }  // 1 + largest var index present
  bool is_one() const { return e_.empty(); }
  std::uint64_t total_degree() const;

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial divided_by(const Monomial& o) const;  // pre: o.divides(*this)
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& o) const;

  /// Canonical container order (variable-wise lexicographic); unrelated to the
  /// Groebner-facing monomial orders below.
  auto operator<=>(const Monomial& o) const { return e_ <=> o.e_; }
  bool operator==(const Monomial& o) const { return e_ == o.e_; }

 private:
  std::vector<std::uint32_t> e_;
  void trim();
};

/// Term-order for division and Groebner computations. Comparisons only scan
/// stored exponents, so they are stable when a table grows at the end.
class MonomialOrder {
 public:
  enum class Kind { degrevlex, lex, elimination };

  static MonomialOrder degrevlex() { return MonomialOrder(Kind::degrevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  /// Block order eliminating variables [0, split): degrevlex on the first
  /// block decides first, degrevlex on the rest breaks ties.
  static MonomialOrder elimination(std::size_t split) { return MonomialOrder(Kind::elimination, split); }

  bool less(const Monomial& a, const Monomial& b) const;
  bool equal_under(const Monomial& a, const Monomial& b) const { return a == b; }
  Kind kind() const { return kind_; }

 private:
  MonomialOrder(Kind k, std::size_t s) : kind_(k), split_(s) {}
  Kind kind_;
  std::size_t split_;
};

}  // namespace aode::poly

#pragma once

#include <optional>

#include "aode/mpoly.hpp"
#include "aode/rational.hpp"

namespace aode::poly {

using QPoly = MPoly<arith::Rational>;

/// gcd of all coefficients as rationals (0 for the zero polynomial).
arith::Rational rational_content(const QPoly& p);

/// p divided by its content, sign-normalized so the canonically largest
/// monomial has positive coefficient. Integer coefficients with overall gcd 1.
QPoly primitive_part(const QPoly& p);

/// a / b when the division is exact, nullopt otherwise. b nonzero.
std::optional<QPoly> exact_divide(const QPoly& a, const QPoly& b);

/// Primitive positive-lead gcd via content/primitive-part recursion and a
/// primitive pseudo-remainder sequence in the highest present variable.
QPoly qgcd(QPoly a, QPoly b);

}  // namespace aode::poly

#pragma once

#include <string>

#include "aode/field.hpp"
#include "aode/mpoly.hpp"
#include "aode/render.hpp"

namespace aode::poly {

/// Polynomial with coefficients in the active field, used both for
/// differential polynomials (variables x, y, y', ...) and for jet ideals
/// (variables c_0, c_1, ...).
using MultiPoly = MPoly<arith::FieldElement>;

std::string render_multipoly(const MultiPoly& p);

MultiPoly mp_constant(const TablePtr& table, const arith::FieldElement& c);
MultiPoly mp_variable(const TablePtr& table, std::size_t idx,
                      const arith::FieldContext& ctx, std::uint32_t pow = 1);

}  // namespace aode::poly

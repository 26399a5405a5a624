#pragma once

#include <vector>

#include "aode/multipoly.hpp"

namespace aode::poly {

/// All integer roots of a nonzero univariate polynomial over the active
/// field, sorted ascending. The polynomial must use only variable 0 of its
/// table. Complete: rational root bounds are applied per Q-basis component,
/// so no integer root is missed whatever the field.
std::vector<long> integer_roots(const MultiPoly& p);

}  // namespace aode::poly

#pragma once

#include <vector>

#include "aode/multipoly.hpp"

namespace aode::poly {

/// Reduced Groebner basis of the ideal generated by `gens` under `ord`:
/// monic, pairwise tail-reduced, sorted by leading monomial ascending.
/// Deterministic for a given input and order.
std::vector<MultiPoly> groebner(std::vector<MultiPoly> gens, const MonomialOrder& ord);

/// Remainder of p on multivariate division by `basis` under `ord`. Canonical
/// when `basis` is a Groebner basis for `ord`.
MultiPoly normal_form(MultiPoly p, const std::vector<MultiPoly>& basis,
                      const MonomialOrder& ord);

/// True iff the reduced basis is {1}, i.e. the ideal is the whole ring.
bool contains_one(const std::vector<MultiPoly>& basis);

}  // namespace aode::poly

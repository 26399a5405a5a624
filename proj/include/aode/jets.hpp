#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aode/diffpoly.hpp"

namespace aode::jets {

using arith::FieldContext;
using arith::FieldElement;
using poly::MultiPoly;
using poly::TablePtr;

/// Table of series-coefficient indeterminates c_0 .. c_{count-1}.
TablePtr coeff_table(int count);
std::string coeff_name(int k);

/// Evaluation at the origin: x -> 0 and y^(j) -> c_j symbolically.
MultiPoly origin_jet_poly(const MultiPoly& f, const TablePtr& ctable);

/// Evaluation at the origin with concrete jet values.
FieldElement origin_jet_eval(const MultiPoly& f, std::span<const FieldElement> c,
                             const FieldContext& ctx);

/// Generators F^(k)(0, c_0, ..., c_{n+k}) for k = 0..m, over coeff_table(n+m+1).
std::vector<MultiPoly> jet_ideal(diff::DerivativeCache& f, int m);

/// Membership in the zero set of the m-th jet ideal, checked generator by
/// generator; needs at least n+m+1 coefficients.
bool in_jet_variety(diff::DerivativeCache& f, std::span<const FieldElement> c, int m);

/// Entries of the m-th separant matrix at the origin jet, zeros dropped and
/// duplicates removed, over coeff_table(n+m+1).
std::vector<MultiPoly> separant_ideal(const diff::DiffPoly& f, int m);

/// True when every entry of the j-th separant matrix vanishes at the first
/// n+j+1 values of c.
bool matrix_vanishes_at(const diff::DiffPoly& f, int j, std::span<const FieldElement> c);

/// Local vanishing order test at a tuple of length exactly n+m+1 (m implied
/// by the length): matrices below m vanish at c, the m-th does not, and the
/// jet conditions through level 2m hold after substituting c.
bool check_local_vanishing(diff::DerivativeCache& f, std::span<const FieldElement> c);

/// Smallest i <= m whose separant matrix does not vanish at the prefix of c.
/// The caller guarantees such an i exists (an exhausted scan is an internal
/// error, not a user-facing condition).
int minimal_local_order(const diff::DiffPoly& f, int m, std::span<const FieldElement> c);

/// The vanishing order of f at a prefix of c: the unique m (if any) with the
/// lower matrices zero at c_0..c_{n+m}, the m-th matrix nonzero there, and the
/// jet conditions through level 2m satisfied. Returns the order when it exists
/// within the available coefficients.
std::optional<int> detect_local_order(diff::DerivativeCache& f,
                                      std::span<const FieldElement> c);

/// Root data of the generalized separant at a point where f has local
/// vanishing order m: the polynomial S in t, its integer roots above 2m,
/// their count r, and the extension threshold q.
struct RQReport {
  int m = 0;
  MultiPoly separant_poly;  // over the single-variable table ["t"]
  std::vector<long> roots;  // integer roots > 2m, ascending
  int r = 0;
  long q = 0;
};
RQReport rq_values(const diff::DiffPoly& f, std::span<const FieldElement> c, int m);

}  // namespace aode::jets

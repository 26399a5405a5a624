#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aode/groebner.hpp"
#include "aode/jets.hpp"
#include "aode/parser.hpp"

namespace aode::solve {

using arith::FieldContext;
using arith::FieldElement;
using parse::TupleEntry;
using poly::MultiPoly;
using poly::TablePtr;

enum class SolStatus { empty, unique, parametrized };

/// Derivation record kept with a solution: the certified vanishing order m,
/// the local order i actually used, the count r and threshold q of the
/// integer roots of the generalized separant, and the horizon M through
/// which conditions were examined.
struct Provenance {
  int m = 0;
  int i = 0;
  int r = 0;
  long q = 0;
  long M = 0;
};

/// A truncated formal power series solution set at the origin. Entry j of
/// `coeffs` is the value of y^(j)(0) as a polynomial in the free
/// indeterminates (named c~index, collected in `free_table`), reduced to
/// normal form modulo `constraints`; the series reads y = sum c_j/j! x^j.
/// When `status` is empty the coefficient list is absent.
struct SolutionDescription {
  SolStatus status = SolStatus::empty;
  int ell = 0;
  TablePtr free_table;
  std::vector<std::string> free_vars;
  std::vector<MultiPoly> constraints;  // reduced Groebner basis, degrevlex
  std::vector<MultiPoly> coeffs;
  Provenance prov;
  std::string note;
};

/// Classical recursion at a regular point: c has length n+1, F vanishes at
/// the tuple and the separant does not, so every later coefficient is a
/// quotient by the separant value. Errors on either precondition.
SolutionDescription ift_extend(diff::DerivativeCache& f,
                               std::span<const FieldElement> c, int ell);

/// Direct local method at a tuple of length n+m+1 with m implied by the
/// length: equations indexed by the integer roots of the generalized
/// separant become constraints and free indeterminates, everything past the
/// threshold q is determined by division, and the constraint basis decides
/// emptiness. Entries must be concrete and the local vanishing order test
/// must pass at the tuple.
SolutionDescription direct_method_local(diff::DerivativeCache& f,
                                        std::span<const TupleEntry> c, int ell);

/// Upper bound on the global vanishing order when some partial dF/dy^(j) is
/// a nonzero polynomial in x alone: min over such j of deg_x + n - j.
std::optional<int> quasilinear_bound(const diff::DiffPoly& f);

struct VanishingOrderReport {
  std::optional<int> order;  // smallest certified m, when found
  int bound = 0;             // largest m examined
  bool capped = false;       // bound came from quasilinear_bound
};

/// Smallest m <= bound whose combined ideal contains 1. Without an explicit
/// bound the quasilinear cap is used when it applies (making the search
/// exhaustive), else 10.
VanishingOrderReport global_vanishing_order(diff::DerivativeCache& f,
                                            std::optional<int> bound);

/// Extension for a tuple inside the 2m-jet variety of an equation with
/// certified global vanishing order m: runs the direct machinery at the
/// minimal local order i of the tuple with horizon M = max(2m+i, q).
/// Leading entries through index n+i must be concrete; later entries may be
/// placeholders (free) or values (checked against the computed extension).
SolutionDescription extend_global(diff::DerivativeCache& f, int m,
                                  std::span<const TupleEntry> c, int ell);

/// Routing front end: detects a local vanishing order on the concrete
/// prefix and runs the direct machinery; when no order is visible, forces
/// further coefficients through the derivative conditions (each condition
/// must determine its coefficient uniquely or rule every value out) and
/// retries. Reports status empty when a condition has no solution.
SolutionDescription solve_auto(diff::DerivativeCache& f,
                               std::span<const TupleEntry> c, int ell);

/// Back-substitution check, computed independently of the recursion: the
/// truncated series of s, with free indeterminates carried symbolically,
/// satisfies f = 0 through x^(ell-n) modulo the constraint basis.
bool verify_truncation(const diff::DiffPoly& f, const SolutionDescription& s);

}  // namespace aode::solve

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aode/diffpoly.hpp"
#include "aode/multipoly.hpp"

namespace aode::parse {

using arith::FieldContext;
using arith::FieldElement;
using poly::MultiPoly;
using poly::TablePtr;

/// Grammar (whitespace between tokens is ignored):
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := base ('^' uint)?
///   base   := '(' expr ')' | name | number | 'i'
///   name   := letter (letter|digit|'_'|'~')* quote*
///   number := uint ('/' uint)?
/// A '/' between factors requires a nonzero constant divisor. 'i' is only
/// legal over the Gaussian rationals. Implicit multiplication is rejected.
///
/// Names resolve against `table` first, then against the declared field
/// parameters. y', y'', ... and y^(j) are the same name in two spellings;
/// the parenthesized form normalizes to the quote form for j <= 2.
MultiPoly parse_poly(std::string_view text, const TablePtr& table,
                     const FieldContext& ctx);

/// parse_poly over x, y, y', ..., sized to the highest derivative mentioned.
diff::DiffPoly parse_diffpoly(std::string_view text, const FieldContext& ctx);

/// Canonical rendering; parse_diffpoly maps it back to an equal polynomial.
std::string render_diffpoly(const diff::DiffPoly& f);

/// One position of an initial tuple: either a concrete field value or a
/// placeholder (written c_k or c~k, k the position) left indeterminate.
struct TupleEntry {
  std::optional<FieldElement> value;
};

/// Comma-separated tuple, optionally wrapped in parentheses. Entries use the
/// constant fragment of the expression grammar.
std::vector<TupleEntry> parse_tuple(std::string_view text, const FieldContext& ctx);

}  // namespace aode::parse

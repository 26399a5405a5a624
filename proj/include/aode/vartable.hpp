#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aode/error.hpp"

namespace aode::poly {

/// Ordered list of variable names. Immutable after construction; growing a
/// computation's variable set means building an extension (same names plus
/// new ones at the end) and rebinding polynomials, which is cheap because
/// monomials store trimmed exponent vectors.
class VarTable {
 public:
  static std::shared_ptr<const VarTable> make(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const;
  std::optional<std::size_t> index_of(std::string_view n) const;

  /// True when this table's names are an initial segment of `longer`'s.
  bool prefix_of(const VarTable& longer) const;

  std::shared_ptr<const VarTable> extended(std::vector<std::string> more) const;

 private:
  std::vector<std::string> names_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

using TablePtr = std::shared_ptr<const VarTable>;

/// The common refinement of two prefix-compatible tables (the longer one).
TablePtr merge_tables(const TablePtr& a, const TablePtr& b);

}  // namespace aode::poly

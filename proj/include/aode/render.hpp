#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "aode/mpoly.hpp"

namespace aode::poly {

/// How a coefficient prints inside a larger expression. `negative` means the
/// sign was folded out of `text`; `is_one` suppresses "1*"; `needs_parens`
/// wraps composite coefficients before attaching a monomial.
struct CoeffForm {
  std::string text;
  bool negative = false;
  bool is_one = false;
  bool needs_parens = false;
};

std::string render_monomial(const Monomial& m, const VarTable& table);

/// Renders terms in graded order (total degree descending, canonical
/// tie-break) so output is deterministic. `form` maps a coefficient to its
/// CoeffForm.
template <class K, class FormFn>
std::string render_poly(const MPoly<K>& p, FormFn form) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<const Monomial*, const K*>> ts;
  ts.reserve(p.terms().size());
  for (const auto& [m, c] : p.terms()) ts.emplace_back(&m, &c);
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    auto da = a.first->total_degree(), db = b.first->total_degree();
    if (da != db) return da > db;
    return *b.first < *a.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : ts) {
    CoeffForm f = form(*c);
    if (first) {
      if (f.negative) out += "-";
      first = false;
    } else {
      out += f.negative ? " - " : " + ";
    }
    std::string mono = render_monomial(*m, *p.table());
    std::string coeff = f.needs_parens ? "(" + f.text + ")" : f.text;
    if (mono.empty()) {
      out += coeff;
    } else if (f.is_one) {
      out += mono;
    } else {
      out += coeff + "*" + mono;
    }
  }
  return out;
}

}  // namespace aode::poly

#include "aode/multipoly.hpp"

namespace aode::poly {

std::string render_monomial(const Monomial& m, const VarTable& table) {
  std::string s;
  for (std::size_t i = 0; i < m.width(); ++i) {
    std::uint32_t e = m.exp(i);
    if (e == 0) continue;
    if (!s.empty()) s += "*";
    s += table.name(i);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::string render_multipoly(const MultiPoly& p) {
  return render_poly(p, [](const arith::FieldElement& c) { return c.coeff_form(); });
}

MultiPoly mp_constant(const TablePtr& table, const arith::FieldElement& c) {
  return MultiPoly(table, c);
}

MultiPoly mp_variable(const TablePtr& table, std::size_t idx,
                      const arith::FieldContext& ctx, std::uint32_t pow) {
  return MultiPoly::variable(table, idx, ctx.one(), pow);
}

}  // namespace aode::poly

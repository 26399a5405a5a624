#include "aode/jets.hpp"

#include <algorithm>

#include "aode/error.hpp"
#include "aode/introots.hpp"

namespace aode::jets {

std::string coeff_name(int k) { return "c_" + std::to_string(k); }

TablePtr coeff_table(int count) {
  icheck(count >= 0, "negative coefficient count");
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) names.push_back(coeff_name(k));
  return poly::VarTable::make(std::move(names));
}

MultiPoly origin_jet_poly(const MultiPoly& f, const TablePtr& ctable) {
  MultiPoly r(ctable);
  for (const auto& [m, c] : f.terms()) {
    if (m.exp(0) > 0) continue;  // x -> 0
    poly::Monomial shifted;
    for (std::size_t i = 1; i < m.width(); ++i) {
      if (m.exp(i) == 0) continue;
      check(i - 1 < ctable->size(), Errc::insufficient_jet,
            "coefficient table shorter than the jet being evaluated");
      shifted = shifted * poly::Monomial::var(i - 1, m.exp(i));
    }
    r.add_term(shifted, c);
  }
  return r;
}

FieldElement origin_jet_eval(const MultiPoly& f, std::span<const FieldElement> c,
                             const FieldContext& ctx) {
  FieldElement acc = ctx.zero();
  for (const auto& [m, co] : f.terms()) {
    if (m.exp(0) > 0) continue;
    FieldElement t = co;
    for (std::size_t i = 1; i < m.width(); ++i) {
      std::uint32_t e = m.exp(i);
      if (e == 0) continue;
      check(i - 1 < c.size(), Errc::insufficient_jet,
            "jet tuple shorter than the evaluation needs");
      for (std::uint32_t s = 0; s < e; ++s) t = t * c[i - 1];
    }
    acc = acc + t;
  }
  return acc;
}

std::vector<MultiPoly> jet_ideal(diff::DerivativeCache& f, int m) {
  icheck(m >= 0, "negative jet level");
  int n = f.base().order();
  TablePtr ctable = coeff_table(n + m + 1);
  std::vector<MultiPoly> gens;
  for (int k = 0; k <= m; ++k)
    gens.push_back(origin_jet_poly(f.nth(k).poly(), ctable));
  return gens;
}

bool in_jet_variety(diff::DerivativeCache& f, std::span<const FieldElement> c, int m) {
  icheck(m >= 0, "negative jet level");
  int n = f.base().order();
  check(static_cast<int>(c.size()) >= n + 1, Errc::insufficient_jet,
        "jet membership needs at least n+1 coefficients");
  for (int k = 0; k <= m; ++k) {
    // Substitute the available prefix; a generator may shed its trailing
    // coefficients on the way (their multipliers vanish at the tuple).
    MultiPoly jet = origin_jet_poly(f.nth(k).poly(), coeff_table(n + k + 1));
    for (std::size_t i = 0; i < c.size() && i < static_cast<std::size_t>(n + k) + 1; ++i)
      jet = jet.substitute_scalar(i, c[i]);
    check(jet.is_constant(), Errc::insufficient_jet,
          "jet membership needs more coefficients than supplied");
    if (!jet.constant_coeff().is_zero()) return false;
  }
  return true;
}

std::vector<MultiPoly> separant_ideal(const diff::DiffPoly& f, int m) {
  int n = f.order();
  TablePtr ctable = coeff_table(n + m + 1);
  std::vector<MultiPoly> gens;
  for (const auto& row : diff::separant_matrix(f, m)) {
    for (const auto& e : row) {
      if (e.is_zero()) continue;
      MultiPoly g = origin_jet_poly(e, ctable);
      if (g.is_zero()) continue;
      if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
    }
  }
  return gens;
}

bool matrix_vanishes_at(const diff::DiffPoly& f, int j, std::span<const FieldElement> c) {
  int n = f.order();
  check(static_cast<int>(c.size()) >= n + j + 1, Errc::insufficient_jet,
        "matrix evaluation needs n+j+1 coefficients");
  auto prefix = c.first(static_cast<std::size_t>(n + j) + 1);
  for (const auto& row : diff::separant_matrix(f, j))
    for (const auto& e : row)
      if (!origin_jet_eval(e, prefix, f.ctx()).is_zero()) return false;
  return true;
}

bool check_local_vanishing(diff::DerivativeCache& f, std::span<const FieldElement> c) {
  int n = f.base().order();
  check(static_cast<int>(c.size()) >= n + 1, Errc::length_mismatch,
        "local order test needs at least n+1 coefficients");
  int m = static_cast<int>(c.size()) - n - 1;
  for (int i = 0; i < m; ++i)
    if (!matrix_vanishes_at(f.base(), i, c)) return false;
  if (matrix_vanishes_at(f.base(), m, c)) return false;
  // With the lower matrices zero at the prefix, the level-k jet condition
  // only involves c_0..c_{n+floor(k/2)}, so c itself suffices. A leftover
  // symbolic coefficient would contradict that and is flagged as internal.
  for (int k = 0; k <= 2 * m; ++k) {
    MultiPoly jet = origin_jet_poly(f.nth(k).poly(), coeff_table(n + k + 1));
    for (std::size_t i = 0; i < c.size() && i < static_cast<std::size_t>(n + k) + 1; ++i)
      jet = jet.substitute_scalar(i, c[i]);
    icheck(jet.is_constant(), "jet condition depends on coefficients beyond the prefix");
    if (!jet.constant_coeff().is_zero()) return false;
  }
  return true;
}

int minimal_local_order(const diff::DiffPoly& f, int m, std::span<const FieldElement> c) {
  int n = f.order();
  check(static_cast<int>(c.size()) >= n + m + 1, Errc::insufficient_jet,
        "local order scan needs n+m+1 coefficients");
  for (int i = 0; i <= m; ++i)
    if (!matrix_vanishes_at(f, i, c)) return i;
  icheck(false, "no separant matrix up to the global order is nonzero at the tuple");
  return -1;
}

std::optional<int> detect_local_order(diff::DerivativeCache& f,
                                      std::span<const FieldElement> c) {
  int n = f.base().order();
  for (int m = 0; n + m + 1 <= static_cast<int>(c.size()); ++m) {
    if (matrix_vanishes_at(f.base(), m, c)) continue;
    if (check_local_vanishing(f, c.first(static_cast<std::size_t>(n + m) + 1))) return m;
    return std::nullopt;
  }
  return std::nullopt;
}

RQReport rq_values(const diff::DiffPoly& f, std::span<const FieldElement> c, int m) {
  int n = f.order();
  check(static_cast<int>(c.size()) >= n + m + 1, Errc::insufficient_jet,
        "separant evaluation needs n+m+1 coefficients");
  auto prefix = c.first(static_cast<std::size_t>(n + m) + 1);
  diff::GenSeparant gs = diff::gen_separant(f, m);
  TablePtr ttable = poly::VarTable::make({"t"});
  MultiPoly sep(ttable);
  for (std::size_t d = 0; d < gs.t_coeffs.size(); ++d) {
    FieldElement v = origin_jet_eval(gs.t_coeffs[d], prefix, f.ctx());
    if (!v.is_zero()) sep.add_term(poly::Monomial::var(0, static_cast<std::uint32_t>(d)), v);
  }
  check(!sep.is_zero(), Errc::precondition,
        "generalized separant vanishes identically at the tuple; local order does not hold");
  std::vector<long> all = poly::integer_roots(sep);
  std::vector<long> roots;
  for (long r : all)
    if (r > 2 * static_cast<long>(m)) roots.push_back(r);
  RQReport out{m, sep, roots, static_cast<int>(roots.size()),
               roots.empty() ? 2 * static_cast<long>(m) : roots.back()};
  return out;
}

}  // namespace aode::jets

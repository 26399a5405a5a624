#include "aode/solver.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "aode/error.hpp"

namespace aode::solve {

using arith::Rational;
using poly::Monomial;
using poly::MonomialOrder;

namespace {

/// All roots of a univariate condition in variable j over the coefficient
/// field. Exhaustive over the rationals; over the other fields only linear
/// conditions and pure power conditions c^d = v are decided, anything else
/// is reported as unsupported.
std::vector<FieldElement> field_roots(const MultiPoly& g, std::size_t j,
                                      const FieldContext& ctx) {
  std::map<std::uint32_t, FieldElement> a;
  std::uint32_t dmax = 0;
  for (const auto& [e, p] : g.coeffs_in(j)) {
    icheck(p.is_constant(), "root search on a condition in several variables");
    if (p.is_zero()) continue;
    a.emplace(e, p.constant_coeff());
    dmax = std::max(dmax, e);
  }
  icheck(!a.empty() && dmax >= 1, "root search on a constant condition");
  if (dmax == 1) {
    FieldElement a0 = a.count(0) ? a[0] : ctx.zero();
    return {-(a0 / a[1])};
  }
  if (ctx.kind == arith::FieldKind::rational) {
    std::uint32_t val = a.begin()->first;
    std::set<Rational> found;
    if (val > 0) found.insert(Rational(0));
    mpz_class den = 1;
    for (const auto& [e, v] : a) den = lcm(den, v.rational().denominator());
    mpz_class trailing = (a.begin()->second.rational() * Rational(den)).numerator();
    mpz_class lead = (a[dmax].rational() * Rational(den)).numerator();
    for (const mpz_class& p : arith::divisors(trailing))
      for (const mpz_class& qd : arith::divisors(lead))
        for (int sign : {1, -1}) {
          Rational cand(sign * p, qd);
          Rational acc(0);
          for (const auto& [e, v] : a) {
            Rational t = v.rational();
            for (std::uint32_t rep = 0; rep < e; ++rep) t = t * cand;
            acc = acc + t;
          }
          if (acc == Rational(0)) found.insert(cand);
        }
    std::vector<FieldElement> out;
    for (const Rational& r : found) out.emplace_back(r);
    return out;
  }
  if (a.size() <= 2 && a.count(dmax)) {
    FieldElement v = a.count(0) ? -(a[0] / a[dmax]) : ctx.zero();
    if (v.is_zero()) return {ctx.zero()};
    if (dmax == 2) {
      if (auto s = v.sqrt_exact()) return {*s, -*s};
      return {};
    }
  }
  fail(Errc::unsupported,
       "cannot enumerate the roots of this coefficient condition over the "
       "chosen field");
}

/// Decomposition of a jet condition at position idx after substituting the
/// values known so far: the coefficient of c_idx, the part free of every
/// c_j with j >= idx, and a check that nothing else survives.
struct JetSplit {
  MultiPoly sep;
  MultiPoly low;
};

JetSplit split_at(const MultiPoly& jet, const std::vector<MultiPoly>& vals,
                  std::size_t idx, const TablePtr& ftable) {
  std::map<Monomial, MultiPoly> buckets;
  for (const auto& [mo, co] : jet.terms()) {
    Monomial topm;
    MultiPoly prod(ftable, co);
    for (std::size_t v = 0; v < mo.width(); ++v) {
      std::uint32_t e = mo.exp(v);
      if (e == 0) continue;
      if (v < idx) {
        prod = prod * vals[v].pow(e);
      } else {
        topm = topm * Monomial::var(v, e);
      }
    }
    auto it = buckets.find(topm);
    if (it == buckets.end()) {
      buckets.emplace(topm, std::move(prod));
    } else {
      it->second = it->second + prod;
    }
  }
  JetSplit r{MultiPoly(ftable), MultiPoly(ftable)};
  for (auto& [tm, p] : buckets) {
    if (tm.is_one()) {
      r.low = r.low + p;
    } else if (tm == Monomial::var(idx)) {
      r.sep = r.sep + p;
    } else {
      icheck(p.is_zero(), "jet condition keeps a term beyond the split guarantee");
    }
  }
  return r;
}

/// Shared engine behind the local and global extension procedures. The
/// first n+i+1 entries are the concrete certified prefix; every later index
/// gets either a computed value (separant nonzero), a consistency
/// constraint against a supplied value, or a fresh free indeterminate.
SolutionDescription run_core(diff::DerivativeCache& f,
                             std::span<const TupleEntry> entries, int i_local,
                             int m_global, bool global_mode, int ell) {
  const FieldContext& ctx = f.base().ctx();
  int n = f.base().order();
  check(ell >= n + i_local, Errc::usage,
        "truncation order too small for the detected local order");
  std::size_t plen = static_cast<std::size_t>(n + i_local + 1);
  icheck(entries.size() >= plen, "tuple shorter than the certified prefix");
  std::vector<FieldElement> prefix;
  for (std::size_t j = 0; j < plen; ++j) {
    icheck(entries[j].value.has_value(), "certified prefix holds a placeholder");
    prefix.push_back(*entries[j].value);
  }
  jets::RQReport rq = jets::rq_values(f.base(), prefix, i_local);
  long q = rq.q;
  long lastk = std::max<long>(
      {q, static_cast<long>(ell) - n + i_local,
       static_cast<long>(entries.size()) - 1 - n + i_local});
  if (global_mode) lastk = std::max(lastk, 2L * m_global + i_local);

  TablePtr ftable = poly::VarTable::make({});
  std::vector<std::string> fnames;
  auto add_free = [&](long idx) {
    std::string nm = "c~" + std::to_string(idx);
    ftable = ftable->extended({nm});
    fnames.push_back(nm);
    return poly::mp_variable(ftable, ftable->size() - 1, ctx);
  };
  std::vector<MultiPoly> vals;
  for (std::size_t j = 0; j < plen; ++j) vals.emplace_back(ftable, prefix[j]);
  std::vector<MultiPoly> raw;

  for (long k = 2 * i_local + 1; k <= lastk; ++k) {
    std::size_t idx = static_cast<std::size_t>(n + k - i_local);
    MultiPoly jet = jets::origin_jet_poly(
        f.nth(static_cast<int>(k)).poly(),
        jets::coeff_table(static_cast<int>(n + k + 1)));
    JetSplit sp = split_at(jet, vals, idx, ftable);
    icheck(sp.sep.is_constant(),
           "generalized separant value is not constant at the tuple");
    FieldElement s = sp.sep.is_zero() ? ctx.zero() : sp.sep.constant_coeff();
    bool have = idx < entries.size();
    if (!s.is_zero()) {
      MultiPoly value = sp.low.scaled((-s).inv());
      if (have && entries[idx].value) {
        MultiPoly given(ftable, *entries[idx].value);
        MultiPoly d = given - value;
        if (!d.is_zero()) raw.push_back(std::move(d));
        vals.push_back(std::move(given));
      } else if (have) {
        MultiPoly fv = add_free(static_cast<long>(idx));
        raw.push_back(fv - value);
        vals.push_back(std::move(fv));
      } else {
        vals.push_back(std::move(value));
      }
    } else {
      icheck(k <= q && std::binary_search(rq.roots.begin(), rq.roots.end(), k),
             "vanishing separant value at an index off the root list");
      if (!sp.low.is_zero()) raw.push_back(sp.low);
      if (have && entries[idx].value) {
        vals.emplace_back(ftable, *entries[idx].value);
      } else {
        vals.push_back(add_free(static_cast<long>(idx)));
      }
    }
  }

  MonomialOrder ord = MonomialOrder::degrevlex();
  std::vector<MultiPoly> gens;
  gens.reserve(raw.size());
  for (const MultiPoly& c : raw) gens.push_back(c.lifted(ftable));
  std::vector<MultiPoly> basis = poly::groebner(std::move(gens), ord);

  SolutionDescription out;
  out.ell = ell;
  out.free_table = ftable;
  out.free_vars = fnames;
  out.constraints = basis;
  out.prov = {m_global, i_local, rq.r, q,
              global_mode ? std::max(2L * m_global + i_local, q) : q};
  if (poly::contains_one(basis)) {
    out.status = SolStatus::empty;
    out.note = "the constraints admit no common value for the free coefficients";
    return out;
  }
  bool pinned = true;
  for (std::size_t vi = 0; vi < fnames.size(); ++vi) {
    MultiPoly nf =
        poly::normal_form(poly::mp_variable(ftable, vi, ctx), basis, ord);
    if (!nf.is_constant()) pinned = false;
  }
  out.status = pinned ? SolStatus::unique : SolStatus::parametrized;
  icheck(vals.size() >= static_cast<std::size_t>(ell) + 1,
         "recursion stopped before the requested truncation order");
  for (std::size_t j = 0; j <= static_cast<std::size_t>(ell); ++j)
    out.coeffs.push_back(poly::normal_form(vals[j].lifted(ftable), basis, ord));
  return out;
}

SolutionDescription empty_description(int ell, const std::string& note) {
  SolutionDescription out;
  out.status = SolStatus::empty;
  out.ell = ell;
  out.free_table = poly::VarTable::make({});
  out.note = note;
  return out;
}

}  // namespace

SolutionDescription ift_extend(diff::DerivativeCache& f,
                               std::span<const FieldElement> c, int ell) {
  const FieldContext& ctx = f.base().ctx();
  int n = f.base().order();
  check(c.size() == static_cast<std::size_t>(n) + 1, Errc::length_mismatch,
        "the classical recursion needs exactly n+1 coefficients");
  check(ell >= n, Errc::usage, "truncation order below the equation order");
  FieldElement f0 = jets::origin_jet_eval(f.base().poly(), c, ctx);
  check(f0.is_zero(), Errc::precondition,
        "the tuple does not satisfy the equation at the origin");
  FieldElement s = jets::origin_jet_eval(diff::separant(f.base()), c, ctx);
  check(!s.is_zero(), Errc::precondition,
        "the separant vanishes at the tuple; use the direct local method");
  std::vector<FieldElement> vals(c.begin(), c.end());
  for (int k = 1; k <= ell - n; ++k) {
    vals.push_back(ctx.zero());
    FieldElement rest = jets::origin_jet_eval(f.nth(k).poly(), vals, ctx);
    vals.back() = -(rest / s);
  }
  SolutionDescription out;
  out.status = SolStatus::unique;
  out.ell = ell;
  out.free_table = poly::VarTable::make({});
  for (const FieldElement& v : vals) out.coeffs.emplace_back(out.free_table, v);
  return out;
}

SolutionDescription direct_method_local(diff::DerivativeCache& f,
                                        std::span<const TupleEntry> c, int ell) {
  int n = f.base().order();
  check(c.size() >= static_cast<std::size_t>(n) + 1, Errc::length_mismatch,
        "the local method needs at least n+1 coefficients");
  int m = static_cast<int>(c.size()) - n - 1;
  std::vector<FieldElement> cvals;
  for (const TupleEntry& e : c) {
    check(e.value.has_value(), Errc::precondition,
          "the local method needs concrete coefficients");
    cvals.push_back(*e.value);
  }
  if (!jets::in_jet_variety(f, cvals, 2 * m))
    return empty_description(
        ell, "the tuple violates a jet condition at level at most 2m");
  check(jets::check_local_vanishing(f, cvals), Errc::precondition,
        "the tuple does not have the local vanishing order implied by its length");
  return run_core(f, c, m, m, false, ell);
}

std::optional<int> quasilinear_bound(const diff::DiffPoly& f) {
  int n = f.order();
  std::optional<int> best;
  for (int j = 0; j <= n; ++j) {
    MultiPoly aj = diff::partial_y(f, j);
    if (aj.is_zero() || diff::max_derivative_index(aj) >= 0) continue;
    int cand = static_cast<int>(aj.degree_in(0)) + n - j;
    if (!best || cand < *best) best = cand;
  }
  return best;
}

VanishingOrderReport global_vanishing_order(diff::DerivativeCache& f,
                                            std::optional<int> bound) {
  if (bound) check(*bound >= 0, Errc::usage, "negative search bound");
  int n = f.base().order();
  std::optional<int> cap = quasilinear_bound(f.base());
  VanishingOrderReport rep;
  if (cap && (!bound || *cap <= *bound)) {
    rep.bound = *cap;
    rep.capped = true;
  } else {
    rep.bound = bound ? *bound : 10;
  }
  MonomialOrder ord = MonomialOrder::degrevlex();
  for (int m = 0; m <= rep.bound; ++m) {
    TablePtr wide = jets::coeff_table(n + 2 * m + 1);
    std::vector<MultiPoly> gens;
    for (const MultiPoly& g : jets::jet_ideal(f, 2 * m)) gens.push_back(g.lifted(wide));
    for (const MultiPoly& g : jets::separant_ideal(f.base(), m))
      gens.push_back(g.lifted(wide));
    if (poly::contains_one(poly::groebner(std::move(gens), ord))) {
      rep.order = m;
      return rep;
    }
  }
  return rep;
}

SolutionDescription extend_global(diff::DerivativeCache& f, int m,
                                  std::span<const TupleEntry> c, int ell) {
  check(m >= 0, Errc::precondition, "negative vanishing order");
  int n = f.base().order();
  std::vector<FieldElement> p;
  for (const TupleEntry& e : c) {
    if (!e.value) break;
    p.push_back(*e.value);
  }
  check(p.size() >= static_cast<std::size_t>(n) + 1, Errc::precondition,
        "the leading n+1 coefficients must be concrete");
  check(jets::in_jet_variety(f, p, 2 * m), Errc::precondition,
        "the tuple lies outside the 2m-jet variety");
  int i = jets::minimal_local_order(f.base(), m, p);
  std::size_t plen = static_cast<std::size_t>(n + i + 1);
  check(p.size() >= plen, Errc::precondition,
        "not enough concrete coefficients for the minimal local order");
  check(jets::check_local_vanishing(f, std::span(p.data(), plen)),
        Errc::precondition, "the local vanishing order test fails at the tuple");
  return run_core(f, c, i, m, true, ell);
}

SolutionDescription solve_auto(diff::DerivativeCache& f,
                               std::span<const TupleEntry> c, int ell) {
  const FieldContext& ctx = f.base().ctx();
  int n = f.base().order();
  check(c.size() >= static_cast<std::size_t>(n) + 1, Errc::usage,
        "the initial tuple needs at least n+1 coefficients");
  std::vector<FieldElement> p;
  for (const TupleEntry& e : c) {
    if (!e.value) break;
    p.push_back(*e.value);
  }
  check(p.size() >= static_cast<std::size_t>(n) + 1, Errc::usage,
        "the first n+1 coefficients must be concrete values");
  if (std::optional<int> i = jets::detect_local_order(f, p))
    return run_core(f, c, *i, *i, false, ell);

  // No visible local order: push the tuple forward through the derivative
  // conditions, forcing each uniquely determined coefficient, and retry.
  std::vector<std::optional<FieldElement>> known(c.size());
  for (std::size_t j = 0; j < c.size(); ++j) known[j] = c[j].value;
  long capk = std::max<long>(static_cast<long>(ell) + n, 24);
  for (long k = 1; k <= capk; ++k) {
    std::size_t need = static_cast<std::size_t>(n + k + 1);
    if (known.size() < need) known.resize(need);
    MultiPoly g = jets::origin_jet_poly(
        f.nth(static_cast<int>(k)).poly(),
        jets::coeff_table(static_cast<int>(need)));
    for (std::size_t j = 0; j < need; ++j)
      if (known[j]) g = g.substitute_scalar(j, *known[j]);
    if (g.is_zero()) continue;
    std::string where = "derivative condition " + std::to_string(k);
    if (g.is_constant())
      return empty_description(
          ell, where + " is the nonzero constant " + poly::render_multipoly(g));
    std::vector<std::size_t> used;
    for (std::size_t j = 0; j < need; ++j)
      if (g.uses_var(j)) used.push_back(j);
    icheck(!used.empty(), "non-constant condition without variables");
    if (used.size() != 1)
      fail(Errc::unsupported,
           where + " couples several undetermined coefficients; cannot decide "
                   "the extension");
    std::vector<FieldElement> roots = field_roots(g, used[0], ctx);
    if (roots.empty())
      return empty_description(ell, where + " reduces to " +
                                        poly::render_multipoly(g) +
                                        ", which has no zero in the field");
    if (roots.size() != 1)
      fail(Errc::unsupported,
           where + " admits several branches; cannot decide the extension");
    known[used[0]] = roots[0];
    std::vector<FieldElement> grown;
    for (const std::optional<FieldElement>& v : known) {
      if (!v) break;
      grown.push_back(*v);
    }
    if (std::optional<int> i = jets::detect_local_order(f, grown)) {
      std::size_t top = c.size();
      for (std::size_t j = 0; j < known.size(); ++j)
        if (known[j]) top = std::max(top, j + 1);
      std::vector<TupleEntry> ext(top);
      for (std::size_t j = 0; j < top; ++j)
        if (j < known.size()) ext[j].value = known[j];
      return run_core(f, ext, *i, *i, false, ell);
    }
  }
  fail(Errc::unsupported,
       "no local vanishing order emerged within the forcing horizon");
}

bool verify_truncation(const diff::DiffPoly& f, const SolutionDescription& s) {
  check(s.status != SolStatus::empty && !s.coeffs.empty(), Errc::precondition,
        "back-substitution needs a nonempty solution");
  int n = f.order();
  int t_max = s.ell - n;
  check(t_max >= 0, Errc::precondition,
        "truncation order below the equation order");
  check(s.coeffs.size() >= static_cast<std::size_t>(s.ell) + 1,
        Errc::precondition, "coefficient list shorter than the truncation order");
  TablePtr ft = s.free_table ? s.free_table : poly::VarTable::make({});
  MonomialOrder ord = MonomialOrder::degrevlex();

  // Truncated series of each derivative: entry t of ser[j] is the x^t
  // coefficient of y^(j), i.e. c_{t+j}/t!.
  std::vector<std::vector<MultiPoly>> ser(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    mpz_class fac = 1;
    for (int t = 0; t <= t_max; ++t) {
      if (t > 0) fac *= t;
      ser[j].push_back(s.coeffs[static_cast<std::size_t>(t + j)].times_rat(
          Rational(mpz_class(1), fac)));
    }
  }

  auto mul_trunc = [&](const std::vector<MultiPoly>& a,
                       const std::vector<MultiPoly>& b) {
    std::vector<MultiPoly> r(static_cast<std::size_t>(t_max) + 1, MultiPoly(ft));
    for (int t = 0; t <= t_max; ++t)
      for (int u = 0; u <= t; ++u)
        r[t] = r[t] + a[u] * b[t - u];
    return r;
  };

  std::vector<MultiPoly> res(static_cast<std::size_t>(t_max) + 1, MultiPoly(ft));
  for (const auto& [mo, co] : f.poly().terms()) {
    std::uint32_t xe = mo.exp(0);
    if (xe > static_cast<std::uint32_t>(t_max)) continue;
    std::vector<MultiPoly> cur(static_cast<std::size_t>(t_max) + 1, MultiPoly(ft));
    cur[xe] = MultiPoly(ft, co);
    for (int j = 0; j <= n; ++j) {
      std::uint32_t e = mo.exp(static_cast<std::size_t>(1 + j));
      for (std::uint32_t rep = 0; rep < e; ++rep) cur = mul_trunc(cur, ser[j]);
    }
    for (int t = 0; t <= t_max; ++t) res[t] = res[t] + cur[t];
  }
  for (const MultiPoly& r : res)
    if (!poly::normal_form(r, s.constraints, ord).is_zero()) return false;
  return true;
}

}  // namespace aode::solve

#include "aode/diffpoly.hpp"

#include <utility>

#include "aode/error.hpp"

namespace aode::diff {

std::string derivative_name(int j) {
  if (j == 0) return "y";
  if (j == 1) return "y'";
  if (j == 2) return "y''";
  return "y^(" + std::to_string(j) + ")";
}

TablePtr diff_table(int max_order) {
  icheck(max_order >= 0, "negative derivative order");
  std::vector<std::string> names{"x"};
  for (int j = 0; j <= max_order; ++j) names.push_back(derivative_name(j));
  return poly::VarTable::make(std::move(names));
}

int max_derivative_index(const MultiPoly& p) {
  auto w = p.support_max();
  if (!w || *w == 0) return -1;
  for (std::size_t i = *w;; --i) {
    if (i >= 1 && p.uses_var(i)) return static_cast<int>(i) - 1;
    if (i == 0) break;
  }
  return -1;
}

DiffPoly::DiffPoly(MultiPoly p, FieldContext ctx)
    : p_(std::move(p)), ctx_(std::move(ctx)), order_(max_derivative_index(p_)) {
  check(order_ >= 0, Errc::y_free, "equation involves no derivative of y");
  // Keep the table at exactly x, y, ..., y^(order); trimmed monomials carry
  // over unchanged between prefix-compatible tables.
  TablePtr canon = diff_table(order_);
  if (p_.table()->size() != canon->size()) {
    icheck(canon->prefix_of(*p_.table()), "differential polynomial on a foreign table");
    MultiPoly packed(canon);
    for (const auto& [m, c] : p_.terms()) packed.add_term(m, c);
    p_ = std::move(packed);
  }
}

MultiPoly total_derivative_poly(const MultiPoly& p, const FieldContext& ctx) {
  int d = max_derivative_index(p);
  TablePtr table = poly::merge_tables(p.table(), diff_table(d + 1));
  MultiPoly lp = p.lifted(table);
  MultiPoly r = poly::partial_derivative(lp, 0);
  for (int j = 0; j <= d; ++j) {
    MultiPoly next = poly::mp_variable(table, static_cast<std::size_t>(j) + 2, ctx);
    r = r + next * poly::partial_derivative(lp, static_cast<std::size_t>(j) + 1);
  }
  return r;
}

MultiPoly nth_total_derivative(MultiPoly p, int k, const FieldContext& ctx) {
  icheck(k >= 0, "negative derivative count");
  for (int s = 0; s < k; ++s) p = total_derivative_poly(p, ctx);
  return p;
}

DiffPoly total_derivative(const DiffPoly& f) {
  return DiffPoly(total_derivative_poly(f.poly(), f.ctx()), f.ctx());
}

MultiPoly partial_y(const DiffPoly& f, int j) {
  if (j < 0 || j > f.order()) return MultiPoly(f.poly().table());
  return poly::partial_derivative(f.poly(), static_cast<std::size_t>(j) + 1);
}

MultiPoly separant(const DiffPoly& f) { return partial_y(f, f.order()); }

const DiffPoly& DerivativeCache::nth(int k) {
  icheck(k >= 0, "negative derivative index");
  std::lock_guard<std::mutex> lock(mu_);
  while (static_cast<int>(ds_.size()) <= k) ds_.push_back(total_derivative(ds_.back()));
  return ds_[static_cast<std::size_t>(k)];
}

Rational binom_rat(long k, int j) {
  icheck(j >= 0, "negative binomial index");
  Rational r(1);
  for (int s = 0; s < j; ++s) r *= Rational(k - s, static_cast<long>(s) + 1);
  return r;
}

std::vector<Rational> binom_t(int j) {
  icheck(j >= 0, "negative binomial index");
  // expand t (t-1) ... (t-j+1) / j!
  std::vector<Rational> c{Rational(1)};
  for (int s = 0; s < j; ++s) {
    std::vector<Rational> next(c.size() + 1, Rational(0));
    for (std::size_t d = 0; d < c.size(); ++d) {
      next[d + 1] += c[d];
      next[d] += c[d] * Rational(-s);
    }
    c = std::move(next);
  }
  Rational inv_fact(1);
  for (int s = 1; s <= j; ++s) inv_fact *= Rational(1, s);
  for (auto& x : c) x *= inv_fact;
  return c;
}

GenSeparant gen_separant(const DiffPoly& f, int i) {
  icheck(i >= 0, "negative separant index");
  int n = f.order();
  TablePtr table = poly::merge_tables(f.poly().table(), diff_table(n + i));
  GenSeparant out;
  out.table = table;
  out.t_coeffs.assign(static_cast<std::size_t>(i) + 1, MultiPoly(table));
  for (int j = 0; j <= i; ++j) {
    MultiPoly fj = partial_y(f, n - i + j);
    if (fj.is_zero()) continue;
    MultiPoly dj = nth_total_derivative(fj, j, f.ctx()).lifted(table);
    auto bt = binom_t(j);
    for (std::size_t d = 0; d < bt.size(); ++d) {
      if (bt[d].is_zero()) continue;
      out.t_coeffs[d] = out.t_coeffs[d] + dj.times_rat(bt[d]);
    }
  }
  return out;
}

MultiPoly gen_separant_at(const DiffPoly& f, int i, long k) {
  icheck(i >= 0, "negative separant index");
  int n = f.order();
  TablePtr table = poly::merge_tables(f.poly().table(), diff_table(n + i));
  MultiPoly s(table);
  for (int j = 0; j <= i; ++j) {
    Rational b = binom_rat(k, j);
    if (b.is_zero()) continue;
    MultiPoly fj = partial_y(f, n - i + j);
    if (fj.is_zero()) continue;
    s = s + nth_total_derivative(fj, j, f.ctx()).lifted(table).times_rat(b);
  }
  return s;
}

std::vector<std::vector<MultiPoly>> separant_matrix(const DiffPoly& f, int m) {
  icheck(m >= 0, "negative matrix size");
  int n = f.order();
  TablePtr table = poly::merge_tables(f.poly().table(), diff_table(n + m));
  std::vector<std::vector<MultiPoly>> rows;
  for (int j = 0; j <= m; ++j) {
    std::vector<MultiPoly> row;
    for (int l = 0; l <= m; ++l) {
      MultiPoly fj = partial_y(f, n - l + j);
      if (fj.is_zero()) {
        row.emplace_back(table);
      } else {
        row.push_back(nth_total_derivative(fj, j, f.ctx()).lifted(table));
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

// Sum over i <= m of S_{F,k,i} * y^(n+k-i), on the table of F^(k).
MultiPoly separant_sum_form(DerivativeCache& f, int k, int m) {
  int n = f.base().order();
  TablePtr table = f.nth(k).poly().table();
  MultiPoly sum(table);
  for (int i = 0; i <= m; ++i) {
    MultiPoly si = gen_separant_at(f.base(), i, k).lifted(table);
    if (si.is_zero()) continue;
    poly::Monomial y = poly::Monomial::var(static_cast<std::size_t>(1 + n + k - i));
    sum = sum + si.times_term(y, f.base().ctx().one());
  }
  return sum;
}

}  // namespace

MultiPoly remainder(DerivativeCache& f, int k, int m) {
  check(k > 2 * m && m >= 0, Errc::hypothesis,
        "remainder splitting needs k > 2m");
  int n = f.base().order();
  MultiPoly r = f.nth(k).poly() - separant_sum_form(f, k, m);
  icheck(max_derivative_index(r) <= n + k - m - 1,
         "remainder keeps a derivative beyond the guaranteed bound");
  return r;
}

bool matrix_form_check(DerivativeCache& f, int k, int m) {
  check(k > 2 * m && m >= 0, Errc::hypothesis,
        "matrix form splitting needs k > 2m");
  const DiffPoly& base = f.base();
  int n = base.order();
  TablePtr table = f.nth(k).poly().table();
  auto mat = separant_matrix(base, m);
  MultiPoly product(table);
  for (int l = 0; l <= m; ++l) {
    // Row vector of binomials times column l of the matrix.
    MultiPoly entry(table);
    for (int j = 0; j <= m; ++j) {
      Rational b = binom_rat(k, j);
      if (b.is_zero() || mat[j][l].is_zero()) continue;
      entry = entry + mat[j][l].lifted(table).times_rat(b);
    }
    if (entry != gen_separant_at(base, l, k).lifted(table)) return false;
    if (entry.is_zero()) continue;
    poly::Monomial y = poly::Monomial::var(static_cast<std::size_t>(1 + n + k - l));
    product = product + entry.times_term(y, base.ctx().one());
  }
  MultiPoly leftover = f.nth(k).poly() - product;
  return max_derivative_index(leftover) <= n + k - m - 1;
}

}  // namespace aode::diff

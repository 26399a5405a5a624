#pragma once

#include <deque>
#include <mutex>
#include <string>
#include <vector>

#include "aode/multipoly.hpp"

namespace aode::diff {

using arith::FieldContext;
using arith::Rational;
using poly::MultiPoly;
using poly::TablePtr;

/// Variable table for differential polynomials: x at index 0, then the
/// derivatives of y. Index 1 + j holds y^(j).
TablePtr diff_table(int max_order);
std::string derivative_name(int j);

/// Largest j with y^(j) present, or -1 when no derivative of y occurs.
int max_derivative_index(const MultiPoly& p);

/// A differential polynomial in K[x]{y} together with its coefficient field.
/// Must involve at least one derivative of y.
class DiffPoly {
 public:
  DiffPoly(MultiPoly p, FieldContext ctx);
  const MultiPoly& poly() const { return p_; }
  const FieldContext& ctx() const { return ctx_; }
  int order() const { return order_; }

 private:
  MultiPoly p_;
  FieldContext ctx_;
  int order_;
};

/// d/dx on the whole expression, with y^(j) treated as a function of x:
/// D = d/dx + sum_j y^(j+1) d/dy^(j).
MultiPoly total_derivative_poly(const MultiPoly& p, const FieldContext& ctx);
MultiPoly nth_total_derivative(MultiPoly p, int k, const FieldContext& ctx);
DiffPoly total_derivative(const DiffPoly& f);

/// dF/dy^(j); the zero polynomial when j lies outside [0, order].
MultiPoly partial_y(const DiffPoly& f, int j);
MultiPoly separant(const DiffPoly& f);

/// Lazily computed sequence F, F', F'', ... Safe for concurrent nth() calls;
/// the deque keeps references to cached entries stable while it grows.
class DerivativeCache {
 public:
  explicit DerivativeCache(DiffPoly f) { ds_.push_back(std::move(f)); }
  const DiffPoly& base() const { return ds_.front(); }
  const DiffPoly& nth(int k);

 private:
  std::mutex mu_;
  std::deque<DiffPoly> ds_;
};

arith::Rational binom_rat(long k, int j);
std::vector<arith::Rational> binom_t(int j);  // coefficients in t, degree j

/// The i-th generalized separant with symbolic k: a polynomial in t whose
/// coefficients are differential polynomials.
struct GenSeparant {
  std::vector<MultiPoly> t_coeffs;  // t_coeffs[d] multiplies t^d; size i + 1
  TablePtr table;
};
GenSeparant gen_separant(const DiffPoly& f, int i);
MultiPoly gen_separant_at(const DiffPoly& f, int i, long k);

/// Separant matrix rows j = 0..m, cols l = 0..m; entry (j, l) is the j-th
/// total derivative of dF/dy^(n-l+j), zero when the index leaves [0, n].
/// Upper triangular; the top-left block of the next larger matrix is this one.
std::vector<std::vector<MultiPoly>> separant_matrix(const DiffPoly& f, int m);

/// F^(k) minus the sum over i <= m of S_{F,k,i} * y^(n+k-i). Requires k > 2m;
/// the result has no derivative beyond y^(n+k-m-1), which is asserted.
MultiPoly remainder(DerivativeCache& f, int k, int m);

/// Self-test: the row-times-matrix-times-column expansion of F^(k) agrees
/// with the generalized-separant sum, and the leftover term respects the
/// order bound. Requires k > 2m.
bool matrix_form_check(DerivativeCache& f, int k, int m);

}  // namespace aode::diff

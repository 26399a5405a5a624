#include "aode/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "aode/error.hpp"

namespace aode::poly {

using arith::FieldElement;

namespace {

MultiPoly monic(const MultiPoly& p, const MonomialOrder& ord) {
  auto lt = p.leading(ord);
  if (lt.coeff.is_one()) return p;
  return p.scaled(lt.coeff.inv());
}

struct Pair {
  Monomial lcm;
  std::size_t i, j;
};

struct PairLess {
  const MonomialOrder* ord;
  bool operator()(const Pair& a, const Pair& b) const {
    if (ord->less(a.lcm, b.lcm)) return true;
    if (ord->less(b.lcm, a.lcm)) return false;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

}  // namespace

MultiPoly normal_form(MultiPoly p, const std::vector<MultiPoly>& basis,
                      const MonomialOrder& ord) {
  if (basis.empty() || p.is_zero()) return p;
  auto table = p.table();
  for (const auto& g : basis) table = merge_tables(table, g.table());
  p = p.lifted(table);
  MultiPoly rem(table, p.leading(ord).coeff.times_int(0));
  std::vector<MultiPoly::TermRef> lts;
  std::vector<MultiPoly> lifted;
  lts.reserve(basis.size());
  for (const auto& g : basis) {
    lifted.push_back(g.lifted(table));
    lts.push_back(lifted.back().leading(ord));
  }
  while (!p.is_zero()) {
    auto lt = p.leading(ord);
    bool reduced = false;
    for (std::size_t k = 0; k < lifted.size(); ++k) {
      if (!lts[k].mono.divides(lt.mono)) continue;
      Monomial m = lt.mono.divided_by(lts[k].mono);
      FieldElement c = lt.coeff / lts[k].coeff;
      p = p - lifted[k].times_term(m, c);
      reduced = true;
      break;
    }
    if (!reduced) {
      Monomial m = lt.mono;  // copy: the add below erases the referenced node
      FieldElement c = lt.coeff;
      rem.add_term(m, c);
      p.add_term(m, -c);
    }
  }
  return rem;
}

std::vector<MultiPoly> groebner(std::vector<MultiPoly> gens, const MonomialOrder& ord) {
  std::vector<MultiPoly> g;
  TablePtr table;
  for (const auto& p : gens)
    table = table ? merge_tables(table, p.table()) : p.table();
  for (auto& p : gens) {
    if (p.is_zero()) continue;
    g.push_back(monic(p.lifted(table), ord));
  }
  if (g.empty()) return g;

  PairLess less{&ord};
  std::set<Pair, PairLess> pending(less);
  auto lead = [&](std::size_t k) { return g[k].leading(ord).mono; };
  auto queue_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i)
      pending.insert(Pair{Monomial::lcm(lead(i), lead(j)), i, j});
  };
  for (std::size_t j = 1; j < g.size(); ++j) queue_pairs(j);

  while (!pending.empty()) {
    Pair pr = *pending.begin();
    pending.erase(pending.begin());
    Monomial li = lead(pr.i), lj = lead(pr.j);
    if (li.coprime(lj)) continue;
    bool chained = false;
    for (std::size_t k = 0; k < g.size() && !chained; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!lead(k).divides(pr.lcm)) continue;
      Pair a{Monomial::lcm(li, lead(k)), std::min(pr.i, k), std::max(pr.i, k)};
      Pair b{Monomial::lcm(lj, lead(k)), std::min(pr.j, k), std::max(pr.j, k)};
      if (pending.find(a) == pending.end() && pending.find(b) == pending.end())
        chained = true;
    }
    if (chained) continue;
    MultiPoly s = g[pr.i].times_term(pr.lcm.divided_by(li), g[pr.i].leading(ord).coeff.one_like()) -
                  g[pr.j].times_term(pr.lcm.divided_by(lj), g[pr.j].leading(ord).coeff.one_like());
    MultiPoly r = normal_form(std::move(s), g, ord);
    if (r.is_zero()) continue;
    g.push_back(monic(r, ord));
    icheck(g.size() < 20000, "basis growth out of bounds");
    queue_pairs(g.size() - 1);
  }

  // minimal basis: drop elements whose lead is divisible by another lead
  std::vector<MultiPoly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool keep = true;
    Monomial li = lead(i);
    for (std::size_t j = 0; j < g.size() && keep; ++j) {
      if (i == j) continue;
      Monomial lj = lead(j);
      if (lj.divides(li) && (!li.divides(lj) || j < i)) keep = false;
    }
    if (keep) minimal.push_back(g[i]);
  }
  // tail-reduce each element against the others
  std::vector<MultiPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultiPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    MultiPoly r = normal_form(minimal[i], others, ord);
    if (!r.is_zero()) reduced.push_back(monic(r, ord));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const MultiPoly& a, const MultiPoly& b) {
    return ord.less(a.leading(ord).mono, b.leading(ord).mono);
  });
  return reduced;
}

bool contains_one(const std::vector<MultiPoly>& basis) {
  return basis.size() == 1 && basis.front().is_constant() && !basis.front().is_zero();
}

}  // namespace aode::poly

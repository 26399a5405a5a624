#include "aode/vartable.hpp"

#include <algorithm>

#include "aode/monomial.hpp"

namespace aode::poly {

std::shared_ptr<const VarTable> VarTable::make(std::vector<std::string> names) {
  auto t = std::make_shared<VarTable>();
  for (std::size_t i = 0; i < names.size(); ++i) {
    auto [it, fresh] = t->index_.emplace(names[i], i);
    check(fresh, Errc::usage, "duplicate variable name in table");
    (void)it;
  }
  t->names_ = std::move(names);
  return t;
}

const std::string& VarTable::name(std::size_t i) const {
  icheck(i < names_.size(), "variable index out of table");
  return names_[i];
}

std::optional<std::size_t> VarTable::index_of(std::string_view n) const {
  auto it = index_.find(n);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool VarTable::prefix_of(const VarTable& longer) const {
  if (size() > longer.size()) return false;
  for (std::size_t i = 0; i < size(); ++i)
    if (names_[i] != longer.names_[i]) return false;
  return true;
}

std::shared_ptr<const VarTable> VarTable::extended(std::vector<std::string> more) const {
  std::vector<std::string> names = names_;
  for (auto& n : more) names.push_back(std::move(n));
  return make(std::move(names));
}

TablePtr merge_tables(const TablePtr& a, const TablePtr& b) {
  if (a == b) return a;
  if (a->prefix_of(*b)) return b;
  if (b->prefix_of(*a)) return a;
  fail(Errc::incompatible_tables, "polynomials over incompatible variable tables");
}

Monomial Monomial::var(std::size_t i, std::uint32_t p) {
  Monomial m;
  if (p == 0) return m;
  m.e_.assign(i + 1, 0);
  m.e_[i] = p;
  return m;
}

void Monomial::trim() {
  while (!e_.empty() && e_.back() == 0) e_.pop_back();
}

std::uint64_t Monomial::total_degree() const {
  std::uint64_t d = 0;
  for (auto x : e_) d += x;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.e_.resize(std::max(e_.size(), o.e_.size()), 0);
  for (std::size_t i = 0; i < r.e_.size(); ++i) {
    std::uint64_t s = std::uint64_t(exp(i)) + o.exp(i);
    icheck(s <= UINT32_MAX, "exponent overflow");
    r.e_[i] = std::uint32_t(s);
  }
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (e_.size() > o.e_.size()) {
    for (std::size_t i = o.e_.size(); i < e_.size(); ++i)
      if (e_[i] != 0) return false;
  }
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > o.exp(i)) return false;
  return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
  icheck(o.divides(*this), "monomial division not exact");
  Monomial r;
  r.e_ = e_;
  for (std::size_t i = 0; i < o.width(); ++i) r.e_[i] -= o.exp(i);
  r.trim();
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.e_.resize(std::max(a.width(), b.width()), 0);
  for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::max(a.exp(i), b.exp(i));
  r.trim();
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  std::size_t w = std::min(width(), o.width());
  for (std::size_t i = 0; i < w; ++i)
    if (e_[i] != 0 && o.exp(i) != 0) return false;
  return true;
}

namespace {

std::uint64_t block_degree(const Monomial& m, std::size_t lo, std::size_t hi) {
  std::uint64_t d = 0;
  for (std::size_t i = lo; i < std::min<std::size_t>(hi, m.width()); ++i) d += m.exp(i);
  return d;
}

// degrevlex on the variable range [lo, hi): higher total degree wins; on ties
// the larger exponent at the last differing position loses.
int cmp_degrevlex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  std::uint64_t da = block_degree(a, lo, hi), db = block_degree(b, lo, hi);
  if (da != db) return da < db ? -1 : 1;
  std::size_t w = std::min<std::size_t>(hi, std::max(a.width(), b.width()));
  for (std::size_t i = w; i-- > lo;) {
    std::uint32_t ea = a.exp(i), eb = b.exp(i);
    if (ea != eb) return ea > eb ? -1 : 1;
  }
  return 0;
}

int cmp_lex(const Monomial& a, const Monomial& b) {
  std::size_t w = std::max(a.width(), b.width());
  for (std::size_t i = 0; i < w; ++i) {
    std::uint32_t ea = a.exp(i), eb = b.exp(i);
    if (ea != eb) return ea < eb ? -1 : 1;
  }
  return 0;
}

constexpr std::size_t kNoLimit = ~std::size_t(0);

}  // namespace

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::degrevlex:
      return cmp_degrevlex(a, b, 0, kNoLimit) < 0;
    case Kind::lex:
      return cmp_lex(a, b) < 0;
    case Kind::elimination: {
      int c = cmp_degrevlex(a, b, 0, split_);
      if (c != 0) return c < 0;
      return cmp_degrevlex(a, b, split_, kNoLimit) < 0;
    }
  }
  return false;
}

}  // namespace aode::poly

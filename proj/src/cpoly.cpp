#include "witt/cpoly.hpp"

#include <algorithm>

namespace witt {

int expo_cmp_graded(const Expo& a, const Expo& b) noexcept {
  unsigned long da = 0, db = 0;
  for (auto e : a) da += e;
  for (auto e : b) db += e;
  if (da != db) return da < db ? -1 : 1;
  std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t ea = i < a.size() ? a[i] : 0;
    std::uint32_t eb = i < b.size() ? b[i] : 0;
    if (ea != eb) return ea > eb ? -1 : 1;
  }
  return 0;
}

static std::vector<CPoly::Term> normalize_terms(std::vector<CPoly::Term> v) {
  std::sort(v.begin(), v.end(), [](const CPoly::Term& a, const CPoly::Term& b) {
    return expo_cmp_graded(a.first, b.first) < 0;
  });
  std::vector<CPoly::Term> out;
  out.reserve(v.size());
  for (auto& t : v) {
    if (sgn(t.second) == 0) continue;
    if (!out.empty() && expo_cmp_graded(out.back().first, t.first) == 0) {
      out.back().second += t.second;
      if (sgn(out.back().second) == 0) out.pop_back();
    } else {
      out.push_back(std::move(t));
    }
  }
  return out;
}

static Expo padded(const AlgebraPtr& alg, Expo e) {
  std::size_t n = alg ? alg->size() : e.size();
  if (e.size() > n) throw usage_error("CPoly: exponent vector longer than alphabet");
  e.resize(n, 0);
  return e;
}

CPoly CPoly::zero(AlgebraPtr alg) {
  CPoly g;
  g.alg_ = std::move(alg);
  return g;
}

CPoly CPoly::one(AlgebraPtr alg) { return constant(std::move(alg), 1); }

CPoly CPoly::constant(AlgebraPtr alg, Int c) {
  CPoly g;
  g.alg_ = std::move(alg);
  if (sgn(c) != 0)
    g.terms_.emplace_back(Expo(g.alg_ ? g.alg_->size() : 0, 0), std::move(c));
  return g;
}

CPoly CPoly::variable(AlgebraPtr alg, VarId v) {
  if (!alg) throw usage_error("CPoly::variable: null context");
  if (v.index >= alg->size()) throw usage_error("CPoly::variable: index out of range");
  CPoly g;
  g.alg_ = std::move(alg);
  Expo e(g.alg_->size(), 0);
  e[v.index] = 1;
  g.terms_.emplace_back(std::move(e), Int(1));
  return g;
}

CPoly CPoly::from_terms(AlgebraPtr alg, std::vector<Term> terms) {
  CPoly g;
  g.alg_ = std::move(alg);
  for (auto& t : terms) t.first = padded(g.alg_, std::move(t.first));
  g.terms_ = normalize_terms(std::move(terms));
  return g;
}

long CPoly::degree() const noexcept {
  if (terms_.empty()) return -1;
  unsigned long d = 0;
  for (auto e : terms_.back().first) d += e;
  return static_cast<long>(d);
}

CPoly CPoly::operator-() const {
  CPoly g;
  g.alg_ = alg_;
  g.terms_.reserve(terms_.size());
  for (const auto& [e, c] : terms_) g.terms_.emplace_back(e, -c);
  return g;
}

CPoly operator+(const CPoly& a, const CPoly& b) {
  CPoly g;
  g.alg_ = require_same_context(a.alg_, b.alg_, "CPoly +");
  std::vector<CPoly::Term> buf = a.terms_;
  buf.insert(buf.end(), b.terms_.begin(), b.terms_.end());
  return CPoly::from_terms(g.alg_, std::move(buf));
}

CPoly operator-(const CPoly& a, const CPoly& b) { return a + (-b); }

CPoly operator*(const CPoly& a, const CPoly& b) {
  CPoly g;
  g.alg_ = require_same_context(a.alg_, b.alg_, "CPoly *");
  if (a.is_zero() || b.is_zero()) return g;
  std::vector<CPoly::Term> buf;
  buf.reserve(a.term_count() * b.term_count());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Expo e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      buf.emplace_back(std::move(e), ca * cb);
    }
  return CPoly::from_terms(g.alg_, std::move(buf));
}

CPoly operator*(const Int& c, const CPoly& a) {
  CPoly g;
  g.alg_ = a.alg_;
  if (sgn(c) == 0) return g;
  g.terms_.reserve(a.terms_.size());
  for (const auto& [e, ce] : a.terms_) g.terms_.emplace_back(e, c * ce);
  return g;
}

CPoly& CPoly::operator+=(const CPoly& o) { return *this = *this + o; }
CPoly& CPoly::operator-=(const CPoly& o) { return *this = *this - o; }
CPoly& CPoly::operator*=(const CPoly& o) { return *this = *this * o; }

bool operator==(const CPoly& a, const CPoly& b) {
  if (a.alg_ && b.alg_ && !a.alg_->same(*b.alg_)) return false;
  return a.terms_ == b.terms_;
}

CPoly CPoly::pow(unsigned long k) const {
  CPoly result = CPoly::one(alg_);
  if (k == 0) return result;
  CPoly base = *this;
  while (true) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k == 0) break;
    base *= base;
  }
  return result;
}

CPoly CPoly::exact_div_int(const Int& m, const char* what) const {
  CPoly g;
  g.alg_ = alg_;
  g.terms_.reserve(terms_.size());
  for (const auto& [e, c] : terms_) g.terms_.emplace_back(e, exact_div(c, m, what));
  return g;
}

CPoly reindexed(const CPoly& g, AlgebraPtr target) {
  if (!g.algebra()) return g;
  if (!target) throw usage_error("reindexed: null target context");
  const auto& src = *g.algebra();
  std::vector<std::size_t> where(src.size());
  for (std::size_t i = 0; i < src.size(); ++i)
    where[i] = target->var(src.name(VarId{static_cast<std::uint8_t>(i)})).index;
  std::vector<CPoly::Term> buf;
  buf.reserve(g.term_count());
  for (const auto& [e, c] : g.terms()) {
    Expo out(target->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) out[where[i]] += e[i];
    buf.emplace_back(std::move(out), c);
  }
  return CPoly::from_terms(std::move(target), std::move(buf));
}

CPoly commutative_image(const NcPoly& f) {
  std::size_t n = f.algebra() ? f.algebra()->size() : 0;
  std::vector<CPoly::Term> buf;
  buf.reserve(f.term_count());
  for (const auto& [w, c] : f.terms()) {
    Expo e(n, 0);
    for (auto letter : w) ++e[letter];
    buf.emplace_back(std::move(e), c);
  }
  return CPoly::from_terms(f.algebra(), std::move(buf));
}

NcPoly sorted_lift(const CPoly& g, std::span<const VarId> precedence) {
  const AlgebraPtr& alg = g.algebra();
  std::size_t n = alg ? alg->size() : 0;
  std::vector<std::uint8_t> order(n);
  if (precedence.empty()) {
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<std::uint8_t>(i);
  } else {
    if (precedence.size() != n)
      throw usage_error("sorted_lift: precedence must list every variable once");
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      std::uint8_t ix = precedence[i].index;
      if (ix >= n || seen[ix])
        throw usage_error("sorted_lift: precedence must be a permutation");
      seen[ix] = true;
      order[i] = ix;
    }
  }
  std::vector<NcPoly::Term> buf;
  buf.reserve(g.term_count());
  for (const auto& [e, c] : g.terms()) {
    Word w;
    for (auto ix : order)
      for (std::uint32_t k = 0; k < e[ix]; ++k) w.push_back(ix);
    buf.emplace_back(std::move(w), c);
  }
  return NcPoly::from_terms(alg, std::move(buf));
}

}  // namespace witt

#include "witt/ncpoly.hpp"

#include <algorithm>

namespace witt {

static std::vector<NcPoly::Term> normalize_terms(std::vector<NcPoly::Term> v) {
  std::sort(v.begin(), v.end(), [](const NcPoly::Term& a, const NcPoly::Term& b) {
    return word_cmp_deglex(a.first, b.first) < 0;
  });
  std::vector<NcPoly::Term> out;
  out.reserve(v.size());
  for (auto& t : v) {
    if (sgn(t.second) == 0) continue;
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
      if (sgn(out.back().second) == 0) out.pop_back();
    } else {
      out.push_back(std::move(t));
    }
  }
  return out;
}

static void check_letters(const AlgebraPtr& alg, const std::vector<NcPoly::Term>& terms) {
  if (!alg) {
    if (!terms.empty()) throw usage_error("NcPoly: terms require a context");
    return;
  }
  for (const auto& [w, c] : terms)
    for (auto letter : w)
      if (letter >= alg->size())
        throw usage_error("NcPoly: word letter outside the context alphabet");
}

NcPoly NcPoly::zero(AlgebraPtr alg) {
  NcPoly f;
  f.alg_ = std::move(alg);
  return f;
}

NcPoly NcPoly::one(AlgebraPtr alg) { return constant(std::move(alg), 1); }

NcPoly NcPoly::constant(AlgebraPtr alg, Int c) {
  NcPoly f;
  f.alg_ = std::move(alg);
  if (sgn(c) != 0) f.terms_.emplace_back(Word{}, std::move(c));
  return f;
}

NcPoly NcPoly::variable(AlgebraPtr alg, VarId v) {
  if (!alg) throw usage_error("NcPoly::variable: null context");
  if (v.index >= alg->size()) throw usage_error("NcPoly::variable: index out of range");
  NcPoly f;
  f.alg_ = std::move(alg);
  f.terms_.emplace_back(Word{v.index}, Int(1));
  return f;
}

NcPoly NcPoly::monomial(AlgebraPtr alg, Word w, Int c) {
  NcPoly f;
  f.alg_ = std::move(alg);
  if (sgn(c) != 0) f.terms_.emplace_back(std::move(w), std::move(c));
  check_letters(f.alg_, f.terms_);
  return f;
}

NcPoly NcPoly::from_terms(AlgebraPtr alg, std::vector<Term> terms) {
  NcPoly f;
  f.alg_ = std::move(alg);
  f.terms_ = normalize_terms(std::move(terms));
  check_letters(f.alg_, f.terms_);
  return f;
}

long NcPoly::degree() const noexcept {
  if (terms_.empty()) return -1;
  return static_cast<long>(terms_.back().first.size());
}

Int NcPoly::coeff(const Word& w) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                             [](const Term& t, const Word& key) {
                               return word_cmp_deglex(t.first, key) < 0;
                             });
  if (it != terms_.end() && it->first == w) return it->second;
  return Int(0);
}

NcPoly NcPoly::operator-() const {
  NcPoly f;
  f.alg_ = alg_;
  f.terms_.reserve(terms_.size());
  for (const auto& [w, c] : terms_) f.terms_.emplace_back(w, -c);
  return f;
}

// Linear merge of two sorted term lists.
static std::vector<NcPoly::Term> merge_terms(const std::vector<NcPoly::Term>& a,
                                             const std::vector<NcPoly::Term>& b,
                                             bool subtract) {
  std::vector<NcPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int cmp = word_cmp_deglex(a[i].first, b[j].first);
    if (cmp < 0) {
      out.push_back(a[i++]);
    } else if (cmp > 0) {
      out.emplace_back(b[j].first, subtract ? Int(-b[j].second) : b[j].second);
      ++j;
    } else {
      Int c = subtract ? Int(a[i].second - b[j].second) : Int(a[i].second + b[j].second);
      if (sgn(c) != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j)
    out.emplace_back(b[j].first, subtract ? Int(-b[j].second) : b[j].second);
  return out;
}

NcPoly operator+(const NcPoly& a, const NcPoly& b) {
  NcPoly f;
  f.alg_ = require_same_context(a.alg_, b.alg_, "NcPoly +");
  f.terms_ = merge_terms(a.terms_, b.terms_, false);
  return f;
}

NcPoly operator-(const NcPoly& a, const NcPoly& b) {
  NcPoly f;
  f.alg_ = require_same_context(a.alg_, b.alg_, "NcPoly -");
  f.terms_ = merge_terms(a.terms_, b.terms_, true);
  return f;
}

NcPoly mul(const NcPoly& a, const NcPoly& b, std::size_t max_terms) {
  NcPoly f;
  f.alg_ = require_same_context(a.alg_, b.alg_, "NcPoly *");
  if (a.is_zero() || b.is_zero()) return f;
  std::size_t cross = a.term_count() * b.term_count();
  if (max_terms != NcPoly::unlimited && cross > max_terms)
    throw resource_limit_error("product would exceed the word-count guard (" +
                               std::to_string(cross) + " cross terms)");
  std::vector<NcPoly::Term> buf;
  buf.reserve(cross);
  for (const auto& [u, cu] : a.terms())
    for (const auto& [v, cv] : b.terms())
      buf.emplace_back(word_concat(u, v), cu * cv);
  return NcPoly::from_terms(f.alg_, std::move(buf));
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
  return mul(a, b, NcPoly::unlimited);
}

NcPoly operator*(const Int& c, const NcPoly& a) {
  NcPoly f;
  f.alg_ = a.alg_;
  if (sgn(c) == 0) return f;
  f.terms_.reserve(a.terms_.size());
  for (const auto& [w, cw] : a.terms_) f.terms_.emplace_back(w, c * cw);
  return f;
}

NcPoly operator*(const NcPoly& a, const Int& c) { return c * a; }

NcPoly& NcPoly::operator+=(const NcPoly& o) { return *this = *this + o; }
NcPoly& NcPoly::operator-=(const NcPoly& o) { return *this = *this - o; }
NcPoly& NcPoly::operator*=(const NcPoly& o) { return *this = *this * o; }
NcPoly& NcPoly::operator*=(const Int& c) { return *this = c * *this; }

bool operator==(const NcPoly& a, const NcPoly& b) {
  if (a.alg_ && b.alg_ && !a.alg_->same(*b.alg_)) return false;
  return a.terms_ == b.terms_;
}

NcPoly NcPoly::pow(unsigned long k, std::size_t max_terms) const {
  NcPoly result = NcPoly::one(alg_);
  if (k == 0) return result;
  NcPoly base = *this;
  while (true) {
    if (k & 1) result = mul(result, base, max_terms);
    k >>= 1;
    if (k == 0) break;
    base = mul(base, base, max_terms);
  }
  return result;
}

NcPoly substitute(const NcPoly& f, const std::map<VarId, NcPoly>& assignment,
                  std::size_t max_terms) {
  AlgebraPtr target;
  for (const auto& [v, img] : assignment) {
    (void)v;
    target = require_same_context(target, img.algebra(), "substitute");
  }
  std::vector<const NcPoly*> images(f.algebra() ? f.algebra()->size() : 0, nullptr);
  for (const auto& [v, img] : assignment)
    if (v.index < images.size()) images[v.index] = &img;
  for (const auto& [w, c] : f.terms())
    for (auto letter : w)
      if (!images[letter])
        throw usage_error("substitute: variable '" + f.algebra()->name(VarId{letter}) +
                          "' has no image");
  if (!target) target = f.algebra();

  std::vector<NcPoly::Term> buf;
  for (const auto& [w, c] : f.terms()) {
    NcPoly prod = NcPoly::constant(target, c);
    for (auto letter : w) {
      prod = mul(prod, *images[letter], max_terms);
      if (prod.is_zero()) break;
    }
    buf.insert(buf.end(), prod.terms().begin(), prod.terms().end());
  }
  return NcPoly::from_terms(target, std::move(buf));
}

}  // namespace witt

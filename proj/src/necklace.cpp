#include "witt/necklace.hpp"

#include <algorithm>

namespace witt {

Word canonical_rotation(const Word& w) {
  const std::size_t n = w.size();
  if (n <= 1) return w;
  // Two candidate start positions race letter-by-letter around the circle.
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    std::uint8_t a = w[(i + k) % n];
    std::uint8_t b = w[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b)
      i += k + 1;
    else
      j += k + 1;
    if (i == j) ++j;
    k = 0;
  }
  std::size_t start = std::min(i, j);
  Word out;
  out.reserve(n);
  for (std::size_t t = 0; t < n; ++t) out.push_back(w[(start + t) % n]);
  return out;
}

static std::vector<NecklacePoly::Term> normalize_terms(
    std::vector<NecklacePoly::Term> v) {
  std::sort(v.begin(), v.end(),
            [](const NecklacePoly::Term& a, const NecklacePoly::Term& b) {
              return word_cmp_deglex(a.first, b.first) < 0;
            });
  std::vector<NecklacePoly::Term> out;
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

NecklacePoly NecklacePoly::zero(AlgebraPtr alg) {
  NecklacePoly g;
  g.alg_ = std::move(alg);
  return g;
}

NecklacePoly NecklacePoly::from_terms(AlgebraPtr alg, std::vector<Term> terms) {
  NecklacePoly g;
  g.alg_ = std::move(alg);
  for (auto& t : terms) t.first = canonical_rotation(t.first);
  g.terms_ = normalize_terms(std::move(terms));
  return g;
}

Int NecklacePoly::coeff(const Necklace& n) const {
  for (const auto& [w, c] : terms_)
    if (w == n.word()) return c;
  return Int(0);
}

NecklacePoly NecklacePoly::operator-() const {
  NecklacePoly g;
  g.alg_ = alg_;
  g.terms_.reserve(terms_.size());
  for (const auto& [w, c] : terms_) g.terms_.emplace_back(w, -c);
  return g;
}

NecklacePoly operator+(const NecklacePoly& a, const NecklacePoly& b) {
  NecklacePoly g;
  g.alg_ = require_same_context(a.alg_, b.alg_, "NecklacePoly +");
  std::vector<NecklacePoly::Term> buf = a.terms_;
  buf.insert(buf.end(), b.terms_.begin(), b.terms_.end());
  g.terms_ = normalize_terms(std::move(buf));
  return g;
}

NecklacePoly operator-(const NecklacePoly& a, const NecklacePoly& b) {
  return a + (-b);
}

NecklacePoly operator*(const Int& c, const NecklacePoly& a) {
  NecklacePoly g;
  g.alg_ = a.alg_;
  if (sgn(c) == 0) return g;
  g.terms_.reserve(a.terms_.size());
  for (const auto& [w, cw] : a.terms_) g.terms_.emplace_back(w, c * cw);
  return g;
}

NecklacePoly& NecklacePoly::operator+=(const NecklacePoly& o) {
  return *this = *this + o;
}
NecklacePoly& NecklacePoly::operator-=(const NecklacePoly& o) {
  return *this = *this - o;
}

bool operator==(const NecklacePoly& a, const NecklacePoly& b) {
  if (a.alg_ && b.alg_ && !a.alg_->same(*b.alg_)) return false;
  return a.terms_ == b.terms_;
}

NecklacePoly NecklacePoly::exact_div_int(const Int& m, const char* what) const {
  NecklacePoly g;
  g.alg_ = alg_;
  g.terms_.reserve(terms_.size());
  for (const auto& [w, c] : terms_) g.terms_.emplace_back(w, exact_div(c, m, what));
  return g;
}

NecklacePoly project(const NcPoly& f) {
  std::vector<NecklacePoly::Term> buf(f.terms().begin(), f.terms().end());
  return NecklacePoly::from_terms(f.algebra(), std::move(buf));
}

bool is_commutator_sum(const NcPoly& f) { return project(f).is_zero(); }

}  // namespace witt

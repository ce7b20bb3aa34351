#pragma once

#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "witt/algebra.hpp"
#include "witt/bigint.hpp"

namespace witt {

// Element of the free associative ring on the context's variables: a finite
// integer combination of words. Terms are kept sorted in the graded word
// order with no zero coefficients, so representation equality is value
// equality. Operations never mutate their arguments.
class NcPoly {
 public:
  using Term = std::pair<Word, Int>;
  static constexpr std::size_t unlimited = std::numeric_limits<std::size_t>::max();

  // A detached zero; it adopts the context of whatever it meets.
  NcPoly() = default;

  static NcPoly zero(AlgebraPtr alg);
  static NcPoly one(AlgebraPtr alg);
  static NcPoly constant(AlgebraPtr alg, Int c);
  static NcPoly variable(AlgebraPtr alg, VarId v);
  static NcPoly monomial(AlgebraPtr alg, Word w, Int c);
  // Sorts, merges duplicate words, drops zeros.
  static NcPoly from_terms(AlgebraPtr alg, std::vector<Term> terms);

  const AlgebraPtr& algebra() const noexcept { return alg_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  long degree() const noexcept;  // max word length; -1 for the zero value
  Int coeff(const Word& w) const;

  NcPoly operator-() const;
  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  NcPoly& operator*=(const NcPoly& o);
  NcPoly& operator*=(const Int& c);

  friend NcPoly operator+(const NcPoly& a, const NcPoly& b);
  friend NcPoly operator-(const NcPoly& a, const NcPoly& b);
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
  friend NcPoly mul(const NcPoly& a, const NcPoly& b, std::size_t max_terms);
  friend NcPoly operator*(const Int& c, const NcPoly& a);
  friend NcPoly operator*(const NcPoly& a, const Int& c);
  friend bool operator==(const NcPoly& a, const NcPoly& b);
  friend bool operator!=(const NcPoly& a, const NcPoly& b) { return !(a == b); }

  // k-fold product by binary powering; pow(0) is 1. max_terms bounds the
  // term count of every intermediate product (resource_limit_error).
  NcPoly pow(unsigned long k, std::size_t max_terms = unlimited) const;

 private:
  AlgebraPtr alg_;
  std::vector<Term> terms_;
};

// Product with a word-count guard on the result.
NcPoly mul(const NcPoly& a, const NcPoly& b, std::size_t max_terms);

// Word-wise ring morphism determined by variable images. Every variable
// occurring in f must be assigned; all images must share one context, which
// becomes the context of the result.
NcPoly substitute(const NcPoly& f, const std::map<VarId, NcPoly>& assignment,
                  std::size_t max_terms = NcPoly::unlimited);

}  // namespace witt

#pragma once

#include <utility>
#include <vector>

#include "witt/ncpoly.hpp"

namespace witt {

// Lexicographically least rotation of w (linear-time two-cursor scan).
// Rotations have equal length, so this is also least in the graded order.
Word canonical_rotation(const Word& w);

// A cyclic word: the rotation class of a word, stored canonically.
class Necklace {
 public:
  explicit Necklace(const Word& w) : w_(canonical_rotation(w)) {}
  const Word& word() const noexcept { return w_; }
  friend bool operator==(const Necklace& a, const Necklace& b) { return a.w_ == b.w_; }
  friend bool operator<(const Necklace& a, const Necklace& b) {
    return word_cmp_deglex(a.w_, b.w_) < 0;
  }

 private:
  Word w_;
};

// Element of the quotient of the free ring by the *additive span* of
// commutators fg - gf: a free integer module on cyclic words. Distinct from
// the commutative shadow, which quotients by the commutator ideal.
class NecklacePoly {
 public:
  using Term = std::pair<Word, Int>;  // keys are canonical rotations

  NecklacePoly() = default;

  static NecklacePoly zero(AlgebraPtr alg);
  // Canonicalizes keys, merges, drops zeros.
  static NecklacePoly from_terms(AlgebraPtr alg, std::vector<Term> terms);

  const AlgebraPtr& algebra() const noexcept { return alg_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  Int coeff(const Necklace& n) const;

  NecklacePoly operator-() const;
  NecklacePoly& operator+=(const NecklacePoly& o);
  NecklacePoly& operator-=(const NecklacePoly& o);

  friend NecklacePoly operator+(const NecklacePoly& a, const NecklacePoly& b);
  friend NecklacePoly operator-(const NecklacePoly& a, const NecklacePoly& b);
  friend NecklacePoly operator*(const Int& c, const NecklacePoly& a);
  friend bool operator==(const NecklacePoly& a, const NecklacePoly& b);
  friend bool operator!=(const NecklacePoly& a, const NecklacePoly& b) {
    return !(a == b);
  }

  // Divides every coefficient exactly by m (logic_error when inexact).
  NecklacePoly exact_div_int(const Int& m, const char* what) const;

 private:
  AlgebraPtr alg_;
  std::vector<Term> terms_;
};

// Additive projection onto the cyclic-word quotient: each word goes to its
// rotation class. Kills exactly the combinations of commutators.
NecklacePoly project(const NcPoly& f);

// Whether f lies in the additive span of commutators fg - gf.
bool is_commutator_sum(const NcPoly& f);

}  // namespace witt

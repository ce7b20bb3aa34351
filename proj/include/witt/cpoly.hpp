#pragma once

#include <span>
#include <utility>
#include <vector>

#include "witt/ncpoly.hpp"

namespace witt {

// Exponent vector with one slot per context variable.
using Expo = boost::container::small_vector<std::uint32_t, 8>;

// Graded order on exponent vectors: lower total degree first; within a degree
// the variable of smallest index with differing exponent decides, larger
// exponent first (so X^2*Y precedes X*Y^2).
int expo_cmp_graded(const Expo& a, const Expo& b) noexcept;

// Element of the commutative polynomial ring on the context's variables —
// the image of the free ring under letter-sorting. This is the quotient by
// the two-sided *ideal* generated by commutators, a genuinely different (and
// much smaller) quotient than the cyclic-word module, which divides only by
// the additive span of commutators.
class CPoly {
 public:
  using Term = std::pair<Expo, Int>;

  CPoly() = default;

  static CPoly zero(AlgebraPtr alg);
  static CPoly one(AlgebraPtr alg);
  static CPoly constant(AlgebraPtr alg, Int c);
  static CPoly variable(AlgebraPtr alg, VarId v);
  static CPoly from_terms(AlgebraPtr alg, std::vector<Term> terms);

  const AlgebraPtr& algebra() const noexcept { return alg_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  long degree() const noexcept;

  CPoly operator-() const;
  CPoly& operator+=(const CPoly& o);
  CPoly& operator-=(const CPoly& o);
  CPoly& operator*=(const CPoly& o);

  friend CPoly operator+(const CPoly& a, const CPoly& b);
  friend CPoly operator-(const CPoly& a, const CPoly& b);
  friend CPoly operator*(const CPoly& a, const CPoly& b);
  friend CPoly operator*(const Int& c, const CPoly& a);
  friend bool operator==(const CPoly& a, const CPoly& b);
  friend bool operator!=(const CPoly& a, const CPoly& b) { return !(a == b); }

  CPoly pow(unsigned long k) const;
  // Divides every coefficient exactly by m (logic_error when inexact).
  CPoly exact_div_int(const Int& m, const char* what = "CPoly::exact_div_int") const;

 private:
  AlgebraPtr alg_;
  std::vector<Term> terms_;
};

// Restates g over an algebra with the same names in a different order.
CPoly reindexed(const CPoly& g, AlgebraPtr target);

// Letter-sorting ring morphism onto the commutative shadow.
CPoly commutative_image(const NcPoly& f);

// Sends each commutative monomial to the word listing its variables in
// non-decreasing precedence; a section of commutative_image. The default
// precedence is ascending variable index; a custom precedence must be a
// permutation of all variables.
NcPoly sorted_lift(const CPoly& g, std::span<const VarId> precedence = {});

}  // namespace witt

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "witt/necklace.hpp"
#include "witt/ncpoly.hpp"

namespace witt {

// Prime, truncation level and ambient algebra shared by the coordinate
// operations. The structural identities need an odd prime; p = 2 is accepted
// only behind the explicit opt-in flag (anti-symmetry then fails by design).
class WittContext {
 public:
  WittContext(unsigned p, unsigned level, AlgebraPtr alg,
              bool allow_even_prime = false);

  unsigned p() const noexcept { return p_; }
  unsigned level() const noexcept { return level_; }
  const AlgebraPtr& algebra() const noexcept { return alg_; }
  bool even_prime_allowed() const noexcept { return allow2_; }
  const Int& p_int() const noexcept { return p_int_; }
  // p^e for use as a power exponent, with an overflow guard.
  unsigned long p_pow(unsigned e) const;

 private:
  unsigned p_ = 0;
  unsigned level_ = 0;
  AlgebraPtr alg_;
  bool allow2_ = false;
  Int p_int_;
};

// The multiplicative lift of a: coordinates (a, a^p, ..., a^{p^level}).
std::vector<NcPoly> teichmuller(const NcPoly& a, const WittContext& ctx);

// Shift-and-scale-by-p: (v_0, ..., v_level) -> (0, p v_0, ..., p v_{level-1}).
// This is the shift that matches the multiplicative-lift coordinates.
std::vector<NcPoly> verschiebung_scaled(std::span<const NcPoly> v,
                                        const WittContext& ctx);

// Truncated coordinate tuple (a_0, ..., a_level) in the component-wise model.
class WittCoords {
 public:
  WittCoords() = default;
  explicit WittCoords(std::vector<NcPoly> coords);
  static WittCoords zero(const WittContext& ctx);

  std::size_t size() const noexcept { return c_.size(); }
  unsigned level() const noexcept {
    return c_.empty() ? 0 : static_cast<unsigned>(c_.size() - 1);
  }
  const NcPoly& operator[](std::size_t i) const { return c_.at(i); }
  const std::vector<NcPoly>& coords() const noexcept { return c_; }
  AlgebraPtr algebra() const;

  friend bool operator==(const WittCoords& a, const WittCoords& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const WittCoords& a, const WittCoords& b) {
    return !(a == b);
  }

 private:
  std::vector<NcPoly> c_;
};

// (a, 0, ..., 0): the multiplicative lift in the component-wise model.
WittCoords teichmuller_coords(const NcPoly& a, const WittContext& ctx);

// Pure right shift (a_0, ..., a_level) -> (0, a_0, ..., a_{level-1}).
WittCoords verschiebung_shift(const WittCoords& v);

struct FormalTerm {
  Int coeff;
  unsigned shift = 0;  // how many scaled shifts wrap the lift
  NcPoly base;
};

// Finite formal combination  sum_j  c_j * V^{shift_j} <base_j>  of shifted
// multiplicative lifts, evaluated coordinate-wise on demand.
class FormalXElement {
 public:
  FormalXElement() = default;
  // Terms with zero coefficient or zero base are dropped.
  FormalXElement& add_term(Int coeff, unsigned shift, NcPoly base);
  static FormalXElement lift_of(NcPoly base);

  const std::vector<FormalTerm>& terms() const noexcept { return terms_; }

  friend FormalXElement operator+(const FormalXElement& a, const FormalXElement& b);
  FormalXElement operator-() const;

 private:
  std::vector<FormalTerm> terms_;
};

// Coordinates of a formal combination:  component n of c * V^s <a>  is
// 0 for n < s and c * p^s * a^{p^{n-s}} otherwise.
std::vector<NcPoly> evaluate_formal(const FormalXElement& e, const WittContext& ctx);

// Ghost coordinates live in the cyclic-word quotient.
struct GhostVector {
  std::vector<NecklacePoly> components;
  friend bool operator==(const GhostVector&, const GhostVector&) = default;
};

// w_n = class of  sum_{i<=n} p^i a_i^{p^{n-i}}.
GhostVector ghost_of_coords(const WittCoords& v, const WittContext& ctx);

// Largest n <= level such that v could be an n-fold scaled shift: coordinates
// below n vanish and every coefficient is divisible by p^n. nullopt for the
// zero sequence (no finite obstruction).
std::optional<unsigned> divisibility_obstruction(std::span<const NcPoly> v,
                                                const WittContext& ctx);

}  // namespace witt

#pragma once

#include <json.hpp>

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "witt/cpoly.hpp"
#include "witt/ghost.hpp"

namespace witt {

// Universal addition/subtraction law at one prime and truncation level.
//
//   s_n, d_n  — sum/difference coordinate polynomials in X0..XN, Y0..YN;
//   r_n, e_n  — their single-lift specializations in X, Y
//               (all higher coordinates sent to 0).
//
// The commutative s_comm/d_comm are the classical coordinate laws, produced
// by solving the ghost equations exactly over the integers. The
// non-commutative s/d are fixed by the same ghost recursion carried out in
// the cyclic-word quotient: at each level the defect is projected to cyclic
// words, divided exactly by p^n there, and each class is represented by its
// canonical rotation. That choice commutativizes back to s_comm/d_comm and
// is the one that makes the ghost identities hold with no commutativity
// assumptions. (A naive letter-sorted lift of s_comm_n fails ghost
// additivity in the quotient: at p = 3 from depth 2 on, and for p >= 5
// already at depth 1, where one shadow monomial spreads over several
// cyclic classes.)
struct WittPolySet {
  unsigned p = 0;
  unsigned level = 0;
  std::vector<std::string> variable_order;  // lifted names, precedence order
  AlgebraPtr lifted_alg;                    // variables: variable_order
  AlgebraPtr pair_alg;                      // variables: X, Y
  std::vector<CPoly> s_comm, d_comm;        // over lifted_alg
  std::vector<NcPoly> s, d;                 // over lifted_alg
  std::vector<NcPoly> r, e;                 // over pair_alg
};

// Classical coordinate laws by exact ghost recursion; every division by p^n
// is checked exact (logic_error otherwise).
std::pair<std::vector<CPoly>, std::vector<CPoly>> gen_commutative_witt_polys(
    unsigned p, unsigned level);

// Builds the full set from the commutative laws. `order`, when nonempty,
// permutes the lifted variable names ("X0","Y0",...,"XN","YN") and controls
// both tie-breaking in canonical rotations and the sorted lift; the default
// is the interleaved order X0 < Y0 < ... < XN < YN. max_terms guards
// intermediate expansion sizes.
WittPolySet lift_witt_polys(unsigned p, std::span<const CPoly> s_comm,
                            std::span<const CPoly> d_comm,
                            std::vector<std::string> order = {},
                            std::size_t max_terms = NcPoly::unlimited);

// gen + lift in one step.
WittPolySet make_witt_poly_set(unsigned p, unsigned level,
                               std::vector<std::string> order = {},
                               std::size_t max_terms = NcPoly::unlimited);

// Coordinate-wise sum/difference: component n is s_n (resp. d_n) evaluated
// at the coordinates of a and b. Sizes must match and fit the set's level.
WittCoords witt_add(const WittCoords& a, const WittCoords& b,
                    const WittPolySet& polys);
WittCoords witt_sub(const WittCoords& a, const WittCoords& b,
                    const WittPolySet& polys);

// Checks, in the cyclic-word quotient, that the single-lift correction
// polynomials repair the sum and difference of two multiplicative lifts:
// for every n <= ctx.level,
//   ghost_n(x) + ghost_n(y) = ghost_n of (x+y, r_1(x,y), ..., r_n(x,y))
// and the same for subtraction with (x-y, e_1(x,y), ...).
bool verify_witt_relation(const NcPoly& x, const NcPoly& y,
                          const WittPolySet& polys, const WittContext& ctx);

// Serialized form: {schema, version, p, N, variable_order, s, d, r, e} with
// polynomials in the text grammar. The commutative laws are not stored; they
// are re-derived and re-checked when reading.
nlohmann::ordered_json to_json(const WittPolySet& set);
WittPolySet witt_poly_set_from_json(const nlohmann::json& j);

}  // namespace witt

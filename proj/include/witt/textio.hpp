#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "witt/cpoly.hpp"
#include "witt/ghost.hpp"
#include "witt/ncpoly.hpp"
#include "witt/necklace.hpp"

namespace witt {

// Text form of a free-algebra element:
//   poly    :=  [sign] term (('+'|'-') term)*
//   term    :=  integer | [integer '*'] factor ('*' factor)*
//   factor  :=  varname ['^' positive-integer]
//   varname :=  uppercase letter, then letters/digits/underscores
// '*' is always explicit; a bare integer is a constant term. Printing uses
// the same grammar with fully spelled-out words ("X*X*Y", never "X^2*Y").
std::string to_string(const NcPoly& f);
NcPoly parse_ncpoly(std::string_view text, AlgebraPtr alg);

// Commutative values print with exponents compressed ("X0^2*Y0").
std::string to_string(const CPoly& g);

// Cyclic classes print as bracketed cycles: "3*[XXY] - [XY]"; the class of
// the empty word is "[1]".
std::string to_string(const NecklacePoly& g);

// Formal combinations of shifted lifts:
//   formal :=  [sign] fterm (('+'|'-') fterm)*
//   fterm  :=  [integer ['*']] ['V' '^' integer] 'T' '(' poly ')'
// e.g. "T(X+Y) + T(-X) + T(-Y) + V^1 T(Z)". 'T' and 'V' are markers at this
// level; inside the parentheses they would denote ordinary variables.
FormalXElement parse_formal(std::string_view text, AlgebraPtr alg);

// Variable names appearing in a poly or formal text, in first-appearance
// order, skipping the formal markers. A convenience for building contexts.
std::vector<std::string> scan_variable_names(std::string_view text);

std::ostream& operator<<(std::ostream& os, const NcPoly& f);
std::ostream& operator<<(std::ostream& os, const CPoly& g);
std::ostream& operator<<(std::ostream& os, const NecklacePoly& g);

}  // namespace witt

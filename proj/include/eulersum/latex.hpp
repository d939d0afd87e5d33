#pragma once

// LaTeX in the catalog style:
//   \frac{1}{8}\left( -1\psi(2,1/2) +2\gamma\psi(1,1/2) +2\psi(0,1/2)\psi(1,1/2)\right)
// A positive rational prefactor is pulled out so the bracket holds coprime
// integers. Terms are grouped by psi argument (1/2, 1/3, 2/3, 1/4, ...) and,
// within a group, by weight: psi^(i), then gamma psi^(i-1), then products.

#include <string>

#include "eulersum/symbolic.hpp"

namespace eulersum {

std::string emit_latex(const SymbolicExpression& e);

/// Parses emitted LaTeX back to canonical form. Also accepts the catalog's
/// line-break markup (\right. \nonumber \\ &\left. \hspace{1em}), signed
/// prefactors such as \frac{-1}{6} and repeated factors. Throws ParseError.
SymbolicExpression parse_latex(const std::string& text);

}  // namespace eulersum

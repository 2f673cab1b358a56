#pragma once

#include "silt/algebra.hpp"

namespace silt::fixtures {

/// Path algebra of 1 -> 2 -> 3 with arrows a, b.
AlgebraPresentation a3(Field f = Field::rationals());
/// Cyclic quiver 1 -> 2 -> 3 -> 1 (x1, x2, x3) with all length-4 paths zero.
AlgebraPresentation n3(Field f = Field::rationals());
/// 1 <-> 2 with arrows a: 1->2, b: 2->1 and aba = bab = 0.
AlgebraPresentation k2(Field f = Field::rationals());
/// 1 <-> 2 with all paths of length 2 zero.
AlgebraPresentation sn22(Field f = Field::rationals());
/// Kronecker quiver 1 => 2 with arrows a, b.
AlgebraPresentation kronecker(Field f = Field::rationals());
/// Oriented 3-cycle without relations (infinite dimensional).
AlgebraPresentation free_cycle(Field f = Field::rationals());

/// Monomial relation given by a word of arrow names.
Relation monomial(const Quiver& q, const std::vector<std::string>& word, const Field& f);

}  // namespace silt::fixtures

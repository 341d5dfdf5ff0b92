#pragma once

#include "oddref/lweight.hpp"

namespace oddref {

/// q-character of the irreducible Y(gl(1|1))-module L(z):
///   sum over J in {1..k} of [z * (phi_J(u - s_1)/phi_J(u), phi_J(u - s_1)/phi_J(u))]
/// where phi is the coprime numerator of z_1/z_2. Subsets giving the same l-weight
/// (repeated roots of phi) accumulate multiplicity. Throws WrongRank unless m = n = 1.
QChar qchar_gl11(const LWeight& z);

/// True when phi has a repeated root, so distinct subsets J collide in qchar_gl11.
bool qchar_gl11_has_collisions(const LWeight& z);

/// The same module's q-character over the swapped parity sequence, computed by peeling
/// off irreducible characters from a varpi-maximal term downwards.
/// Throws NegativeMultiplicity if q is not a genuine character.
QChar qchar_reflect_gl11(const QChar& q);

/// Sum of multiplicities.
std::int64_t qchar_dim(const QChar& q);

/// Term maximising s_1 * zeta_{1,1}; ties go to the first term in QChar order.
/// Requires a nonempty character.
const LWeight& varpi_maximal_term(const QChar& q);

}  // namespace oddref

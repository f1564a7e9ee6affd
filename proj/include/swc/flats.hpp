#pragma once

#include <vector>

#include "swc/quadruple.hpp"

namespace swc {

using Flat = std::vector<int>;  // sorted positions

// F(V(gens)): all positions whose root lies in the span of the roots at the
// given positions. Exact rational span membership.
Flat flat_of_subspace(const Quadruple& X, const std::vector<int>& generators);

bool is_flat(const Quadruple& X, const Flat& F);

// Deduplicated { F(V(J)) : J subset of the face }, sorted; every entry
// satisfies F = F(V(F n I)). Includes the empty flat, and [n] when X is
// irreducible.
std::vector<Flat> irreducible_flats(const Quadruple& X);

// Order-preserving bijection b_F as a vector: b_F(F[k]) = k+1.
int face_index(const Flat& F, int pos);

// The quadruple X_F on the sub-root system of the flat, realized by the
// beta_F vectors inside X's coordinates. Throws NotAFlat when F is not
// closed, NotCrystallographicPair when the sub-Gram data is not integral.
Quadruple induced_quadruple(const Quadruple& X, const Flat& F);

// All irreducible flats F' with V(F) + V(F') = V_X and V(F) n V(F') = 0.
std::vector<Flat> complements(const Quadruple& X, const Flat& F);

}  // namespace swc

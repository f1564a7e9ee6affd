#pragma once

#include <cstddef>
#include <map>

#include "swc/category.hpp"

namespace swc {

// Formal sum over canonical isomorphism classes with coefficients in any
// commutative ring; all checks here are exact integer identities, so the
// default scalar is a plain integer. No zero coefficients are stored.
template <typename Scalar>
using FormalSum = std::map<ClassKey, Scalar>;

using HallElement = FormalSum<long long>;
using TensorPair = std::pair<ClassKey, ClassKey>;
using TensorElement = std::map<TensorPair, long long>;

std::size_t default_budget();

HallElement hall_class(const Quadruple& X);
HallElement hall_zero_class();

// Bilinear extension of [X] . [Y] = [X (+) Y].
HallElement hall_product(const HallElement& a, const HallElement& b);

// Delta[X] = sum over admissible sequences (F, F-perp) of [X_F] (x) [X_{F-perp}].
TensorElement hall_coproduct(const Quadruple& X);
TensorElement hall_coproduct(const HallElement& a);

long long counit(const HallElement& a);
HallElement unit(long long coefficient);

// (Delta (x) id) Delta = (id (x) Delta) Delta as multisets of tensor
// triples, together with the unique-completion property of the two nested
// decomposition diagrams.
bool coassociativity_check(const Quadruple& X, std::size_t budget = default_budget());

// Delta(xy) = Delta(x) Delta(y) with componentwise tensor product.
bool bialgebra_compat_check(const Quadruple& X, const Quadruple& Y,
                            std::size_t budget = default_budget());

int class_degree(const ClassKey& key);

}  // namespace swc

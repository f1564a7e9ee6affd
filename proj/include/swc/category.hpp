#pragma once

#include <map>
#include <utility>
#include <vector>

#include "swc/flats.hpp"

namespace swc {

// A morphism X -> Y is a pair of irreducible flats (F1 of X, F2 of Y) whose
// induced quadruples are equivalent. The position bijection gamma realizing
// the equivalence is cached for composition; the morphism itself is the pair.
struct Morphism {
  Quadruple source, target;
  Flat f1, f2;
  std::map<int, int> gamma;  // f1 -> f2
};

bool same_morphism(const Morphism& a, const Morphism& b);

// Builds the morphism, validating that both flats are flats and that the
// induced quadruples are equivalent; gamma is derived from the canonical
// position maps (deterministic).
Morphism make_morphism(const Quadruple& X, const Quadruple& Y, const Flat& F1, const Flat& F2);

bool morphism_exists(const Quadruple& X, const Quadruple& Y, const Flat& F1, const Flat& F2);

// All morphisms X -> Y.
std::vector<Morphism> morphism_set(const Quadruple& X, const Quadruple& Y);

Morphism identity_morphism(const Quadruple& X);
Morphism zero_morphism(const Quadruple& X, const Quadruple& Y);
Morphism canonical_embedding(const Quadruple& X, const Flat& F);   // X_F -> X
Morphism canonical_retraction(const Quadruple& X, const Flat& F);  // X -> X_F

Morphism compose(const Morphism& g, const Morphism& f);  // g o f

bool is_mono(const Morphism& f);
bool is_epi(const Morphism& f);
bool is_iso(const Morphism& f);

struct AdmissibleSequence {
  Flat sub;   // F
  Flat quot;  // a complement of F
};

// All (F, F-perp) pairs with F irreducible and F-perp a complement.
std::vector<AdmissibleSequence> admissible_sequences(const Quadruple& X);

// Pushout of (A >-> B, A ->> C) in the root-independent subcategory:
// D = B_{f((I_B \ J) u H)}. Returns (C >-> D, B ->> D).
std::pair<Morphism, Morphism> pushout_in_D(const Morphism& f, const Morphism& g);

// Pullback of (B ->> D, C >-> D): A = B_{f(H u (I_B \ J'))}.
// Returns (A >-> B, A ->> C).
std::pair<Morphism, Morphism> pullback_in_D(const Morphism& k, const Morphism& h);

// Rank-one irreducible flats containing exactly one traversing position,
// together with that position.
std::vector<std::pair<Flat, int>> flippable_flats(const Quadruple& X);

// Replace the folded position i of the flippable flat F by its traversing
// position; same (W, Q, pi), new face.
Quadruple flip(const Quadruple& X, const Flat& F, int i);

}  // namespace swc

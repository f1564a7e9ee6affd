#pragma once

#include <string>

#include "swc/quiver.hpp"

namespace swc {

// Finite-dimensional representation of a tree quiver with one-dimensional
// pieces: the sorted multiset of supports of its indecomposable summands,
// each a connected vertex subset.
struct F1Rep {
  std::vector<std::vector<int>> summands;
  auto operator<=>(const F1Rep&) const = default;

  bool empty() const { return summands.empty(); }
};

using F1Sum = std::map<F1Rep, long long>;

F1Rep make_f1rep(const LabeledQuiver& q, const std::vector<std::vector<int>>& supports);

// Indecomposables = connected subquivers, as full subquivers.
std::vector<LabeledQuiver> indecomposables(const LabeledQuiver& q);

// Sub-multisets of per-summand subrepresentations (deduplicated values).
// A subrepresentation of an indecomposable is a subset of its support closed
// under arrow targets.
std::vector<F1Rep> subrepresentations(const LabeledQuiver& q, const F1Rep& m);

// [A] . [C] = sum over middles K of the number of subrepresentation
// embeddings N of K with N isomorphic to A and K/N isomorphic to C.
F1Sum f1_hall_product(const LabeledQuiver& q, const F1Sum& a, const F1Sum& b);

// A proto-exact sequence sub >-> middle ->> quot, with the embedding data
// recorded per middle summand (aligned with middle.summands).
struct F1Sequence {
  F1Rep sub, middle, quot;
  std::vector<std::vector<int>> sub_supports;
};

struct SummandSequence {
  F1Rep sub_parts;
  std::vector<int> middle;
  F1Rep quot_parts;
};

// Splits the sequence along the middle's summands; throws NotDecomposable if
// the data is inconsistent with the recorded end terms.
std::vector<SummandSequence> decomposition_check(const LabeledQuiver& q, const F1Sequence& seq);

struct PsiReport {
  bool pass = false;
  std::size_t pairs_checked = 0;
  std::vector<std::string> mismatches;
};

// Structure constants of the subquiver Hall product transported through the
// support bijection must match those of the representation Hall product, on
// all pairs with total vertex count at most |I|.
PsiReport psi_iso_check(const Quadruple& X);

// e_i^2 e_j - 2 e_i e_j e_i + e_j e_i^2 = 0 for adjacent vertices of the
// equioriented A_n quiver, commutation for non-adjacent ones.
bool serre_check(int n);

// Commutator of two connected classes; throws if a disconnected class
// survives in the result.
F1Sum primitive_lie_bracket(const LabeledQuiver& q, const F1Rep& a, const F1Rep& b);

LabeledQuiver equioriented_a_n(int n);

}  // namespace swc

#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "swc/coxeter.hpp"

namespace swc {

// Ambient coordinates for a quadruple living inside a parent root system:
// one parent-coordinate vector per generator of the sub-system.
struct Realization {
  CoxeterPtr parent;
  std::vector<IntVec> simples;
};

// (W, Q, pi, I): a word in the generators together with a maximal face of the
// associated subword complex. Positions are 1-based, matching I as a subset
// of [n]. The face invariant (complement reduced and spelling pi) is checked
// on construction.
class Quadruple {
 public:
  CoxeterPtr system;
  Word word;               // letters, 1-based generator indices
  std::vector<int> face;   // sorted positions
  GroupElement pi;
  std::optional<Realization> realization;

  static Quadruple make(CoxeterPtr system, Word word, std::vector<int> face,
                        std::optional<Realization> realization = std::nullopt);
  static Quadruple make_with_pi(CoxeterPtr system, Word word, std::vector<int> face,
                                const Word& pi_word);
  static Quadruple zero_object();

  int n() const { return static_cast<int>(word.size()); }
  int rank() const { return system->rank(); }
  int degree() const { return rank(); }

  bool in_face(int pos) const;

  // r(l) for l in [n], in the system's own simple-root coordinates.
  std::vector<IntVec> root_function() const;
  // Root function pushed through the realization (parent coordinates);
  // requires a realization.
  std::vector<IntVec> realized_root_function() const;

  bool is_irreducible() const;
  bool is_root_independent() const;

  friend bool operator==(const Quadruple& a, const Quadruple& b) {
    return a.word == b.word && a.face == b.face && a.system->same_as(*b.system);
  }
};

struct RootConfiguration {
  std::vector<IntVec> all_roots;       // r(1..n)
  std::vector<IntVec> configuration;   // restriction to the face
};

RootConfiguration root_function(const Quadruple& X);

// All facets of the subword complex of (system, word, pi), i.e. all position
// sets whose complement is a reduced spelling of pi; lexicographic order.
std::vector<std::vector<int>> facets(const CoxeterSystem& sys, const Word& word,
                                     const GroupElement& pi);

Quadruple direct_sum(const Quadruple& X, const Quadruple& Y);

// Canonical form for the equivalence generated by generator reassignment and
// commutation of adjacent distinct commuting letters. Identical adjacent
// letters never swap, so the class of a marked position is the pair
// (letter, occurrence index), which commutation preserves. The canonical
// representative is the lexicographically minimal (Coxeter matrix, word,
// face) over all relabelings, with the word minimized inside its
// commutation class by the greedy normal form.
struct ClassKey {
  std::vector<std::vector<int>> cox;
  std::vector<int> word;
  std::vector<int> face;
  auto operator<=>(const ClassKey&) const = default;
};

struct CanonicalResult {
  ClassKey key;
  std::vector<int> pos_map;  // old position l -> new position pos_map[l-1]
};

CanonicalResult canonical_map(const Quadruple& X);
ClassKey canonical_class(const Quadruple& X);
Quadruple canonical_form(const Quadruple& X);
Quadruple quadruple_from_class(const ClassKey& key);
bool equivalent(const Quadruple& X, const Quadruple& Y);

std::string class_key_to_string(const ClassKey& key);

}  // namespace swc

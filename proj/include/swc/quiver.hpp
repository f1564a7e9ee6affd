#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "swc/category.hpp"

namespace swc {

// Directed graph on integer labels; no loops, no multiple arrows.
struct LabeledQuiver {
  std::vector<int> vertices;                // sorted
  std::set<std::pair<int, int>> arrows;     // (source, target)

  bool has_vertex(int v) const;
  friend bool operator==(const LabeledQuiver& a, const LabeledQuiver& b) {
    return a.vertices == b.vertices && a.arrows == b.arrows;
  }
};

// Vertices I, arrow i -> j iff (i - j) B(r(i), r(j)) > 0.
LabeledQuiver root_configuration_quiver(const Quadruple& X);

// Underlying undirected graph acyclic (forests count).
bool is_tree(const LabeledQuiver& q);

LabeledQuiver induced_subquiver(const LabeledQuiver& q, const std::vector<int>& verts);

// Nonempty connected vertex subsets, each sorted; the list is sorted.
std::vector<std::vector<int>> connected_subsets(const LabeledQuiver& q);

std::vector<std::vector<int>> connected_components(const LabeledQuiver& q,
                                                   const std::vector<int>& verts);

// Reachability order on a tree quiver: a <= b iff there is an arrow path
// from b to a. Built for a fixed vertex set with its induced arrows.
class TreeOrder {
 public:
  TreeOrder(const LabeledQuiver& q, const std::vector<int>& verts);
  bool leq(int a, int b) const;  // a <= b
  const std::vector<int>& verts() const { return verts_; }

 private:
  std::vector<int> verts_;
  std::map<int, std::set<int>> below_;  // b -> { a : a <= b } = reachable from b
};

// J >-> H basic admissible mono: for each a in J the lower ideal of a in H
// is contained in J. Ideals are taken in the induced subquiver on H
// (componentwise for disconnected H). Dually for epis.
bool admissible_mono_check(const LabeledQuiver& q, const std::vector<int>& J,
                           const std::vector<int>& H);
bool admissible_epi_check(const LabeledQuiver& q, const std::vector<int>& K,
                          const std::vector<int>& H);

// All ordered partitions H = J u K with J lower-closed and K upper-closed.
std::vector<std::pair<std::vector<int>, std::vector<int>>> basic_admissible_sequences(
    const LabeledQuiver& q, const std::vector<int>& H);

// Finite disjoint union of full subquivers, stored as the sorted multiset of
// its connected components' vertex sets.
struct SXObject {
  std::vector<std::vector<int>> comps;
  auto operator<=>(const SXObject&) const = default;
};

SXObject make_sx_object(const LabeledQuiver& q, const std::vector<std::vector<int>>& parts);

using SxSum = std::map<SXObject, long long>;
using SxTensor = std::map<std::pair<SXObject, SXObject>, long long>;

// [G1] . [G2] = sum over middles K of the number of admissible proto-exact
// sequences G1 >-> K ->> G2; sequences decompose componentwise, and the
// count is over per-component-instance choices.
SxSum sx_hall_product(const LabeledQuiver& q, const SxSum& a, const SxSum& b);

// All ordered two-part splittings of the component multiset.
SxTensor sx_coproduct(const SXObject& x);

// The unique traversing position partnered with the folded position i.
int partner_position(const Quadruple& X, int i);

// Every neighbour of i in the quiver lies in the reflection interval
// [min(i,i'), max(i,i')], or every neighbour lies outside it.
bool is_special_vertex(const Quadruple& X, int i);

// Flip at a special vertex of an object with longest-element pi in a finite
// group; checks that the new quiver is the reflected-relabeled old one.
std::pair<Quadruple, LabeledQuiver> flip_reflection(const Quadruple& X, int i);

}  // namespace swc

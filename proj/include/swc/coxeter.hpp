#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "swc/linalg.hpp"

namespace swc {

// Crystallographic Coxeter system: Coxeter matrix (0 encodes infinity),
// an integer Cartan realization acting on the root lattice, and a rational
// symmetrizer making d_i A(i,j) a symmetric bilinear form.
//
// All root coordinates are integers in the simple-root basis and all form
// values are exact rationals. Generators are 1-based throughout the API.
class CoxeterSystem {
 public:
  int rank() const { return rank_; }
  // m(i,j); 0 stands for infinity. 1-based.
  int cox(int i, int j) const { return cox_[i - 1][j - 1]; }
  long long cartan(int i, int j) const { return cartan_[i - 1][j - 1]; }
  const Rational& symmetrizer(int i) const { return sym_[i - 1]; }
  const std::vector<std::vector<int>>& cox_matrix() const { return cox_; }
  const std::vector<std::vector<long long>>& cartan_matrix() const { return cartan_; }

  IntVec simple_root(int i) const;
  // s_i(v) = v - (A(i,.) . v) alpha_i
  IntVec reflect(int i, const IntVec& v) const;
  // Reflection orthogonal to an arbitrary root r: v -> v - (2 B(r,v)/B(r,r)) r.
  IntVec reflect_by_root(const IntVec& r, const IntVec& v) const;

  // Symmetrized form B(u,v) = sum u_i d_i A(i,j) v_j.
  Rational bilinear(const IntVec& u, const IntVec& v) const;

  bool finite() const;  // B positive definite

  static CoxeterSystem trivial();
  static CoxeterSystem from_cartan(std::vector<std::vector<long long>> cartan);
  static CoxeterSystem from_coxeter_matrix(
      std::vector<std::vector<int>> cox,
      std::optional<std::vector<std::vector<long long>>> cartan = std::nullopt);
  // A<n>, B<n>, D<n>, affineA2, trivial
  static CoxeterSystem preset(const std::string& name);
  static CoxeterSystem product(const CoxeterSystem& a, const CoxeterSystem& b);
  // Sub-system spanned by realized roots of an ambient system; the given
  // vectors become the simple roots. Throws NotCrystallographicPair when the
  // Gram data does not fit an integer Cartan matrix.
  static CoxeterSystem from_realized_roots(const CoxeterSystem& ambient,
                                           const std::vector<IntVec>& simples);

  bool same_as(const CoxeterSystem& o) const {
    return cox_ == o.cox_ && cartan_ == o.cartan_;
  }

 private:
  CoxeterSystem() = default;
  void derive_cox_and_sym();
  void validate() const;

  int rank_ = 0;
  std::vector<std::vector<int>> cox_;
  std::vector<std::vector<long long>> cartan_;
  std::vector<Rational> sym_;
};

using CoxeterPtr = std::shared_ptr<const CoxeterSystem>;

// Group element represented by its action on the root lattice.
// Columns store the images of the simple roots; length is tracked
// incrementally through the exchange condition, never by enumerating roots.
class GroupElement {
 public:
  static GroupElement identity(int rank);

  int rank() const { return static_cast<int>(cols_.size()); }
  int length() const { return len_; }
  const IntVec& image_of_simple(int i) const { return cols_[i - 1]; }

  IntVec apply(const IntVec& v) const;
  // Right multiplication by a generator; length goes up or down by one.
  GroupElement times_gen(const CoxeterSystem& sys, int s) const;
  bool ascends(int s) const;  // l(w s) = l(w) + 1 ?

  static GroupElement from_columns(std::vector<IntVec> cols, int len);

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.cols_ == b.cols_;
  }
  friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }
  friend bool operator<(const GroupElement& a, const GroupElement& b) {
    return a.cols_ < b.cols_;
  }

  bool is_identity() const;

 private:
  std::vector<IntVec> cols_;
  int len_ = 0;
};

using Word = std::vector<int>;  // 1-based generator indices

void check_word(const CoxeterSystem& sys, const Word& w);

GroupElement word_to_element(const CoxeterSystem& sys, const Word& w);

// Image of v under the product of simple reflections spelled by `word`
// (the word acts as the group element it spells; rightmost letter first).
IntVec act_on_root(const CoxeterSystem& sys, const Word& word, const IntVec& v);

bool is_reduced(const CoxeterSystem& sys, const Word& w);

GroupElement demazure_product(const CoxeterSystem& sys, const Word& w);

// Does some subword of `word` spell a reduced expression of `target`?
bool contains_reduced_expression(const CoxeterSystem& sys, const Word& word,
                                 const GroupElement& target);

Rational bilinear_form(const CoxeterSystem& sys, const IntVec& u, const IntVec& v);

// Order of the product of the two reflections, from the normalized Gram
// value k = 4 B(u,v)^2 / (B(u,u) B(v,v)): 0,1,2,3 -> 2,3,4,6; k >= 4 -> 0
// (infinity). Exact rational comparison.
int coxeter_order_from_roots(const CoxeterSystem& sys, const IntVec& u, const IntVec& v);

// All permutations sigma of [rank] with m(sigma i, sigma j) = m(i,j),
// in lexicographic order; each is a 1-based image vector.
std::vector<std::vector<int>> diagram_automorphisms(const CoxeterSystem& sys);

}  // namespace swc

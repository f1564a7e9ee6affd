#pragma once

#include <vector>

#include "swc/rational.hpp"

namespace swc {

using IntVec = std::vector<long long>;
using QVec = std::vector<Rational>;

QVec to_qvec(const IntVec& v);

bool is_zero_vec(const IntVec& v);
bool all_nonneg(const IntVec& v);
bool all_nonpos(const IntVec& v);

// Incremental row space over Q, kept in reduced echelon form.
// Exact Gaussian elimination; used for span membership and rank.
class RowSpace {
 public:
  explicit RowSpace(std::size_t dim) : dim_(dim) {}

  // Returns true when the vector enlarged the space.
  bool add(QVec v);
  bool add(const IntVec& v) { return add(to_qvec(v)); }

  bool contains(QVec v) const;
  bool contains(const IntVec& v) const { return contains(to_qvec(v)); }

  int dim() const { return static_cast<int>(rows_.size()); }
  std::size_t ambient_dim() const { return dim_; }

 private:
  void reduce(QVec& v) const;

  std::size_t dim_;
  std::vector<QVec> rows_;    // echelon basis
  std::vector<int> pivots_;   // pivot column of each row
};

int rank_of(const std::vector<IntVec>& vectors, std::size_t dim);

}  // namespace swc

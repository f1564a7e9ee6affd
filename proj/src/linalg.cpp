#include "swc/linalg.hpp"

#include <algorithm>

namespace swc {

QVec to_qvec(const IntVec& v) {
  QVec q(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) q[i] = Rational(v[i]);
  return q;
}

bool is_zero_vec(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
}
bool all_nonneg(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](long long x) { return x >= 0; });
}
bool all_nonpos(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](long long x) { return x <= 0; });
}

void RowSpace::reduce(QVec& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational& c = v[pivots_[r]];
    if (!c.is_zero()) {
      Rational f = c;  // rows are normalized with pivot 1
      for (std::size_t j = 0; j < dim_; ++j) v[j] -= f * rows_[r][j];
    }
  }
}

bool RowSpace::add(QVec v) {
  if (v.size() != dim_) throw DimensionMismatch("row space dimension mismatch");
  reduce(v);
  int pivot = -1;
  for (std::size_t j = 0; j < dim_; ++j) {
    if (!v[j].is_zero()) {
      pivot = static_cast<int>(j);
      break;
    }
  }
  if (pivot < 0) return false;
  Rational p = v[pivot];
  for (std::size_t j = 0; j < dim_; ++j) v[j] /= p;
  // back-substitute into existing rows to keep the basis reduced
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Rational c = rows_[r][pivot];
    if (!c.is_zero())
      for (std::size_t j = 0; j < dim_; ++j) rows_[r][j] -= c * v[j];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  // keep rows sorted by pivot column for determinism
  for (std::size_t r = rows_.size(); r > 1 && pivots_[r - 1] < pivots_[r - 2]; --r) {
    std::swap(rows_[r - 1], rows_[r - 2]);
    std::swap(pivots_[r - 1], pivots_[r - 2]);
  }
  return true;
}

bool RowSpace::contains(QVec v) const {
  if (v.size() != dim_) throw DimensionMismatch("row space dimension mismatch");
  reduce(v);
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

int rank_of(const std::vector<IntVec>& vectors, std::size_t dim) {
  RowSpace rs(dim);
  for (const auto& v : vectors) rs.add(v);
  return rs.dim();
}

}  // namespace swc

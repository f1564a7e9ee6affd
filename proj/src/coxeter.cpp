#include "swc/coxeter.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace swc {

namespace {

int order_from_cartan_product(long long p) {
  switch (p) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return 0;  // infinity
  }
}

}  // namespace

IntVec CoxeterSystem::simple_root(int i) const {
  if (i < 1 || i > rank_) throw InvalidGenerator("generator index out of range");
  IntVec v(rank_, 0);
  v[i - 1] = 1;
  return v;
}

IntVec CoxeterSystem::reflect(int i, const IntVec& v) const {
  if (i < 1 || i > rank_) throw InvalidGenerator("generator index out of range");
  if (static_cast<int>(v.size()) != rank_) throw DimensionMismatch("root has wrong length");
  long long c = 0;
  for (int j = 0; j < rank_; ++j) c += cartan_[i - 1][j] * v[j];
  IntVec w = v;
  w[i - 1] -= c;
  return w;
}

IntVec CoxeterSystem::reflect_by_root(const IntVec& r, const IntVec& v) const {
  Rational coeff = Rational(2) * bilinear(r, v) / bilinear(r, r);
  if (!coeff.is_integer())
    throw NotCrystallographicPair("non-integral reflection coefficient");
  IntVec w = v;
  for (int j = 0; j < rank_; ++j) w[j] -= coeff.num() * r[j];
  return w;
}

Rational CoxeterSystem::bilinear(const IntVec& u, const IntVec& v) const {
  if (static_cast<int>(u.size()) != rank_ || static_cast<int>(v.size()) != rank_)
    throw DimensionMismatch("bilinear form arguments have wrong length");
  Rational total = 0;
  for (int i = 0; i < rank_; ++i) {
    if (u[i] == 0) continue;
    long long row = 0;
    for (int j = 0; j < rank_; ++j) row += cartan_[i][j] * v[j];
    total += sym_[i] * Rational(u[i]) * Rational(row);
  }
  return total;
}

bool CoxeterSystem::finite() const {
  // Sylvester criterion on the symmetric matrix B(i,j) = d_i A(i,j),
  // exact fraction arithmetic.
  std::vector<QVec> b(rank_, QVec(rank_));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) b[i][j] = sym_[i] * Rational(cartan_[i][j]);
  for (int k = 1; k <= rank_; ++k) {
    // determinant of leading k x k minor by elimination
    std::vector<QVec> m(b.begin(), b.begin() + k);
    for (auto& row : m) row.resize(k);
    Rational det = 1;
    for (int c = 0; c < k; ++c) {
      int p = -1;
      for (int r = c; r < k; ++r)
        if (!m[r][c].is_zero()) {
          p = r;
          break;
        }
      if (p < 0) return false;  // singular minor: not positive definite
      if (p != c) {
        std::swap(m[p], m[c]);
        det = -det;
      }
      det *= m[c][c];
      for (int r = c + 1; r < k; ++r) {
        if (m[r][c].is_zero()) continue;
        Rational f = m[r][c] / m[c][c];
        for (int j = c; j < k; ++j) m[r][j] -= f * m[c][j];
      }
    }
    if (!(det > Rational(0))) return false;
  }
  return true;
}

CoxeterSystem CoxeterSystem::trivial() {
  CoxeterSystem s;
  s.rank_ = 0;
  return s;
}

void CoxeterSystem::derive_cox_and_sym() {
  rank_ = static_cast<int>(cartan_.size());
  cox_.assign(rank_, std::vector<int>(rank_, 2));
  for (int i = 0; i < rank_; ++i) {
    cox_[i][i] = 1;
    for (int j = 0; j < rank_; ++j) {
      if (i == j) continue;
      cox_[i][j] = order_from_cartan_product(cartan_[i][j] * cartan_[j][i]);
    }
  }
  // Symmetrizer: propagate d along edges of the Cartan graph, component roots
  // normalized to 1.
  sym_.assign(rank_, Rational(0));
  for (int start = 0; start < rank_; ++start) {
    if (!sym_[start].is_zero()) continue;
    sym_[start] = 1;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < rank_; ++j) {
        if (i == j || cartan_[i][j] == 0) continue;
        Rational dj = sym_[i] * Rational(cartan_[i][j]) / Rational(cartan_[j][i]);
        if (sym_[j].is_zero()) {
          sym_[j] = dj;
          stack.push_back(j);
        } else if (sym_[j] != dj) {
          throw ValidationError("Cartan matrix is not symmetrizable");
        }
      }
    }
  }
}

void CoxeterSystem::validate() const {
  for (int i = 0; i < rank_; ++i) {
    if (cartan_[i][i] != 2) throw ValidationError("Cartan diagonal must be 2");
    for (int j = 0; j < rank_; ++j) {
      if (i == j) continue;
      if (cartan_[i][j] > 0) throw ValidationError("off-diagonal Cartan entries must be <= 0");
      if ((cartan_[i][j] == 0) != (cartan_[j][i] == 0))
        throw ValidationError("Cartan zero pattern must be symmetric");
      // integer products land in {0,1,2,3} or >= 4; all are crystallographic
    }
  }
  for (const auto& d : sym_)
    if (!(d > Rational(0))) throw ValidationError("symmetrizer must be positive");
}

CoxeterSystem CoxeterSystem::from_cartan(std::vector<std::vector<long long>> cartan) {
  CoxeterSystem s;
  s.cartan_ = std::move(cartan);
  for (const auto& row : s.cartan_)
    if (row.size() != s.cartan_.size()) throw ValidationError("Cartan matrix must be square");
  s.derive_cox_and_sym();
  s.validate();
  return s;
}

CoxeterSystem CoxeterSystem::from_coxeter_matrix(
    std::vector<std::vector<int>> cox,
    std::optional<std::vector<std::vector<long long>>> cartan) {
  const int n = static_cast<int>(cox.size());
  for (const auto& row : cox)
    if (static_cast<int>(row.size()) != n) throw ValidationError("Coxeter matrix must be square");
  for (int i = 0; i < n; ++i) {
    if (cox[i][i] != 1) throw ValidationError("Coxeter matrix diagonal must be 1");
    for (int j = 0; j < n; ++j) {
      if (i != j && cox[i][j] != cox[j][i])
        throw ValidationError("Coxeter matrix must be symmetric");
      if (i != j && cox[i][j] != 0 && cox[i][j] < 2)
        throw ValidationError("off-diagonal Coxeter entries must be >= 2 (0 = infinity)");
    }
  }
  std::vector<std::vector<long long>> a;
  if (cartan) {
    a = std::move(*cartan);
  } else {
    // integer lift: -1/-1 for m=3, -1/-2 for m=4, -1/-3 for m=6, -2/-2 for m=oo
    a.assign(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        switch (cox[i][j]) {
          case 2: break;
          case 3: a[i][j] = a[j][i] = -1; break;
          case 4: a[i][j] = -1; a[j][i] = -2; break;
          case 6: a[i][j] = -1; a[j][i] = -3; break;
          case 0: a[i][j] = a[j][i] = -2; break;
          default:
            throw NotCrystallographicPair("only orders 2,3,4,6,infinity are supported");
        }
      }
  }
  CoxeterSystem s = from_cartan(std::move(a));
  if (s.cox_ != cox) throw ValidationError("Cartan matrix does not realize the Coxeter matrix");
  return s;
}

CoxeterSystem CoxeterSystem::preset(const std::string& name) {
  auto chain = [](int n, int last_bond) {
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    for (int i = 0; i + 1 < n; ++i) m[i][i + 1] = m[i + 1][i] = 3;
    if (n >= 2) m[n - 2][n - 1] = m[n - 1][n - 2] = last_bond;
    return m;
  };
  if (name == "trivial") return trivial();
  if (name == "affineA2")
    return from_coxeter_matrix({{1, 3, 3}, {3, 1, 3}, {3, 3, 1}});
  if (name.size() >= 2 && (name[0] == 'A' || name[0] == 'B' || name[0] == 'D')) {
    int n = 0;
    try {
      n = std::stoi(name.substr(1));
    } catch (...) {
      throw ParseError("unknown Coxeter preset: " + name);
    }
    if (name[0] == 'A' && n >= 1) return from_coxeter_matrix(chain(n, n >= 2 ? 3 : 1));
    if (name[0] == 'B' && n >= 2) return from_coxeter_matrix(chain(n, 4));
    if (name[0] == 'D' && n >= 3) {
      // chain 1..n-1 with the extra node n attached at n-2
      auto m = chain(n - 1, 3);
      for (auto& row : m) row.push_back(2);
      m.push_back(std::vector<int>(n, 2));
      m[n - 1][n - 1] = 1;
      m[n - 3][n - 1] = m[n - 1][n - 3] = 3;
      return from_coxeter_matrix(m);
    }
  }
  throw ParseError("unknown Coxeter preset: " + name);
}

CoxeterSystem CoxeterSystem::product(const CoxeterSystem& a, const CoxeterSystem& b) {
  const int n = a.rank_ + b.rank_;
  std::vector<std::vector<long long>> cartan(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) cartan[i][i] = 2;
  for (int i = 0; i < a.rank_; ++i)
    for (int j = 0; j < a.rank_; ++j) cartan[i][j] = a.cartan_[i][j];
  for (int i = 0; i < b.rank_; ++i)
    for (int j = 0; j < b.rank_; ++j) cartan[a.rank_ + i][a.rank_ + j] = b.cartan_[i][j];
  return from_cartan(std::move(cartan));
}

CoxeterSystem CoxeterSystem::from_realized_roots(const CoxeterSystem& ambient,
                                                 const std::vector<IntVec>& simples) {
  const int n = static_cast<int>(simples.size());
  CoxeterSystem s;
  s.cartan_.assign(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) {
    Rational self = ambient.bilinear(simples[i], simples[i]);
    if (!(self > Rational(0)))
      throw NotCrystallographicPair("realized simple root with non-positive norm");
    for (int j = 0; j < n; ++j) {
      Rational a = Rational(2) * ambient.bilinear(simples[i], simples[j]) / self;
      if (!a.is_integer())
        throw NotCrystallographicPair("realized roots give a non-integral Cartan entry");
      s.cartan_[i][j] = a.num();
    }
  }
  s.derive_cox_and_sym();
  // The inherited symmetrizer must reproduce the ambient form; rescale each
  // connected component so that d_i A(i,j) = B(beta_i, beta_j).
  for (int i = 0; i < n; ++i) {
    Rational want = ambient.bilinear(simples[i], simples[i]) / Rational(2);
    s.sym_[i] = want;
  }
  s.validate();
  // consistency: d_i A(i,j) symmetric
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (s.sym_[i - 1] * Rational(s.cartan_[i - 1][j - 1]) !=
          ambient.bilinear(simples[i - 1], simples[j - 1]))
        throw NotCrystallographicPair("realized Gram matrix is not symmetrizable");
  return s;
}

GroupElement GroupElement::identity(int rank) {
  GroupElement g;
  g.cols_.assign(rank, IntVec(rank, 0));
  for (int i = 0; i < rank; ++i) g.cols_[i][i] = 1;
  g.len_ = 0;
  return g;
}

IntVec GroupElement::apply(const IntVec& v) const {
  const int n = rank();
  if (static_cast<int>(v.size()) != n) throw DimensionMismatch("vector has wrong length");
  IntVec out(n, 0);
  for (int j = 0; j < n; ++j) {
    if (v[j] == 0) continue;
    for (int i = 0; i < n; ++i) out[i] += v[j] * cols_[j][i];
  }
  return out;
}

bool GroupElement::ascends(int s) const { return all_nonneg(cols_[s - 1]); }

GroupElement GroupElement::times_gen(const CoxeterSystem& sys, int s) const {
  if (s < 1 || s > rank()) throw InvalidGenerator("generator index out of range");
  GroupElement g = *this;
  g.len_ = len_ + (ascends(s) ? 1 : -1);
  // (w s)(alpha_j) = w(alpha_j) - A(s,j) w(alpha_s)
  const IntVec ws = cols_[s - 1];
  for (int j = 1; j <= rank(); ++j) {
    long long a = sys.cartan(s, j);
    if (a == 0) continue;
    IntVec& col = g.cols_[j - 1];
    for (int i = 0; i < rank(); ++i) col[i] -= a * ws[i];
  }
  return g;
}

bool GroupElement::is_identity() const { return *this == identity(rank()); }

GroupElement GroupElement::from_columns(std::vector<IntVec> cols, int len) {
  GroupElement g;
  g.cols_ = std::move(cols);
  g.len_ = len;
  return g;
}

void check_word(const CoxeterSystem& sys, const Word& w) {
  for (int s : w)
    if (s < 1 || s > sys.rank()) throw InvalidGenerator("generator index out of range");
}

GroupElement word_to_element(const CoxeterSystem& sys, const Word& w) {
  check_word(sys, w);
  GroupElement g = GroupElement::identity(sys.rank());
  for (int s : w) g = g.times_gen(sys, s);
  return g;
}

IntVec act_on_root(const CoxeterSystem& sys, const Word& word, const IntVec& v) {
  check_word(sys, word);
  if (static_cast<int>(v.size()) != sys.rank())
    throw DimensionMismatch("root has wrong length");
  IntVec out = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = sys.reflect(*it, out);
  return out;
}

bool is_reduced(const CoxeterSystem& sys, const Word& w) {
  check_word(sys, w);
  GroupElement g = GroupElement::identity(sys.rank());
  for (int s : w) {
    if (!g.ascends(s)) return false;
    g = g.times_gen(sys, s);
  }
  return true;
}

GroupElement demazure_product(const CoxeterSystem& sys, const Word& w) {
  check_word(sys, w);
  GroupElement g = GroupElement::identity(sys.rank());
  for (int s : w)
    if (g.ascends(s)) g = g.times_gen(sys, s);
  return g;
}

namespace {

// Left multiplication s . w: apply the reflection to every column.
GroupElement left_mul_gen(const CoxeterSystem& sys, int s, const GroupElement& w, int new_len) {
  std::vector<IntVec> cols(sys.rank());
  for (int j = 1; j <= sys.rank(); ++j) cols[j - 1] = sys.reflect(s, w.image_of_simple(j));
  return GroupElement::from_columns(std::move(cols), new_len);
}

}  // namespace

bool contains_reduced_expression(const CoxeterSystem& sys, const Word& word,
                                 const GroupElement& target) {
  check_word(sys, word);
  if (target.rank() != sys.rank()) throw DimensionMismatch("element has wrong rank");
  // Scan right to left, carrying the set of elements spellable as a reduced
  // subword of the suffix. Pairs (w, w^{-1}): prepending a generator is a
  // length ascent iff w^{-1}(alpha_s) is positive, and (s w)^{-1} = w^{-1} s.
  std::map<GroupElement, GroupElement> pool;  // w -> w^{-1}
  GroupElement e = GroupElement::identity(sys.rank());
  pool.emplace(e, e);
  const int want = target.length();
  if (want == 0) return target.is_identity();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int s = *it;
    std::vector<std::pair<GroupElement, GroupElement>> grown;
    for (const auto& [w, winv] : pool) {
      if (w.length() >= want) continue;
      if (winv.ascends(s))
        grown.emplace_back(left_mul_gen(sys, s, w, w.length() + 1), winv.times_gen(sys, s));
    }
    for (auto& kv : grown) pool.insert(std::move(kv));
    if (pool.count(target)) return true;
  }
  return pool.count(target) > 0;
}

Rational bilinear_form(const CoxeterSystem& sys, const IntVec& u, const IntVec& v) {
  return sys.bilinear(u, v);
}

int coxeter_order_from_roots(const CoxeterSystem& sys, const IntVec& u, const IntVec& v) {
  Rational buu = sys.bilinear(u, u);
  Rational bvv = sys.bilinear(v, v);
  Rational buv = sys.bilinear(u, v);
  if (buu.is_zero() || bvv.is_zero()) throw NotCrystallographicPair("root with zero norm");
  Rational k = Rational(4) * buv * buv / (buu * bvv);
  if (k == Rational(0)) return 2;
  if (k == Rational(1)) return 3;
  if (k == Rational(2)) return 4;
  if (k == Rational(3)) return 6;
  if (k >= Rational(4)) return 0;
  throw NotCrystallographicPair("normalized Gram value " + k.str() +
                                " is not crystallographic");
}

std::vector<std::vector<int>> diagram_automorphisms(const CoxeterSystem& sys) {
  const int n = sys.rank();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i + 1;
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i)
      for (int j = 1; j <= n && ok; ++j)
        if (sys.cox(perm[i - 1], perm[j - 1]) != sys.cox(i, j)) ok = false;
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace swc

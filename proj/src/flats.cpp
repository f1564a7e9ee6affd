#include "swc/flats.hpp"

#include <algorithm>
#include <set>

namespace swc {

Flat flat_of_subspace(const Quadruple& X, const std::vector<int>& generators) {
  auto roots = X.root_function();
  RowSpace span(X.rank());
  for (int p : generators) {
    if (p < 1 || p > X.n()) throw ValidationError("position out of range");
    span.add(roots[p - 1]);
  }
  Flat F;
  for (int l = 1; l <= X.n(); ++l)
    if (span.contains(roots[l - 1])) F.push_back(l);
  return F;
}

bool is_flat(const Quadruple& X, const Flat& F) { return flat_of_subspace(X, F) == F; }

std::vector<Flat> irreducible_flats(const Quadruple& X) {
  std::set<Flat> seen;
  const auto& I = X.face;
  const std::size_t m = I.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::vector<int> J;
    for (std::size_t k = 0; k < m; ++k)
      if (mask & (std::size_t{1} << k)) J.push_back(I[k]);
    seen.insert(flat_of_subspace(X, J));
  }
  return {seen.begin(), seen.end()};
}

int face_index(const Flat& F, int pos) {
  auto it = std::lower_bound(F.begin(), F.end(), pos);
  if (it == F.end() || *it != pos) throw Error("position not in flat");
  return static_cast<int>(it - F.begin()) + 1;
}

Quadruple induced_quadruple(const Quadruple& X, const Flat& F) {
  if (!is_flat(X, F)) throw NotAFlat("position set is not closed under span membership");
  auto roots = X.root_function();

  // beta_k = (product of reflections at positions left of j_k, outside I,
  // outside F) applied to the simple root of the letter at j_k.
  std::vector<IntVec> betas;
  for (int jk : F) {
    GroupElement u = GroupElement::identity(X.rank());
    for (int j = 1; j < jk; ++j) {
      if (X.in_face(j)) continue;
      if (std::binary_search(F.begin(), F.end(), j)) continue;
      u = u.times_gen(*X.system, X.word[j - 1]);
    }
    IntVec alpha(X.rank(), 0);
    alpha[X.word[jk - 1] - 1] = 1;
    betas.push_back(u.apply(alpha));
  }

  // distinct betas, in order of first appearance, become the generators
  std::vector<IntVec> simples;
  Word sub_word;
  for (const auto& b : betas) {
    auto it = std::find(simples.begin(), simples.end(), b);
    if (it == simples.end()) {
      simples.push_back(b);
      sub_word.push_back(static_cast<int>(simples.size()));
    } else {
      sub_word.push_back(static_cast<int>(it - simples.begin()) + 1);
    }
  }

  auto sub_sys = std::make_shared<const CoxeterSystem>(
      CoxeterSystem::from_realized_roots(*X.system, simples));

  std::vector<int> sub_face;
  for (std::size_t k = 0; k < F.size(); ++k)
    if (X.in_face(F[k])) sub_face.push_back(static_cast<int>(k) + 1);

  Realization real;
  if (X.realization) {
    // compose with X's own realization so coordinates refer to X's parent
    const auto& outer = X.realization->simples;
    std::size_t dim = outer.empty() ? 0 : outer[0].size();
    std::vector<IntVec> composed;
    for (const auto& b : simples) {
      IntVec v(dim, 0);
      for (int k = 0; k < X.rank(); ++k)
        for (std::size_t c = 0; c < dim; ++c) v[c] += b[k] * outer[k][c];
      composed.push_back(std::move(v));
    }
    real = Realization{X.realization->parent, std::move(composed)};
  } else {
    real = Realization{X.system, simples};
  }
  return Quadruple::make(sub_sys, std::move(sub_word), std::move(sub_face), std::move(real));
}

std::vector<Flat> complements(const Quadruple& X, const Flat& F) {
  if (!is_flat(X, F)) throw NotAFlat("position set is not closed under span membership");
  auto roots = X.root_function();
  RowSpace base(X.rank());
  for (int p : F) base.add(roots[p - 1]);
  const int dim_f = base.dim();
  const int full = X.rank();

  std::vector<Flat> out;
  for (const auto& G : irreducible_flats(X)) {
    RowSpace g_span(X.rank());
    for (int p : G) g_span.add(roots[p - 1]);
    if (g_span.dim() + dim_f != full) continue;
    RowSpace joint(X.rank());
    for (int p : F) joint.add(roots[p - 1]);
    for (int p : G) joint.add(roots[p - 1]);
    // V(F) + V(G) = V_X with dimensions adding up iff the sum is direct
    if (joint.dim() == full) out.push_back(G);
  }
  return out;
}

}  // namespace swc

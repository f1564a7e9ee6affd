#include "swc/hall.hpp"

#include <algorithm>
#include <cstdlib>
#include <tuple>

namespace swc {

std::size_t default_budget() {
  if (const char* env = std::getenv("SWC_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 50'000'000;
}

namespace {

struct Budget {
  std::size_t left;
  void spend(std::size_t n = 1) {
    if (left < n) throw BudgetExceeded("enumeration budget exhausted");
    left -= n;
  }
};

void add_term(HallElement& h, const ClassKey& k, long long c) {
  if (c == 0) return;
  auto it = h.find(k);
  if (it == h.end()) {
    h.emplace(k, c);
  } else {
    it->second += c;
    if (it->second == 0) h.erase(it);
  }
}

void add_term(TensorElement& h, const TensorPair& k, long long c) {
  if (c == 0) return;
  auto it = h.find(k);
  if (it == h.end()) {
    h.emplace(k, c);
  } else {
    it->second += c;
    if (it->second == 0) h.erase(it);
  }
}

}  // namespace

HallElement hall_class(const Quadruple& X) { return {{canonical_class(X), 1}}; }

HallElement hall_zero_class() { return {{ClassKey{}, 1}}; }

HallElement hall_product(const HallElement& a, const HallElement& b) {
  HallElement out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      Quadruple sum = direct_sum(quadruple_from_class(ka), quadruple_from_class(kb));
      add_term(out, canonical_class(sum), ca * cb);
    }
  return out;
}

TensorElement hall_coproduct(const Quadruple& X) {
  TensorElement out;
  for (const auto& seq : admissible_sequences(X)) {
    ClassKey a = canonical_class(induced_quadruple(X, seq.sub));
    ClassKey c = canonical_class(induced_quadruple(X, seq.quot));
    add_term(out, {std::move(a), std::move(c)}, 1);
  }
  return out;
}

TensorElement hall_coproduct(const HallElement& h) {
  TensorElement out;
  for (const auto& [k, c] : h) {
    TensorElement part = hall_coproduct(quadruple_from_class(k));
    for (const auto& [pk, pc] : part) add_term(out, pk, pc * c);
  }
  return out;
}

long long counit(const HallElement& a) {
  auto it = a.find(ClassKey{});
  return it == a.end() ? 0 : it->second;
}

HallElement unit(long long coefficient) {
  if (coefficient == 0) return {};
  return {{ClassKey{}, coefficient}};
}

int class_degree(const ClassKey& key) { return static_cast<int>(key.cox.size()); }

bool coassociativity_check(const Quadruple& X, std::size_t budget) {
  Budget bud{budget};
  // Route one: split X into (Y-part, C), then the Y-part into (A, B).
  // Route two: split X into (A, Z-part), then the Z-part into (B, C).
  // The multisets of (A, B, C) class triples must coincide, every diagram of
  // the first kind must complete uniquely to a nested commutative diagram
  // through the stated flat, and dually.
  std::map<std::tuple<ClassKey, ClassKey, ClassKey>, long long> left, right;

  auto flats = irreducible_flats(X);
  auto in_flat = [](const Flat& F, int p) {
    return std::binary_search(F.begin(), F.end(), p);
  };
  Flat full_x(X.n());
  for (int i = 0; i < X.n(); ++i) full_x[i] = i + 1;

  for (const auto& seq : admissible_sequences(X)) {
    // seq.sub plays the role of the middle subobject Y; seq.quot is C
    Quadruple Y = induced_quadruple(X, seq.sub);
    Quadruple C = induced_quadruple(X, seq.quot);
    Morphism i_y = canonical_embedding(X, seq.sub);
    Morphism p_c = canonical_retraction(X, seq.quot);
    for (const auto& inner : admissible_sequences(Y)) {
      bud.spend();
      Quadruple B = induced_quadruple(Y, inner.quot);
      ClassKey a_key = canonical_class(induced_quadruple(Y, inner.sub));
      ClassKey b_key = canonical_class(B);
      ClassKey c_key = canonical_class(C);
      left[{a_key, b_key, c_key}] += 1;
      Morphism p_b = canonical_retraction(Y, inner.quot);

      std::vector<int> fb_in_x, fa_in_x;
      for (int p : inner.quot) fb_in_x.push_back(seq.sub[p - 1]);
      for (int p : inner.sub) fa_in_x.push_back(seq.sub[p - 1]);
      std::sort(fb_in_x.begin(), fb_in_x.end());
      std::sort(fa_in_x.begin(), fa_in_x.end());
      Flat FA = flat_of_subspace(X, fa_in_x);
      auto fa_comps = complements(X, FA);

      // number of nested diagrams through the quotient flat W: embeddings of
      // B and retractions to C making both squares commute, with (F_A, W)
      // admissible and the inner pair admissible in X_W
      auto completions_through = [&](const Flat& W) {
        bud.spend(4);
        if (std::find(fa_comps.begin(), fa_comps.end(), W) == fa_comps.end()) return 0;
        Quadruple WQ = induced_quadruple(X, W);
        Morphism p_w = canonical_retraction(X, W);
        Morphism left_side = compose(p_w, i_y);  // Y -> X_W
        Morphism bottom = p_c;                   // X -> C
        int count = 0;
        for (const auto& G : irreducible_flats(WQ)) {
          if (canonical_class(induced_quadruple(WQ, G)) != b_key) continue;
          Morphism i_b = make_morphism(B, WQ, [&] {
            Flat f(B.n());
            for (int i = 0; i < B.n(); ++i) f[i] = i + 1;
            return f;
          }(), G);
          if (!same_morphism(compose(i_b, p_b), left_side)) continue;
          for (const auto& Gp : complements(WQ, G)) {
            if (canonical_class(induced_quadruple(WQ, Gp)) != c_key) continue;
            Morphism p_cp = make_morphism(WQ, C, Gp, [&] {
              Flat f(C.n());
              for (int i = 0; i < C.n(); ++i) f[i] = i + 1;
              return f;
            }());
            if (same_morphism(compose(p_cp, p_w), bottom)) ++count;
          }
        }
        return count;
      };

      std::vector<int> gens;
      for (int p : X.face)
        if (std::binary_search(fb_in_x.begin(), fb_in_x.end(), p) || in_flat(seq.quot, p))
          gens.push_back(p);
      Flat Z = flat_of_subspace(X, gens);
      if (completions_through(Z) != 1) return false;
      int total = 0;
      for (const auto& W : flats) total += completions_through(W);
      if (total != 1) return false;
    }
  }

  for (const auto& seq : admissible_sequences(X)) {
    // seq.sub is A; seq.quot plays the role of the quotient object Z
    Quadruple Z = induced_quadruple(X, seq.quot);
    Quadruple A = induced_quadruple(X, seq.sub);
    Morphism i_a = canonical_embedding(X, seq.sub);
    Morphism p_z = canonical_retraction(X, seq.quot);
    for (const auto& inner : admissible_sequences(Z)) {
      bud.spend();
      Quadruple B = induced_quadruple(Z, inner.sub);
      ClassKey a_key = canonical_class(A);
      ClassKey b_key = canonical_class(B);
      ClassKey c_key = canonical_class(induced_quadruple(Z, inner.quot));
      right[{a_key, b_key, c_key}] += 1;
      Morphism i_b = canonical_embedding(Z, inner.sub);

      std::vector<int> fb_in_x;
      for (int p : inner.sub) fb_in_x.push_back(seq.quot[p - 1]);
      std::sort(fb_in_x.begin(), fb_in_x.end());

      // the composite retraction X ->> Z ->> C of the nested diagram
      Morphism p_c_inner = canonical_retraction(Z, inner.quot);
      Morphism q = compose(p_c_inner, p_z);  // X -> C, a canonical retraction

      // dual: subobject flats W of X carrying A >-> X_W ->> B with the
      // nested squares commuting and (W, q.f1) an admissible pair
      auto completions_through = [&](const Flat& W) {
        bud.spend(4);
        auto w_comps = complements(X, W);
        if (std::find(w_comps.begin(), w_comps.end(), q.f1) == w_comps.end()) return 0;
        Quadruple WQ = induced_quadruple(X, W);
        Morphism i_w = canonical_embedding(X, W);
        int count = 0;
        for (const auto& G : irreducible_flats(WQ)) {
          if (canonical_class(induced_quadruple(WQ, G)) != a_key) continue;
          Morphism i_aw = make_morphism(A, WQ, [&] {
            Flat f(A.n());
            for (int i = 0; i < A.n(); ++i) f[i] = i + 1;
            return f;
          }(), G);
          if (!same_morphism(compose(i_w, i_aw), i_a)) continue;
          for (const auto& Gp : complements(WQ, G)) {
            if (canonical_class(induced_quadruple(WQ, Gp)) != b_key) continue;
            Morphism p_bw = make_morphism(WQ, B, Gp, [&] {
              Flat f(B.n());
              for (int i = 0; i < B.n(); ++i) f[i] = i + 1;
              return f;
            }());
            // top-right square: p_z o i_w = i_b o p_bw
            if (same_morphism(compose(p_z, i_w), compose(i_b, p_bw))) ++count;
          }
        }
        return count;
      };

      std::vector<int> gens;
      for (int p : X.face)
        if (std::binary_search(fb_in_x.begin(), fb_in_x.end(), p) || in_flat(seq.sub, p))
          gens.push_back(p);
      Flat Yflat = flat_of_subspace(X, gens);
      if (completions_through(Yflat) != 1) return false;
      int total = 0;
      for (const auto& W : flats) total += completions_through(W);
      if (total != 1) return false;
    }
  }

  return left == right;
}

bool bialgebra_compat_check(const Quadruple& X, const Quadruple& Y, std::size_t budget) {
  Budget bud{budget};
  Quadruple XY = direct_sum(X, Y);
  TensorElement lhs = hall_coproduct(XY);
  TensorElement rhs;
  TensorElement dx = hall_coproduct(X);
  TensorElement dy = hall_coproduct(Y);
  for (const auto& [px, cx] : dx)
    for (const auto& [py, cy] : dy) {
      bud.spend();
      Quadruple a = direct_sum(quadruple_from_class(px.first), quadruple_from_class(py.first));
      Quadruple c = direct_sum(quadruple_from_class(px.second), quadruple_from_class(py.second));
      add_term(rhs, {canonical_class(a), canonical_class(c)}, cx * cy);
    }
  return lhs == rhs;
}

}  // namespace swc

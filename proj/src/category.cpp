#include "swc/category.hpp"

#include <algorithm>

namespace swc {

namespace {

Flat full_flat(const Quadruple& X) {
  Flat F(X.n());
  for (int i = 0; i < X.n(); ++i) F[i] = i + 1;
  return F;
}

std::map<int, int> gamma_from_canonical(const Flat& F1, const Flat& F2, const Quadruple& XF,
                                        const Quadruple& YF) {
  // gamma = b_{F2}^{-1} o p_Y^{-1} o p_X o b_{F1}
  CanonicalResult px = canonical_map(XF);
  CanonicalResult py = canonical_map(YF);
  if (px.key != py.key) throw ValidationError("flats do not induce equivalent quadruples");
  std::vector<int> py_inv(py.pos_map.size() + 1, 0);
  for (std::size_t l = 0; l < py.pos_map.size(); ++l) py_inv[py.pos_map[l]] = static_cast<int>(l) + 1;
  std::map<int, int> gamma;
  for (std::size_t k = 0; k < F1.size(); ++k) {
    int sub_pos = static_cast<int>(k) + 1;             // b_{F1}(F1[k])
    int canon_pos = px.pos_map[sub_pos - 1];           // in the canonical word
    int y_sub_pos = py_inv[canon_pos];                 // b_{F2} image
    gamma[F1[k]] = F2[y_sub_pos - 1];
  }
  return gamma;
}

}  // namespace

bool same_morphism(const Morphism& a, const Morphism& b) {
  return a.f1 == b.f1 && a.f2 == b.f2 && a.source == b.source && a.target == b.target;
}

Morphism make_morphism(const Quadruple& X, const Quadruple& Y, const Flat& F1, const Flat& F2) {
  if (!is_flat(X, F1) || !is_flat(Y, F2)) throw NotAFlat("morphism flats must be flats");
  Quadruple XF = induced_quadruple(X, F1);
  Quadruple YF = induced_quadruple(Y, F2);
  if (!XF.is_irreducible() || !YF.is_irreducible())
    throw ValidationError("morphism flats must be irreducible");
  Morphism m{X, Y, F1, F2, {}};
  m.gamma = gamma_from_canonical(F1, F2, XF, YF);
  return m;
}

bool morphism_exists(const Quadruple& X, const Quadruple& Y, const Flat& F1, const Flat& F2) {
  if (!is_flat(X, F1) || !is_flat(Y, F2)) return false;
  Quadruple XF = induced_quadruple(X, F1);
  Quadruple YF = induced_quadruple(Y, F2);
  if (!XF.is_irreducible() || !YF.is_irreducible()) return false;
  return canonical_class(XF) == canonical_class(YF);
}

std::vector<Morphism> morphism_set(const Quadruple& X, const Quadruple& Y) {
  std::vector<Morphism> out;
  auto fx = irreducible_flats(X);
  auto fy = irreducible_flats(Y);
  std::vector<std::pair<Flat, ClassKey>> kx, ky;
  for (const auto& F : fx) kx.emplace_back(F, canonical_class(induced_quadruple(X, F)));
  for (const auto& F : fy) ky.emplace_back(F, canonical_class(induced_quadruple(Y, F)));
  for (const auto& [F1, k1] : kx)
    for (const auto& [F2, k2] : ky)
      if (k1 == k2) out.push_back(make_morphism(X, Y, F1, F2));
  return out;
}

Morphism identity_morphism(const Quadruple& X) {
  return make_morphism(X, X, full_flat(X), full_flat(X));
}

Morphism zero_morphism(const Quadruple& X, const Quadruple& Y) {
  return make_morphism(X, Y, {}, {});
}

Morphism canonical_embedding(const Quadruple& X, const Flat& F) {
  Quadruple XF = induced_quadruple(X, F);
  return make_morphism(XF, X, full_flat(XF), F);
}

Morphism canonical_retraction(const Quadruple& X, const Flat& F) {
  Quadruple XF = induced_quadruple(X, F);
  return make_morphism(X, XF, F, full_flat(XF));
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (!(f.target == g.source)) throw NotComposable("codomain/domain mismatch");
  const Quadruple& Y = f.target;
  // positions of Y in F2 n F3 n I_Y
  std::vector<int> gens;
  for (int p : f.f2)
    if (std::binary_search(g.f1.begin(), g.f1.end(), p) && Y.in_face(p)) gens.push_back(p);
  Flat G = flat_of_subspace(Y, gens);
  // G is contained in both F2 and F3, so the cached bijections restrict.
  Flat F1p, F2p;
  std::map<int, int> gamma;
  std::map<int, int> f_inv;
  for (const auto& [a, b] : f.gamma) f_inv[b] = a;
  for (int t : G) {
    int a = f_inv.at(t);
    int c = g.gamma.at(t);
    F1p.push_back(a);
    F2p.push_back(c);
    gamma[a] = c;
  }
  std::sort(F1p.begin(), F1p.end());
  std::sort(F2p.begin(), F2p.end());
  Morphism m{f.source, g.target, std::move(F1p), std::move(F2p), {}};
  for (const auto& [a, c] : gamma) m.gamma[a] = c;
  return m;
}

bool is_mono(const Morphism& f) { return f.f1 == full_flat(f.source); }
bool is_epi(const Morphism& f) { return f.f2 == full_flat(f.target); }
bool is_iso(const Morphism& f) { return is_mono(f) && is_epi(f); }

std::vector<AdmissibleSequence> admissible_sequences(const Quadruple& X) {
  std::vector<AdmissibleSequence> out;
  for (const auto& F : irreducible_flats(X))
    for (const auto& Fp : complements(X, F)) out.push_back({F, Fp});
  return out;
}

std::pair<Morphism, Morphism> pushout_in_D(const Morphism& f, const Morphism& g) {
  if (!is_mono(f)) throw ValidationError("pushout needs a monomorphism A >-> B");
  if (!is_epi(g)) throw ValidationError("pushout needs an epimorphism A ->> C");
  if (!(f.source == g.source)) throw NotComposable("pushout legs must share their source");
  const Quadruple& B = f.target;
  if (!B.is_root_independent()) throw NotInD("pushout formula needs a root-independent middle");

  // A = B_{f(J)} via f; C = A_{g.f1}; map the subobject data into B.
  std::vector<int> H_in_B;
  for (int p : g.f1) H_in_B.push_back(f.gamma.at(p));
  std::sort(H_in_B.begin(), H_in_B.end());

  std::vector<int> J, H;
  for (int p : f.f2)
    if (B.in_face(p)) J.push_back(p);
  for (int p : H_in_B)
    if (B.in_face(p)) H.push_back(p);

  std::vector<int> gens;
  for (int p : B.face)
    if (!std::binary_search(J.begin(), J.end(), p)) gens.push_back(p);
  for (int p : H) gens.push_back(p);
  std::sort(gens.begin(), gens.end());
  Flat D_flat = flat_of_subspace(B, gens);
  Quadruple D = induced_quadruple(B, D_flat);

  Flat H_flat = flat_of_subspace(B, H_in_B);
  Flat h_f2;
  for (int p : H_flat) h_f2.push_back(face_index(D_flat, p));
  Morphism h = make_morphism(g.target, D, full_flat(g.target), h_f2);
  Morphism k = make_morphism(B, D, D_flat, full_flat(D));
  return {h, k};
}

std::pair<Morphism, Morphism> pullback_in_D(const Morphism& k, const Morphism& h) {
  if (!is_epi(k)) throw ValidationError("pullback needs an epimorphism B ->> D");
  if (!is_mono(h)) throw ValidationError("pullback needs a monomorphism C >-> D");
  if (!(k.target == h.target)) throw NotComposable("pullback legs must share their target");
  const Quadruple& B = k.source;
  if (!B.is_root_independent()) throw NotInD("pullback formula needs a root-independent middle");

  // D = B_{f(J')} via k; C sits inside D; pull its flat back to B.
  std::map<int, int> k_inv;
  for (const auto& [b, d] : k.gamma) k_inv[d] = b;
  std::vector<int> H_in_B;
  for (int p : h.f2) H_in_B.push_back(k_inv.at(p));
  std::sort(H_in_B.begin(), H_in_B.end());

  std::vector<int> Jp, H;
  for (int p : k.f1)
    if (B.in_face(p)) Jp.push_back(p);
  for (int p : H_in_B)
    if (B.in_face(p)) H.push_back(p);

  std::vector<int> gens = H;
  for (int p : B.face)
    if (!std::binary_search(Jp.begin(), Jp.end(), p)) gens.push_back(p);
  std::sort(gens.begin(), gens.end());
  Flat A_flat = flat_of_subspace(B, gens);
  Quadruple A = induced_quadruple(B, A_flat);

  Flat H_flat = flat_of_subspace(B, H_in_B);
  Flat g_f1;
  for (int p : H_flat) g_f1.push_back(face_index(A_flat, p));
  Morphism fa = make_morphism(A, B, full_flat(A), A_flat);
  Morphism ga = make_morphism(A, h.source, g_f1, full_flat(h.source));
  return {fa, ga};
}

std::vector<std::pair<Flat, int>> flippable_flats(const Quadruple& X) {
  std::vector<std::pair<Flat, int>> out;
  auto roots = X.root_function();
  for (const auto& F : irreducible_flats(X)) {
    if (F.empty()) continue;
    RowSpace span(X.rank());
    for (int p : F) span.add(roots[p - 1]);
    if (span.dim() != 1) continue;
    std::vector<int> trav;
    for (int p : F)
      if (!X.in_face(p)) trav.push_back(p);
    if (trav.size() == 1) out.push_back({F, trav[0]});
  }
  return out;
}

Quadruple flip(const Quadruple& X, const Flat& F, int i) {
  auto flips = flippable_flats(X);
  auto it = std::find_if(flips.begin(), flips.end(),
                         [&](const auto& p) { return p.first == F; });
  if (it == flips.end()) throw NotFlippable("flat is not flippable");
  if (!X.in_face(i) || !std::binary_search(F.begin(), F.end(), i))
    throw NotFlippable("flip position must be a folded position of the flat");
  int t = it->second;
  std::vector<int> face;
  for (int p : X.face)
    if (p != i) face.push_back(p);
  face.push_back(t);
  std::sort(face.begin(), face.end());
  Quadruple Y = Quadruple::make(X.system, X.word, std::move(face), X.realization);
  if (!(Y.pi == X.pi)) throw NotFlippable("flip changed the group element");
  return Y;
}

}  // namespace swc

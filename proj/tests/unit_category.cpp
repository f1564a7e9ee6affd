#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_main.hpp"

#include <random>

#include "swc/category.hpp"

using namespace swc;
using namespace swc::testing;

namespace {

Flat full(const Quadruple& X) {
  Flat F(X.n());
  for (int i = 0; i < X.n(); ++i) F[i] = i + 1;
  return F;
}

// small corpus of root-independent objects of rank <= 3
std::vector<Quadruple> d_corpus() {
  std::vector<Quadruple> out;
  out.push_back(Quadruple::zero_object());
  out.push_back(Quadruple::make(sys("A1"), {1}, {1}));
  out.push_back(a1_double(1));
  out.push_back(a1_double(2));
  out.push_back(standard_object(2));
  out.push_back(standard_object(3));
  out.push_back(Quadruple::make_with_pi(sys("B2"), {1, 2, 1, 2, 1, 2}, {1, 2}, {1, 2, 1, 2}));
  out.push_back(affine_a2_example());
  out.push_back(direct_sum(a1_double(1), a1_double(2)));
  out.push_back(direct_sum(standard_object(2), Quadruple::make(sys("A1"), {1}, {1})));
  return out;
}

}  // namespace

TEST_CASE("identity, zero, embeddings and retractions") {
  auto X = example_b();
  auto id = identity_morphism(X);
  CHECK(is_iso(id));
  auto z = zero_morphism(X, X);
  CHECK_FALSE(is_mono(z));
  CHECK_FALSE(is_epi(z));

  auto emb = canonical_embedding(X, {1, 6});
  CHECK(is_mono(emb));
  CHECK_FALSE(is_epi(emb));
  auto ret = canonical_retraction(X, {1, 6});
  CHECK(is_epi(ret));
  CHECK_FALSE(is_mono(ret));

  auto emb_full = canonical_embedding(X, full(X));
  CHECK(is_iso(emb_full));
}

TEST_CASE("composition with identities and zero") {
  auto X = example_b();
  auto Y = induced_quadruple(X, {1, 6});
  auto f = canonical_embedding(X, {1, 6});  // Y -> X
  CHECK(same_morphism(compose(identity_morphism(X), f), f));
  CHECK(same_morphism(compose(f, identity_morphism(Y)), f));
  auto z = compose(zero_morphism(X, X), f);
  CHECK(z.f1.empty());
  CHECK(z.f2.empty());
}

TEST_CASE("embedding then retraction is the flat idempotent") {
  auto X = example_b();
  Flat F{1, 6};
  auto idem = compose(canonical_embedding(X, F), canonical_retraction(X, F));
  CHECK(idem.f1 == F);
  CHECK(idem.f2 == F);
}

TEST_CASE("the worked example's vanishing compositions") {
  auto B = example_b();
  auto A = induced_quadruple(B, {1, 6});
  auto C = induced_quadruple(B, {2, 3});
  auto Cp = induced_quadruple(B, {4, 5});

  auto f = make_morphism(A, B, full(A), {1, 6});
  auto h = make_morphism(B, C, {2, 3}, full(C));
  auto hp = make_morphism(B, Cp, {4, 5}, full(Cp));

  auto hf = compose(h, f);
  CHECK(hf.f1.empty());
  CHECK(hf.f2.empty());
  auto hpf = compose(hp, f);
  CHECK(hpf.f1.empty());
  CHECK(hpf.f2.empty());
}

TEST_CASE("no filler morphism between the two quotients") {
  // exhaustive: no l: C -> C' satisfies l o h = h'
  auto B = example_b();
  auto C = induced_quadruple(B, {2, 3});
  auto Cp = induced_quadruple(B, {4, 5});
  auto h = make_morphism(B, C, {2, 3}, full(C));
  auto hp = make_morphism(B, Cp, {4, 5}, full(Cp));
  bool found = false;
  for (const auto& l : morphism_set(C, Cp))
    if (same_morphism(compose(l, h), hp)) found = true;
  CHECK_FALSE(found);

  auto B2 = example_s4();
  auto C2 = induced_quadruple(B2, {5, 6});
  auto C2p = induced_quadruple(B2, {7});
  auto h2 = make_morphism(B2, C2, {5, 6}, full(C2));
  auto h2p = make_morphism(B2, C2p, {7}, full(C2p));
  bool found2 = false;
  for (const auto& l : morphism_set(C2, C2p))
    if (same_morphism(compose(l, h2), h2p)) found2 = true;
  CHECK_FALSE(found2);
}

TEST_CASE("morphism sets are finite and enumerable") {
  auto X = a1_double(1);
  auto Y = a1_double(2);
  // flats of each: {} and {1,2}; the full flats are inequivalent
  CHECK(morphism_set(X, Y).size() == 1);  // only the zero morphism
  CHECK(morphism_set(X, X).size() == 2);  // zero and identity
  auto B = example_b();
  auto ms = morphism_set(B, B);
  // zero, id, the four (F1,F2) mixes of the equivalent flats {1,6} and {2,3},
  // and the idempotent on {4,5}
  CHECK(ms.size() == 7);
}

TEST_CASE("associativity on sampled composable triples") {
  std::mt19937 rng(5);
  std::vector<Quadruple> objs{example_b(), induced_quadruple(example_b(), {1, 6}),
                              standard_object(2), standard_object(3), example_s4()};
  int checked = 0;
  for (const auto& X : objs)
    for (const auto& Y : objs)
      for (const auto& Z : objs) {
        auto fs = morphism_set(X, Y);
        auto gs = morphism_set(Y, Z);
        if (fs.empty() || gs.empty()) continue;
        for (int t = 0; t < 3; ++t) {
          const auto& f = fs[rng() % fs.size()];
          const auto& g = gs[rng() % gs.size()];
          for (const auto& W : {X, Z}) {
            auto hs = morphism_set(Z, W);
            if (hs.empty()) continue;
            const auto& h = hs[rng() % hs.size()];
            CHECK(same_morphism(compose(h, compose(g, f)), compose(compose(h, g), f)));
            ++checked;
          }
        }
      }
  CHECK(checked > 50);
}

TEST_CASE("admissible sequence counts") {
  auto B = example_b();
  auto seqs = admissible_sequences(B);
  int with_a_sub = 0;
  for (const auto& s : seqs)
    if (s.sub == Flat{1, 6}) ++with_a_sub;
  CHECK(with_a_sub == 2);  // complements {2,3} and {4,5}

  for (const auto& X : {standard_object(2), standard_object(3), d4_flip_example()})
    CHECK(admissible_sequences(X).size() == (std::size_t{1} << X.face.size()));

  auto Z = Quadruple::zero_object();
  auto zseq = admissible_sequences(Z);
  REQUIRE(zseq.size() == 1);
  CHECK(zseq[0].sub.empty());
  CHECK(zseq[0].quot.empty());
}

TEST_CASE("direct sum universal property") {
  // unique h (+) g into Z (+) Z with both projections matching
  std::vector<Quadruple> objs{a1_double(1), standard_object(2)};
  for (const auto& X : objs)
    for (const auto& Y : objs)
      for (const auto& Z : objs) {
        auto XY = direct_sum(X, Y);
        auto ZZ = direct_sum(Z, Z);
        auto iX = make_morphism(X, XY, full(X), [&] {
          Flat F;
          for (int i = 1; i <= X.n(); ++i) F.push_back(i);
          return F;
        }());
        Flat right;
        for (int i = 1; i <= Y.n(); ++i) right.push_back(X.n() + i);
        auto iY = make_morphism(Y, XY, full(Y), right);
        Flat z1 = full(Z);
        Flat z2;
        for (int i = 1; i <= Z.n(); ++i) z2.push_back(Z.n() + i);
        auto p1 = make_morphism(ZZ, Z, z1, full(Z));
        auto p2 = make_morphism(ZZ, Z, z2, full(Z));
        auto zero_xz = zero_morphism(X, Z);
        auto zero_yz = zero_morphism(Y, Z);
        for (const auto& h : morphism_set(X, Z))
          for (const auto& g : morphism_set(Y, Z)) {
            // full commutativity of the diagram: the blocks do not interact
            int count = 0;
            for (const auto& cand : morphism_set(XY, ZZ)) {
              if (same_morphism(compose(p1, compose(cand, iX)), h) &&
                  same_morphism(compose(p2, compose(cand, iY)), g) &&
                  same_morphism(compose(p2, compose(cand, iX)), zero_xz) &&
                  same_morphism(compose(p1, compose(cand, iY)), zero_yz))
                ++count;
            }
            CHECK(count == 1);
          }
      }
}

TEST_CASE("subquotients of direct sums split blockwise") {
  auto B1 = a1_double(1);
  auto B2 = standard_object(2);
  auto S = direct_sum(B1, B2);
  for (const auto& seq : admissible_sequences(S)) {
    for (const Flat& F : {seq.sub, seq.quot}) {
      std::vector<int> left, right;
      for (int p : F)
        (p <= B1.n() ? left : right).push_back(p);
      for (int& p : right) p -= B1.n();
      CHECK(is_flat(B1, left));
      CHECK(is_flat(B2, right));
      auto piece = induced_quadruple(S, F);
      auto split = direct_sum(induced_quadruple(B1, left), induced_quadruple(B2, right));
      CHECK(equivalent(piece, split));
    }
  }
}

TEST_CASE("pushouts in the root-independent subcategory") {
  for (const auto& B : d_corpus()) {
    if (!B.is_root_independent()) continue;
    auto flats = irreducible_flats(B);
    for (const auto& J_flat : flats) {
      auto A = induced_quadruple(B, J_flat);
      auto f = canonical_embedding(B, J_flat);
      // quotients of A: subsets of A's face
      for (const auto& H_flat_in_A : irreducible_flats(A)) {
        auto g = canonical_retraction(A, H_flat_in_A);
        auto [h, k] = pushout_in_D(f, g);
        // commutativity
        CHECK(same_morphism(compose(k, f), compose(h, g)));
        // H = J: D is B itself
        if (H_flat_in_A == full(A)) CHECK(equivalent(h.target, B));
      }
    }
    // J = I_B, H = {}: D is the zero object
    Flat everything = flat_of_subspace(B, B.face);
    auto A = induced_quadruple(B, everything);
    auto f = canonical_embedding(B, everything);
    auto g = canonical_retraction(A, {});
    auto [h, k] = pushout_in_D(f, g);
    CHECK(h.target.n() == 0);
  }
}

TEST_CASE("pushout squares are biCartesian, exhaustively") {
  for (const auto& B : d_corpus()) {
    if (!B.is_root_independent() || B.rank() > 3) continue;
    auto flats = irreducible_flats(B);
    // candidate cone tips: all subquotient classes of B plus B itself
    std::vector<Quadruple> candidates;
    for (const auto& F : flats) candidates.push_back(induced_quadruple(B, F));
    candidates.push_back(B);
    for (const auto& J_flat : flats) {
      auto A = induced_quadruple(B, J_flat);
      auto f = canonical_embedding(B, J_flat);
      for (const auto& H_flat_in_A : irreducible_flats(A)) {
        auto g = canonical_retraction(A, H_flat_in_A);
        auto [h, k] = pushout_in_D(f, g);
        const auto& C = g.target;
        const auto& D = h.target;
        // pushout universal property against every candidate cone
        for (const auto& T : candidates) {
          auto from_b = morphism_set(B, T);
          auto from_c = morphism_set(C, T);
          auto from_d = morphism_set(D, T);
          for (const auto& kp : from_b)
            for (const auto& hp : from_c) {
              if (!same_morphism(compose(kp, f), compose(hp, g))) continue;
              int fillers = 0;
              for (const auto& psi : from_d)
                if (same_morphism(compose(psi, k), kp) && same_morphism(compose(psi, h), hp))
                  ++fillers;
              CHECK(fillers == 1);
            }
        }
        // the square is also a pullback
        auto [fa, ga] = pullback_in_D(k, h);
        CHECK(equivalent(fa.source, A));
        CHECK(fa.f2 == f.f2);
        CHECK(same_morphism(compose(k, fa), compose(h, ga)));
        // pullback universal property
        for (const auto& T : candidates) {
          auto to_b = morphism_set(T, B);
          auto to_c = morphism_set(T, C);
          auto to_a = morphism_set(T, fa.source);
          for (const auto& u : to_b)
            for (const auto& v : to_c) {
              if (!same_morphism(compose(k, u), compose(h, v))) continue;
              int fillers = 0;
              for (const auto& w : to_a)
                if (same_morphism(compose(fa, w), u) && same_morphism(compose(ga, w), v))
                  ++fillers;
              CHECK(fillers == 1);
            }
        }
      }
    }
  }
}

TEST_CASE("pullback then pushout recovers the square") {
  for (const auto& B : d_corpus()) {
    if (!B.is_root_independent() || B.rank() > 3) continue;
    for (const auto& J_flat : irreducible_flats(B)) {
      auto A = induced_quadruple(B, J_flat);
      auto f = canonical_embedding(B, J_flat);
      for (const auto& H_flat_in_A : irreducible_flats(A)) {
        auto g = canonical_retraction(A, H_flat_in_A);
        auto [h, k] = pushout_in_D(f, g);
        auto [fa, ga] = pullback_in_D(k, h);
        auto [h2, k2] = pushout_in_D(fa, ga);
        CHECK(same_morphism(h2, h));
        CHECK(same_morphism(k2, k));
      }
    }
  }
}

TEST_CASE("pushout rejects objects outside the subcategory") {
  auto B = example_b();  // not root independent
  auto f = canonical_embedding(B, {1, 6});
  auto g = canonical_retraction(f.source, {});
  CHECK_THROWS_AS(pushout_in_D(f, g), NotInD);
}

TEST_CASE("flippable flats") {
  auto X = standard_object(3);
  auto flips = flippable_flats(X);
  bool found = false;
  for (const auto& [F, t] : flips)
    if (F == Flat{3, 9}) {
      found = true;
      CHECK(t == 9);
    }
  CHECK(found);

  auto D = a1_double(1);
  auto dflips = flippable_flats(D);
  REQUIRE(dflips.size() == 1);
  CHECK(dflips[0].first == Flat{1, 2});
  CHECK(dflips[0].second == 2);

  // nothing to flip without folded positions: face is empty
  auto E = Quadruple::make(sys("A1"), {1}, {});
  CHECK(flippable_flats(E).empty());
}

TEST_CASE("flips of the standard object and the small doubling") {
  auto X = standard_object(3);
  auto Y = flip(X, {3, 9}, 3);
  CHECK(Y.face == std::vector<int>{1, 2, 9});
  CHECK(Y.pi == X.pi);
  CHECK(Y.word == X.word);

  auto D = a1_double(1);
  auto D2 = flip(D, {1, 2}, 1);
  CHECK(D2.face == std::vector<int>{2});

  auto XD4 = d4_flip_example();
  auto YD4 = flip(XD4, flat_of_subspace(XD4, {1}), 1);
  CHECK(YD4.face == std::vector<int>{2, 4, 5, 6});
}

TEST_CASE("flip root transformation law") {
  // after flipping (F, i) with traversing position t > i, the roots between
  // i and t reflect by r(i), and r_new(t) = -r_old(i)
  for (const auto& X : {standard_object(3), d4_flip_example(), a1_double(1)}) {
    for (const auto& [F, t] : flippable_flats(X)) {
      for (int i : F) {
        if (!X.in_face(i)) continue;
        auto Y = flip(X, F, i);
        auto rx = X.root_function();
        auto ry = Y.root_function();
        if (i < t) {
          for (int j = 1; j <= X.n(); ++j) {
            if (i < j && j <= t)
              CHECK(ry[j - 1] == X.system->reflect_by_root(rx[i - 1], rx[j - 1]));
            else
              CHECK(ry[j - 1] == rx[j - 1]);
          }
          IntVec neg = rx[i - 1];
          for (auto& c : neg) c = -c;
          CHECK(ry[t - 1] == neg);
        }
      }
    }
  }
}

TEST_CASE("flips are involutive along the transported flat") {
  for (const auto& X : {standard_object(3), standard_object(2), d4_flip_example()}) {
    for (const auto& [F, t] : flippable_flats(X)) {
      for (int i : F) {
        if (!X.in_face(i)) continue;
        auto Y = flip(X, F, i);
        // transported flat: same root line, traversing position now i
        Flat F2 = flat_of_subspace(Y, {t});
        auto Z = flip(Y, F2, t);
        CHECK(Z.face == X.face);
      }
    }
  }
}

TEST_CASE("flip rejections") {
  auto X = standard_object(3);
  CHECK_THROWS_AS(flip(X, {1, 2}, 1), NotFlippable);
  CHECK_THROWS_AS(flip(X, {3, 9}, 9), NotFlippable);  // 9 is traversing, not folded
}

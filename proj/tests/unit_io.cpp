#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_main.hpp"

#include "swc/io.hpp"

using namespace swc;
using namespace swc::testing;

TEST_CASE("object files parse to validated quadruples") {
  std::string text = R"(# the standard rank-three object
coxeter = A3
word = [1, 2, 3, 1, 2, 3, 1, 2, 1]
face = [1, 2, 3]
pi = [1, 2, 3, 1, 2, 1]
)";
  Quadruple X = to_quadruple(parse_object_text(text));
  CHECK(X.face == std::vector<int>{1, 2, 3});
  CHECK(equivalent(X, standard_object(3)));
}

TEST_CASE("explicit matrices and derived elements") {
  std::string text = R"(coxeter = [[1,3],[3,1]]
word = [1,2,2,1,1,2]
face = [1,2,5]
)";
  Quadruple X = to_quadruple(parse_object_text(text));
  CHECK(equivalent(X, example_b()));
  CHECK(X.pi == example_b().pi);
}

TEST_CASE("the trivial object file") {
  std::string text = "coxeter = trivial\nword = []\nface = []\n";
  Quadruple X = to_quadruple(parse_object_text(text));
  CHECK(X.n() == 0);
  CHECK(equivalent(X, Quadruple::zero_object()));
}

TEST_CASE("parser errors carry the failing invariant") {
  CHECK_THROWS_AS(parse_object_text("word = [1]\n"), ParseError);
  CHECK_THROWS_AS(parse_object_text("coxeter = A1\n"), ParseError);
  CHECK_THROWS_AS(parse_object_text("coxeter = Q9\nword = [1]\n"), ParseError);
  CHECK_THROWS_AS(parse_object_text("coxeter = A1\nword = [1\nface = []\n"), ParseError);
  CHECK_THROWS_AS(parse_object_text("coxeter = A1\nbogus = [1]\nword = [1]\n"), ParseError);

  // face-not-facet: complement not reduced
  std::string bad = "coxeter = A1\nword = [1,1,1]\nface = [2]\n";
  CHECK_THROWS_AS(to_quadruple(parse_object_text(bad)), ValidationError);
  // bad index
  std::string bad_ix = "coxeter = A1\nword = [2]\nface = [1]\n";
  CHECK_THROWS_AS(to_quadruple(parse_object_text(bad_ix)), InvalidGenerator);
  // non-crystallographic order
  std::string bad_m = "coxeter = [[1,5],[5,1]]\nword = [1]\nface = [1]\n";
  CHECK_THROWS_AS(parse_object_text(bad_m), NotCrystallographicPair);
}

TEST_CASE("round trips") {
  for (const auto& X : {example_b(), example_s4(), standard_object(3), d4_flip_example(),
                        affine_a2_example()}) {
    std::string once = emit_object(X);
    Quadruple Y = to_quadruple(parse_object_text(once));
    CHECK(Y == X);
    CHECK(emit_object(Y) == once);
  }
}

TEST_CASE("quiver emission is deterministic DOT") {
  auto q = root_configuration_quiver(standard_object(3));
  CHECK(emit_quiver(q) ==
        "digraph quiver {\n  1;\n  2;\n  3;\n  1 -> 2;\n  2 -> 3;\n}\n");
  LabeledQuiver empty;
  CHECK(emit_quiver(empty) == "digraph quiver {\n}\n");
}

TEST_CASE("hall element emission") {
  CHECK(emit_hall_element(hall_zero_class()) == "1 cox=[] word=[] face=[]\n");
  CHECK(emit_hall_element(HallElement{}) == "");
  auto X = standard_object(3);
  auto q = root_configuration_quiver(X);
  auto prod = sx_hall_product(q, {{make_sx_object(q, {{2}}), 1}},
                              {{make_sx_object(q, {{1}}), 1}});
  CHECK(emit_sx_sum(prod) == "1 [[1],[2]]\n1 [[1,2]]\n");
}

TEST_CASE("component list parsing") {
  CHECK(parse_component_list("[[1,2],[3]]") ==
        std::vector<std::vector<int>>{{1, 2}, {3}});
  CHECK(parse_component_list("[]").empty());
  CHECK_THROWS_AS(parse_component_list("[1,2]"), ParseError);
}

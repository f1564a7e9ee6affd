// Command-line front end: parse quadruple files, run the library's
// computations, and print stable text renderings.
//
// Exit codes: 0 on a clean pass, 1 when a check fails, 2 on input errors.

#include <CLI11.hpp>
#include <iostream>

#include "swc/io.hpp"

using namespace swc;

namespace {

Quadruple load(const std::string& path) { return to_quadruple(parse_object_file(path)); }

SxSum sx_sum_from_text(const LabeledQuiver& q, const std::string& text) {
  return {{make_sx_object(q, parse_component_list(text)), 1}};
}

F1Sum f1_sum_from_text(const LabeledQuiver& q, const std::string& text) {
  return {{make_f1rep(q, parse_component_list(text)), 1}};
}

int run(int argc, char** argv) {
  CLI::App app{"subword complex categories: exact root functions, flats, Hall "
               "algebras, root configuration quivers and flips"};
  app.require_subcommand(1);

  std::size_t budget = default_budget();
  app.add_option("--budget", budget, "cap on enumeration steps for the structural checks");

  std::string file, file2, left, right;
  int position = 0;
  int rank = 0;

  auto* c_validate = app.add_subcommand("validate", "parse an object file and echo it back");
  c_validate->add_option("file", file)->required();

  auto* c_facets = app.add_subcommand("facets", "list the facets of (W, Q, pi)");
  c_facets->add_option("file", file)->required();

  auto* c_roots = app.add_subcommand("roots", "print the root function");
  c_roots->add_option("file", file)->required();

  auto* c_flats = app.add_subcommand("flats", "list irreducible flats and their classes");
  c_flats->add_option("file", file)->required();

  auto* c_hall_mul = app.add_subcommand("hall-mul", "class of the direct sum of two objects");
  c_hall_mul->add_option("file", file)->required();
  c_hall_mul->add_option("file2", file2)->required();

  auto* c_hall_comul = app.add_subcommand("hall-comul", "decomposition coproduct of an object");
  c_hall_comul->add_option("file", file)->required();

  auto* c_quiver = app.add_subcommand("quiver", "root configuration quiver, DOT text");
  c_quiver->add_option("file", file)->required();

  auto* c_sx_mul = app.add_subcommand("sx-mul", "subquiver Hall product of two classes");
  c_sx_mul->add_option("file", file)->required();
  c_sx_mul->add_option("left", left, "component list, e.g. [[2]]")->required();
  c_sx_mul->add_option("right", right)->required();

  auto* c_sx_comul = app.add_subcommand("sx-comul", "disjoint-union coproduct of a class");
  c_sx_comul->add_option("file", file)->required();
  c_sx_comul->add_option("left", left, "component list")->required();

  auto* c_f1_mul = app.add_subcommand("f1-mul", "representation Hall product of two classes");
  c_f1_mul->add_option("file", file)->required();
  c_f1_mul->add_option("left", left)->required();
  c_f1_mul->add_option("right", right)->required();

  auto* c_iso = app.add_subcommand("iso-check",
                                   "compare the two Hall algebras' structure constants");
  c_iso->add_option("file", file)->required();

  auto* c_flip = app.add_subcommand("flip", "flip at a folded position along its rank-one flat");
  c_flip->add_option("file", file)->required();
  c_flip->add_option("position", position)->required();

  auto* c_serre = app.add_subcommand("serre-check", "generator relations on a path quiver");
  c_serre->add_option("rank", rank)->required();

  auto* c_axioms = app.add_subcommand("axioms-check",
                                      "structural checks: coproduct coassociativity and "
                                      "product compatibility");
  c_axioms->add_option("file", file)->required();

  CLI11_PARSE(app, argc, argv);

  if (c_validate->parsed()) {
    Quadruple X = load(file);
    std::cout << emit_object(X);
    std::cout << "irreducible = " << (X.is_irreducible() ? "yes" : "no") << "\n";
    std::cout << "root-independent = " << (X.is_root_independent() ? "yes" : "no") << "\n";
    std::cout << "class = " << class_key_to_string(canonical_class(X)) << "\n";
    return 0;
  }
  if (c_facets->parsed()) {
    ObjectFile of = parse_object_file(file);
    GroupElement pi = of.pi_word ? word_to_element(*of.system, *of.pi_word)
                                 : to_quadruple(of).pi;
    for (const auto& F : facets(*of.system, of.word, pi)) {
      std::cout << "[";
      for (std::size_t i = 0; i < F.size(); ++i) std::cout << (i ? "," : "") << F[i];
      std::cout << "]\n";
    }
    return 0;
  }
  if (c_roots->parsed()) {
    Quadruple X = load(file);
    auto roots = X.root_function();
    for (int l = 1; l <= X.n(); ++l) {
      std::cout << l << (X.in_face(l) ? " folded     [" : " traversing [");
      for (int i = 0; i < X.rank(); ++i) std::cout << (i ? "," : "") << roots[l - 1][i];
      std::cout << "]\n";
    }
    return 0;
  }
  if (c_flats->parsed()) {
    Quadruple X = load(file);
    for (const auto& F : irreducible_flats(X)) {
      std::cout << "[";
      for (std::size_t i = 0; i < F.size(); ++i) std::cout << (i ? "," : "") << F[i];
      std::cout << "] " << class_key_to_string(canonical_class(induced_quadruple(X, F)))
                << "\n";
    }
    return 0;
  }
  if (c_hall_mul->parsed()) {
    std::cout << emit_hall_element(hall_product(hall_class(load(file)), hall_class(load(file2))));
    return 0;
  }
  if (c_hall_comul->parsed()) {
    std::cout << emit_tensor_element(hall_coproduct(load(file)));
    return 0;
  }
  if (c_quiver->parsed()) {
    std::cout << emit_quiver(root_configuration_quiver(load(file)));
    return 0;
  }
  if (c_sx_mul->parsed()) {
    auto q = root_configuration_quiver(load(file));
    std::cout << emit_sx_sum(
        sx_hall_product(q, sx_sum_from_text(q, left), sx_sum_from_text(q, right)));
    return 0;
  }
  if (c_sx_comul->parsed()) {
    auto q = root_configuration_quiver(load(file));
    std::cout << emit_sx_tensor(sx_coproduct(make_sx_object(q, parse_component_list(left))));
    return 0;
  }
  if (c_f1_mul->parsed()) {
    auto q = root_configuration_quiver(load(file));
    std::cout << emit_f1_sum(
        f1_hall_product(q, f1_sum_from_text(q, left), f1_sum_from_text(q, right)));
    return 0;
  }
  if (c_iso->parsed()) {
    auto report = psi_iso_check(load(file));
    std::cout << "pairs checked: " << report.pairs_checked << "\n";
    for (const auto& m : report.mismatches) std::cout << "mismatch: " << m << "\n";
    std::cout << (report.pass ? "structure constants agree\n" : "structure constants differ\n");
    return report.pass ? 0 : 1;
  }
  if (c_flip->parsed()) {
    Quadruple X = load(file);
    Flat F = flat_of_subspace(X, {position});
    Quadruple Y = flip(X, F, position);
    std::cout << emit_object(Y);
    if (Y.is_root_independent()) std::cout << emit_quiver(root_configuration_quiver(Y));
    return 0;
  }
  if (c_serre->parsed()) {
    bool ok = serre_check(rank);
    std::cout << (ok ? "relations hold\n" : "relations fail\n");
    return ok ? 0 : 1;
  }
  if (c_axioms->parsed()) {
    Quadruple X = load(file);
    bool coassoc = coassociativity_check(X, budget);
    std::cout << "coassociativity: " << (coassoc ? "pass" : "fail") << "\n";
    bool compat = bialgebra_compat_check(X, X, budget);
    std::cout << "product-coproduct compatibility: " << (compat ? "pass" : "fail") << "\n";
    return (coassoc && compat) ? 0 : 1;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

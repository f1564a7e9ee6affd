// Python bindings for the main operations: object construction and
// validation, root functions, flats, Hall products and coproducts, root
// configuration quivers, flips, and the structural checks.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "swc/io.hpp"

namespace py = pybind11;
using namespace swc;

namespace {

Quadruple quad_from_parts(const std::string& coxeter, const Word& word,
                          const std::vector<int>& face,
                          const std::optional<Word>& pi_word) {
  auto system = std::make_shared<const CoxeterSystem>(CoxeterSystem::preset(coxeter));
  if (pi_word) return Quadruple::make_with_pi(system, word, face, *pi_word);
  return Quadruple::make(system, word, face);
}

std::vector<std::pair<int, int>> quiver_edges(const LabeledQuiver& q) {
  return {q.arrows.begin(), q.arrows.end()};
}

py::dict sx_sum_to_dict(const SxSum& s) {
  py::dict out;
  for (const auto& [k, c] : s) out[py::cast(sx_object_to_string(k))] = c;
  return out;
}

py::dict f1_sum_to_dict(const F1Sum& s) {
  py::dict out;
  for (const auto& [k, c] : s) out[py::cast(sx_object_to_string(SXObject{k.summands}))] = c;
  return out;
}

}  // namespace

PYBIND11_MODULE(swcat, m) {
  m.doc() = "exact computations with subword complexes: root functions, flats, "
            "Hall algebras, root configuration quivers, flips";

  py::register_exception<Error>(m, "SwcError", PyExc_ValueError);

  py::class_<Quadruple>(m, "Quadruple")
      .def(py::init(&quad_from_parts), py::arg("coxeter"), py::arg("word"), py::arg("face"),
           py::arg("pi") = std::nullopt)
      .def_static("from_text",
                  [](const std::string& text) { return to_quadruple(parse_object_text(text)); })
      .def_static("from_matrix",
                  [](const std::vector<std::vector<int>>& cox, const Word& word,
                     const std::vector<int>& face) {
                    auto system = std::make_shared<const CoxeterSystem>(
                        CoxeterSystem::from_coxeter_matrix(cox));
                    return Quadruple::make(system, word, face);
                  })
      .def_property_readonly("coxeter_matrix",
                             [](const Quadruple& x) { return x.system->cox_matrix(); })
      .def_property_readonly("finite", [](const Quadruple& x) { return x.system->finite(); })
      .def_static("zero", &Quadruple::zero_object)
      .def_property_readonly("word", [](const Quadruple& x) { return x.word; })
      .def_property_readonly("face", [](const Quadruple& x) { return x.face; })
      .def_property_readonly("rank", &Quadruple::rank)
      .def_property_readonly("length", &Quadruple::n)
      .def("root_function", [](const Quadruple& x) { return x.root_function(); })
      .def("is_irreducible", &Quadruple::is_irreducible)
      .def("is_root_independent", &Quadruple::is_root_independent)
      .def("canonical_key", [](const Quadruple& x) {
        return class_key_to_string(canonical_class(x));
      })
      .def("direct_sum", [](const Quadruple& x, const Quadruple& y) { return direct_sum(x, y); })
      .def("equivalent", [](const Quadruple& x, const Quadruple& y) { return equivalent(x, y); })
      .def("irreducible_flats", [](const Quadruple& x) { return irreducible_flats(x); })
      .def("flat_of_subspace",
           [](const Quadruple& x, const std::vector<int>& gens) {
             return flat_of_subspace(x, gens);
           })
      .def("induced", [](const Quadruple& x, const Flat& f) { return induced_quadruple(x, f); })
      .def("complements", [](const Quadruple& x, const Flat& f) { return complements(x, f); })
      .def("flippable_flats", [](const Quadruple& x) { return flippable_flats(x); })
      .def("flip",
           [](const Quadruple& x, int position) {
             return flip(x, flat_of_subspace(x, {position}), position);
           })
      .def("partner_position", [](const Quadruple& x, int i) { return partner_position(x, i); })
      .def("is_special_vertex", [](const Quadruple& x, int i) { return is_special_vertex(x, i); })
      .def("quiver",
           [](const Quadruple& x) {
             auto q = root_configuration_quiver(x);
             return py::make_tuple(q.vertices, quiver_edges(q));
           })
      .def("quiver_dot",
           [](const Quadruple& x) { return emit_quiver(root_configuration_quiver(x)); })
      .def("flip_reflection",
           [](const Quadruple& x, int i) {
             auto [y, q] = flip_reflection(x, i);
             return py::make_tuple(y, q.vertices, quiver_edges(q));
           })
      .def("hall_coproduct",
           [](const Quadruple& x) {
             py::dict out;
             for (const auto& [k, c] : hall_coproduct(x))
               out[py::make_tuple(class_key_to_string(k.first),
                                  class_key_to_string(k.second))] = c;
             return out;
           })
      .def("coassociativity_check",
           [](const Quadruple& x) { return coassociativity_check(x); })
      .def("emit", [](const Quadruple& x) { return emit_object(x); })
      .def("__repr__", [](const Quadruple& x) {
        std::ostringstream os;
        os << "Quadruple(" << class_key_to_string(canonical_class(x)) << ")";
        return os.str();
      });

  m.def("hall_product", [](const Quadruple& x, const Quadruple& y) {
    py::dict out;
    for (const auto& [k, c] : hall_product(hall_class(x), hall_class(y)))
      out[py::cast(class_key_to_string(k))] = c;
    return out;
  });

  m.def("sx_mul", [](const Quadruple& x, const std::vector<std::vector<int>>& a,
                     const std::vector<std::vector<int>>& b) {
    auto q = root_configuration_quiver(x);
    return sx_sum_to_dict(sx_hall_product(q, {{make_sx_object(q, a), 1}},
                                          {{make_sx_object(q, b), 1}}));
  });

  m.def("f1_mul", [](const Quadruple& x, const std::vector<std::vector<int>>& a,
                     const std::vector<std::vector<int>>& b) {
    auto q = root_configuration_quiver(x);
    return f1_sum_to_dict(
        f1_hall_product(q, {{make_f1rep(q, a), 1}}, {{make_f1rep(q, b), 1}}));
  });

  m.def("psi_iso_check", [](const Quadruple& x) {
    auto report = psi_iso_check(x);
    return py::make_tuple(report.pass, report.pairs_checked, report.mismatches);
  });

  m.def("serre_check", &serre_check, py::arg("n"));

  m.def("bialgebra_compat_check", [](const Quadruple& x, const Quadruple& y) {
    return bialgebra_compat_check(x, y);
  });
}

#pragma once

#include <optional>
#include <string>

#include "swc/f1rep.hpp"
#include "swc/hall.hpp"

namespace swc {

// Key = value object files:
//   coxeter = A3              (preset, or a bracketed Coxeter matrix; 0 = infinity)
//   cartan  = [[2,-1],[-1,2]] (optional integer Cartan override)
//   word    = [1,2,1]
//   face    = [2]             (optional when pi is given and only facets are wanted)
//   pi      = [1,2]           (optional; derived from the face complement)
// '#' starts a comment.
struct ObjectFile {
  CoxeterPtr system;
  Word word;
  std::optional<std::vector<int>> face;
  std::optional<Word> pi_word;
};

ObjectFile parse_object_text(const std::string& text);
ObjectFile parse_object_file(const std::string& path);
Quadruple to_quadruple(const ObjectFile& file);

std::string emit_object(const Quadruple& X);

// Deterministic DOT text, sorted vertices and edges.
std::string emit_quiver(const LabeledQuiver& q);

std::string emit_hall_element(const HallElement& h);
std::string emit_tensor_element(const TensorElement& t);

std::string sx_object_to_string(const SXObject& o);
std::string emit_sx_sum(const SxSum& s);
std::string emit_sx_tensor(const SxTensor& t);
std::string emit_f1_sum(const F1Sum& s);

// "[[1,2],[3]]" -> list of vertex lists
std::vector<std::vector<int>> parse_component_list(const std::string& text);

}  // namespace swc

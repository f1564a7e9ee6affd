#include "swc/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace swc {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  long long integer() {
    skip_ws();
    std::size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw ParseError("expected an integer in '" + s + "'");
    return std::stoll(s.substr(start, i - start));
  }
};

std::vector<long long> parse_int_list(const std::string& text) {
  Cursor c{text};
  if (!c.eat('[')) throw ParseError("expected '[' in list: " + text);
  std::vector<long long> out;
  c.skip_ws();
  if (c.eat(']')) return out;
  while (true) {
    out.push_back(c.integer());
    if (c.eat(']')) break;
    if (!c.eat(',')) throw ParseError("expected ',' or ']' in list: " + text);
  }
  c.skip_ws();
  if (c.i != text.size()) throw ParseError("trailing characters after list: " + text);
  return out;
}

std::vector<std::vector<long long>> parse_matrix(const std::string& text) {
  Cursor c{text};
  if (!c.eat('[')) throw ParseError("expected '[' in matrix: " + text);
  std::vector<std::vector<long long>> out;
  c.skip_ws();
  if (c.eat(']')) return out;
  while (true) {
    if (!c.eat('[')) throw ParseError("expected '[' starting a row: " + text);
    std::vector<long long> row;
    if (!c.eat(']')) {
      while (true) {
        row.push_back(c.integer());
        if (c.eat(']')) break;
        if (!c.eat(',')) throw ParseError("expected ',' or ']' in row: " + text);
      }
    }
    out.push_back(std::move(row));
    if (c.eat(']')) break;
    if (!c.eat(',')) throw ParseError("expected ',' or ']' between rows: " + text);
  }
  return out;
}

std::vector<int> to_ints(const std::vector<long long>& v) {
  return std::vector<int>(v.begin(), v.end());
}

std::string list_to_string(const std::vector<int>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "]";
  return os.str();
}

template <typename T>
std::string matrix_to_string(const std::vector<std::vector<T>>& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    os << (i ? "," : "") << "[";
    for (std::size_t j = 0; j < m[i].size(); ++j) os << (j ? "," : "") << m[i][j];
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace

ObjectFile parse_object_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<std::string> coxeter_value, cartan_value;
  std::optional<std::vector<int>> word, face, pi;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("line " + std::to_string(lineno) + ": expected 'key = value'");
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    auto trim = [](std::string s) {
      std::size_t b = s.find_first_not_of(" \t\r");
      std::size_t e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    key = trim(key);
    value = trim(value);
    if (key == "coxeter")
      coxeter_value = value;
    else if (key == "cartan")
      cartan_value = value;
    else if (key == "word")
      word = to_ints(parse_int_list(value));
    else if (key == "face")
      face = to_ints(parse_int_list(value));
    else if (key == "pi")
      pi = to_ints(parse_int_list(value));
    else
      throw ParseError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
  if (!coxeter_value) throw ParseError("missing 'coxeter' entry");
  if (!word) throw ParseError("missing 'word' entry");

  ObjectFile file;
  if (!coxeter_value->empty() && coxeter_value->front() == '[') {
    auto m = parse_matrix(*coxeter_value);
    std::vector<std::vector<int>> cox;
    for (const auto& row : m) cox.emplace_back(row.begin(), row.end());
    std::optional<std::vector<std::vector<long long>>> cartan;
    if (cartan_value) cartan = parse_matrix(*cartan_value);
    file.system = std::make_shared<const CoxeterSystem>(
        CoxeterSystem::from_coxeter_matrix(cox, cartan));
  } else {
    if (cartan_value) {
      auto preset = CoxeterSystem::preset(*coxeter_value);
      file.system = std::make_shared<const CoxeterSystem>(
          CoxeterSystem::from_coxeter_matrix(preset.cox_matrix(), parse_matrix(*cartan_value)));
    } else {
      file.system = std::make_shared<const CoxeterSystem>(CoxeterSystem::preset(*coxeter_value));
    }
  }
  file.word = *word;
  file.face = face;
  file.pi_word = pi;
  return file;
}

ObjectFile parse_object_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open object file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_object_text(buffer.str());
}

Quadruple to_quadruple(const ObjectFile& file) {
  if (!file.face) throw ValidationError("object file carries no face");
  if (file.pi_word)
    return Quadruple::make_with_pi(file.system, file.word, *file.face, *file.pi_word);
  return Quadruple::make(file.system, file.word, *file.face);
}

std::string emit_object(const Quadruple& X) {
  std::ostringstream os;
  os << "coxeter = " << matrix_to_string(X.system->cox_matrix()) << "\n";
  os << "cartan = " << matrix_to_string(X.system->cartan_matrix()) << "\n";
  os << "word = " << list_to_string(X.word) << "\n";
  os << "face = " << list_to_string(X.face) << "\n";
  // the complement spelling of pi, outermost letter first
  std::vector<int> pi_word;
  for (int l = 1; l <= X.n(); ++l)
    if (!X.in_face(l)) pi_word.push_back(X.word[l - 1]);
  os << "pi = " << list_to_string(pi_word) << "\n";
  return os.str();
}

std::string emit_quiver(const LabeledQuiver& q) {
  std::ostringstream os;
  os << "digraph quiver {\n";
  for (int v : q.vertices) os << "  " << v << ";\n";
  for (const auto& [a, b] : q.arrows) os << "  " << a << " -> " << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string emit_hall_element(const HallElement& h) {
  std::ostringstream os;
  for (const auto& [k, c] : h) os << c << " " << class_key_to_string(k) << "\n";
  return os.str();
}

std::string emit_tensor_element(const TensorElement& t) {
  std::ostringstream os;
  for (const auto& [k, c] : t)
    os << c << " " << class_key_to_string(k.first) << " (x) " << class_key_to_string(k.second)
       << "\n";
  return os.str();
}

std::string sx_object_to_string(const SXObject& o) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < o.comps.size(); ++i) {
    os << (i ? "," : "") << "[";
    for (std::size_t j = 0; j < o.comps[i].size(); ++j) os << (j ? "," : "") << o.comps[i][j];
    os << "]";
  }
  os << "]";
  return os.str();
}

std::string emit_sx_sum(const SxSum& s) {
  std::ostringstream os;
  for (const auto& [k, c] : s) os << c << " " << sx_object_to_string(k) << "\n";
  return os.str();
}

std::string emit_sx_tensor(const SxTensor& t) {
  std::ostringstream os;
  for (const auto& [k, c] : t)
    os << c << " " << sx_object_to_string(k.first) << " (x) " << sx_object_to_string(k.second)
       << "\n";
  return os.str();
}

std::string emit_f1_sum(const F1Sum& s) {
  std::ostringstream os;
  for (const auto& [k, c] : s) os << c << " " << sx_object_to_string(SXObject{k.summands}) << "\n";
  return os.str();
}

std::vector<std::vector<int>> parse_component_list(const std::string& text) {
  auto m = parse_matrix(text);
  std::vector<std::vector<int>> out;
  for (const auto& row : m) out.emplace_back(row.begin(), row.end());
  return out;
}

}  // namespace swc

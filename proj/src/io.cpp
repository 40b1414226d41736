#include "envelope/io.hpp"

#include <fstream>
#include <sstream>

#include "envelope/error.hpp"
#include "json.hpp"

namespace envelope {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  return j.at(key);
}

GradedBasis parse_basis(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "basis must be a list");
  std::vector<BasisElement> elems;
  for (const auto& e : j) {
    BasisElement b;
    if (e.is_array() && e.size() == 2 && e[0].is_string() && e[1].is_number_integer()) {
      b.name = e[0].get<std::string>();
      b.degree = e[1].get<int>();
    } else if (e.is_object() && e.contains("name") && e["name"].is_string()) {
      b.name = e["name"].get<std::string>();
      const json d = e.value("degree", json(0));
      if (!d.is_number_integer()) throw Error(ErrorCode::ParseError, "degree of " + b.name + " is not an integer");
      b.degree = d.get<int>();
    } else {
      throw Error(ErrorCode::ParseError, "bad basis entry " + e.dump());
    }
    for (const auto& other : elems)
      if (other.name == b.name) throw Error(ErrorCode::ParseError, "duplicate basis name " + b.name);
    elems.push_back(b);
  }
  return GradedBasis(elems);
}

int resolve(const json& j, const GradedBasis& basis, const char* what) {
  int i = -1;
  if (j.is_number_integer()) {
    i = j.get<int>();
  } else if (j.is_string()) {
    const std::string s = j.get<std::string>();
    i = basis.index_of(s);
    if (i < 0 && !s.empty() && s.find_first_not_of("0123456789") == std::string::npos) i = std::stoi(s);
  }
  if (i < 0 || static_cast<std::size_t>(i) >= basis.size())
    throw Error(ErrorCode::ParseError, std::string("unknown ") + what + " " + j.dump());
  return i;
}

Scalar parse_coefficient(const json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  throw Error(ErrorCode::ParseError, "coefficient must be a string or an integer: " + j.dump());
}

StructureConstants parse_table(const json& j, const GradedBasis& left, const GradedBasis& right,
                               const GradedBasis& out) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "table must be a list of [i, j, {k: c}]");
  StructureConstants t(left.size(), right.size(), out.size());
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != 3 || !row[2].is_object())
      throw Error(ErrorCode::ParseError, "bad table entry " + row.dump());
    const int a = resolve(row[0], left, "element");
    const int b = resolve(row[1], right, "element");
    for (const auto& [k, c] : row[2].items()) t.add(a, b, resolve(json(k), out, "element"), parse_coefficient(c));
  }
  return t;
}

json table_json(const StructureConstants& t, const GradedBasis& left, const GradedBasis& right,
                const GradedBasis& out) {
  json rows = json::array();
  for (std::size_t i = 0; i < left.size(); ++i)
    for (std::size_t j = 0; j < right.size(); ++j) {
      const auto& terms = t(static_cast<int>(i), static_cast<int>(j));
      if (terms.empty()) continue;
      json o = json::object();
      for (const auto& term : terms) o[out.name(static_cast<std::size_t>(term.index))] = term.coeff.get_str();
      rows.push_back(json::array({left.name(i), right.name(j), o}));
    }
  return rows;
}

// Compact layout: basis on one line, one table row per line.
std::string basis_line(const GradedBasis& b) {
  std::string s = "[";
  for (std::size_t i = 0; i < b.size(); ++i)
    s += (i ? ", [" : "[") + json(b.name(i)).dump() + ", " + std::to_string(b.degree(i)) + "]";
  return s + "]";
}

std::string table_text(const json& rows) {
  if (rows.empty()) return "[]";
  std::string s = "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::string row = rows[i].dump();
    std::string spaced;
    for (std::size_t k = 0; k < row.size(); ++k) {
      spaced += row[k];
      if ((row[k] == ',' || row[k] == ':') && k + 1 < row.size()) spaced += ' ';
    }
    s += "    " + spaced + (i + 1 < rows.size() ? ",\n" : "\n");
  }
  return s + "  ]";
}

std::string object_text(const std::vector<std::pair<std::string, std::string>>& fields) {
  std::string s = "{\n";
  for (std::size_t i = 0; i < fields.size(); ++i)
    s += "  " + json(fields[i].first).dump() + ": " + fields[i].second + (i + 1 < fields.size() ? ",\n" : "\n");
  return s + "}\n";
}

}  // namespace

AlgebraPresentation parse_algebra_unchecked(const std::string& text) {
  const json j = parse_json(text);
  AlgebraPresentation a;
  a.kind = parse_kind(field(j, "kind").get<std::string>());
  a.basis = parse_basis(field(j, "basis"));
  if (j.contains("unit") && !j["unit"].is_null()) a.unit = resolve(j["unit"], a.basis, "unit");
  const bool wants_product = a.kind != Kind::lie, wants_bracket = a.kind == Kind::lie || a.kind == Kind::gerstenhaber;
  if (wants_product) a.product = parse_table(j.value("product", json::array()), a.basis, a.basis, a.basis);
  else if (j.contains("product")) throw Error(ErrorCode::ParseError, "a lie presentation has no product");
  if (wants_bracket) a.bracket = parse_table(j.value("bracket", json::array()), a.basis, a.basis, a.basis);
  else if (j.contains("bracket")) throw Error(ErrorCode::ParseError, "only lie and gerstenhaber kinds take a bracket");
  return a;
}

AlgebraPresentation parse_algebra(const std::string& text) {
  AlgebraPresentation a = parse_algebra_unchecked(text);
  const auto v = validate(a);
  if (!v.empty()) throw Error(ErrorCode::ValidationError, v.front().describe());
  return a;
}

ModulePresentation parse_module(const std::string& text, const AlgebraPresentation& a) {
  const json j = parse_json(text);
  ModulePresentation m;
  m.basis = parse_basis(field(j, "basis"));
  if (a.has_product()) {
    m.left = parse_table(j.value("left", json::array()), a.basis, m.basis, m.basis);
    if (j.contains("right")) m.right = parse_table(j["right"], m.basis, a.basis, m.basis);
    else if (a.kind == Kind::associative) m.right = StructureConstants(m.dim(), a.dim(), m.dim());
  }
  if (a.has_bracket()) m.bracket_action = parse_table(j.value("bracket_action", json::array()), a.basis, m.basis, m.basis);
  const auto v = validate_module(a, m);
  if (!v.empty()) throw Error(ErrorCode::ValidationError, v.front().describe());
  return m;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

AlgebraPresentation load_algebra(const std::string& path) { return parse_algebra(read_file(path)); }
ModulePresentation load_module(const std::string& path, const AlgebraPresentation& a) {
  return parse_module(read_file(path), a);
}

std::string algebra_to_json(const AlgebraPresentation& a) {
  std::vector<std::pair<std::string, std::string>> fields{
      {"kind", json(to_string(a.kind)).dump()},
      {"basis", basis_line(a.basis)},
      {"unit", a.unit ? json(a.basis.name(static_cast<std::size_t>(*a.unit))).dump() : "null"}};
  if (a.product) fields.push_back({"product", table_text(table_json(*a.product, a.basis, a.basis, a.basis))});
  if (a.bracket) fields.push_back({"bracket", table_text(table_json(*a.bracket, a.basis, a.basis, a.basis))});
  return object_text(fields);
}

std::string module_to_json(const ModulePresentation& m, const AlgebraPresentation& a) {
  std::vector<std::pair<std::string, std::string>> fields{{"basis", basis_line(m.basis)}};
  if (m.left) fields.push_back({"left", table_text(table_json(*m.left, a.basis, m.basis, m.basis))});
  if (m.right) fields.push_back({"right", table_text(table_json(*m.right, m.basis, a.basis, m.basis))});
  if (m.bracket_action)
    fields.push_back({"bracket_action", table_text(table_json(*m.bracket_action, a.basis, m.basis, m.basis))});
  return object_text(fields);
}

}  // namespace envelope

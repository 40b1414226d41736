#pragma once

#include <string>

#include "envelope/algebras.hpp"

namespace envelope {

// JSON presentations. Algebra: {"kind", "basis": [{"name", "degree"} or [name, degree]],
// "unit", "product", "bracket"}; tables are lists of [i, j, {k: "p/q"}] where i, j, k are
// basis names or indices. Module: {"basis", "left", "right", "bracket_action"} with the
// algebra letter first in left/bracket_action and second in right.
// Malformed input throws ParseError; failed axioms throw ValidationError naming the
// first violation ("Antisym @ (e,e)").
AlgebraPresentation parse_algebra(const std::string& text);
ModulePresentation parse_module(const std::string& text, const AlgebraPresentation& a);
AlgebraPresentation load_algebra(const std::string& path);
ModulePresentation load_module(const std::string& path, const AlgebraPresentation& a);

// Without validation; used to inspect broken inputs.
AlgebraPresentation parse_algebra_unchecked(const std::string& text);

std::string algebra_to_json(const AlgebraPresentation& a);
std::string module_to_json(const ModulePresentation& m, const AlgebraPresentation& a);

std::string read_file(const std::string& path);  // IoError when unreadable

}  // namespace envelope

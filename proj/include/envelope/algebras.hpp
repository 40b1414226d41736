#pragma once

#include <optional>
#include <string>
#include <vector>

#include "envelope/graded.hpp"

namespace envelope {

enum class Kind { associative, commutative, lie, gerstenhaber };

const char* to_string(Kind k);
Kind parse_kind(const std::string& s);

struct Term {
  int index;
  Scalar coeff;
};

// Bilinear table (i, j) -> sum_k c_ij^k e_k.
class StructureConstants {
 public:
  StructureConstants() = default;
  StructureConstants(std::size_t left_dim, std::size_t right_dim, std::size_t out_dim);

  void add(int i, int j, int k, const Scalar& c);
  const std::vector<Term>& operator()(int i, int j) const;

  std::size_t left_dim() const { return left_; }
  std::size_t right_dim() const { return right_; }
  std::size_t out_dim() const { return out_; }
  bool is_zero() const;

 private:
  std::size_t left_ = 0, right_ = 0, out_ = 0;
  std::vector<std::vector<Term>> table_;
};

struct AlgebraPresentation {
  Kind kind = Kind::associative;
  GradedBasis basis;
  std::optional<StructureConstants> product;
  std::optional<StructureConstants> bracket;
  std::optional<int> unit;

  std::size_t dim() const { return basis.size(); }
  int degree(int i) const { return basis.degree(static_cast<std::size_t>(i)); }
  // Degree in the once-shifted space.
  int shifted(int i) const { return degree(i) - 1; }
  bool has_product() const { return product.has_value(); }
  bool has_bracket() const { return bracket.has_value(); }
};

// Actions of an algebra A on M: left (a, v), right (v, a), bracket_action (a, v).
struct ModulePresentation {
  GradedBasis basis;
  std::optional<StructureConstants> left;
  std::optional<StructureConstants> right;
  std::optional<StructureConstants> bracket_action;

  std::size_t dim() const { return basis.size(); }
};

struct Violation {
  std::string axiom;
  std::vector<std::string> elements;
  std::string describe() const;
};

std::vector<Violation> validate(const AlgebraPresentation& a);
std::vector<Violation> validate_module(const AlgebraPresentation& a, const ModulePresentation& m);

// Right action, derived by graded symmetry from the left one when absent for
// commutative kinds; zero when absent otherwise.
StructureConstants effective_right_action(const AlgebraPresentation& a, const ModulePresentation& m);

AlgebraPresentation semidirect(const AlgebraPresentation& a, const ModulePresentation& m);
AlgebraPresentation semidirect_unchecked(const AlgebraPresentation& a, const ModulePresentation& m);

// Gerstenhaber helpers: the underlying commutative algebra, and the bracket as a
// graded Lie algebra on G[1].
AlgebraPresentation forget_bracket(const AlgebraPresentation& g);
AlgebraPresentation shifted_bracket_as_lie(const AlgebraPresentation& g);

// Bilinear extension of a table to letter chains.
LetterChain apply_table(const StructureConstants& t, int i, int j);

}  // namespace envelope

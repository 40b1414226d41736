#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "envelope/algebras.hpp"

namespace envelope {

// Arity-indexed components D_r / F_r: words of length r -> single-letter chains.
struct TaylorCoefficients {
  int degree = 0;
  std::map<int, std::map<Letters, LetterChain>> maps;

  void set(const Letters& w, const LetterChain& value);
  const LetterChain* find(const Letters& w) const;
  int max_arity() const { return maps.empty() ? 0 : maps.rbegin()->first; }
};

std::vector<std::pair<Letters, Letters>> deconcat(const Letters& w);

using WordPair = std::pair<Letters, Letters>;
Chain<WordPair> deconcat_chain(const WordChain& c);

// Coderivation of the tensor coalgebra with the given Taylor coefficients;
// `degrees` are the shifted degrees of the source alphabet.
WordChain lift_coderivation(const TaylorCoefficients& t, const Letters& w, const std::vector<int>& degrees);
WordChain lift_coderivation(const TaylorCoefficients& t, const WordChain& c, const std::vector<int>& degrees);
// Coalgebra morphism (degree 0) with the given Taylor coefficients.
WordChain lift_morphism(const TaylorCoefficients& t, const Letters& w);
WordChain lift_morphism(const TaylorCoefficients& t, const WordChain& c);
WordChain single_letter_part(const WordChain& c);

// m_2(a, b) = (-1)^{deg a} ab on A[1].
TaylorCoefficients product_coderivation(const AlgebraPresentation& a);
// The lifted coderivation m on one word.
WordChain bar_m(const AlgebraPresentation& a, const Letters& w);
WordChain bar_m(const AlgebraPresentation& a, const WordChain& c);

std::vector<Letters> all_words(int alphabet, int length);
// Words with exactly one letter >= dim_a; ordered by the module position, then
// lexicographically.
std::vector<Letters> mixed_words(int dim_a, int dim_m, int length);

// Words of one length, possibly modulo a subspace of relations; basis vectors
// are the ambient words that are not pivots of the relations.
class WordSpace {
 public:
  WordSpace() = default;
  explicit WordSpace(std::vector<Letters> ambient, std::optional<Subspace> relations = std::nullopt);

  std::size_t dim() const { return basis_.size(); }
  std::size_t ambient_dim() const { return ambient_.size(); }
  const Letters& representative(std::size_t i) const { return ambient_[basis_[i]]; }
  const std::vector<Letters>& ambient() const { return ambient_; }
  const std::optional<Subspace>& relations() const { return relations_; }
  bool contains_word(const Letters& w) const { return index_.count(w) != 0; }
  std::size_t ambient_index(const Letters& w) const;

  SparseVector ambient_vector(const WordChain& c) const;
  // Quotient coordinates of a chain of ambient words.
  SparseVector coordinates(const WordChain& c) const;
  WordChain chain_of(const SparseVector& coords) const;

 private:
  std::vector<Letters> ambient_;
  std::map<Letters, std::size_t> index_;
  std::optional<Subspace> relations_;
  std::vector<std::size_t> basis_;
  std::vector<long> basis_pos_;  // ambient index -> basis position or -1
};

WordSpace tensor_space(const AlgebraPresentation& a, int length);
WordSpace mixed_tensor_space(const AlgebraPresentation& a, const ModulePresentation& m, int length);

// Matrix of a chain-level operator between word spaces (computed on representatives).
template <class Op>
SparseMap word_operator_matrix(const WordSpace& src, const WordSpace& tgt, Op op) {
  SparseMap out(tgt.dim(), src.dim());
  for (std::size_t j = 0; j < src.dim(); ++j)
    for (const auto& [i, c] : tgt.coordinates(op(src.representative(j)))) out.add(i, j, c);
  return out;
}

// m : tensor^n A[1] -> tensor^{n-1} A[1].
SparseMap bar_differential(const AlgebraPresentation& a, int n);
// Bar resolution boundary: tensor^{n+1} A -> tensor^n A, alternating products.
SparseMap bar_boundary(const AlgebraPresentation& a, int n);
// h_n : tensor^n A -> tensor^{n+1} A, w -> 1 (x) w.
SparseMap bar_homotopy(const AlgebraPresentation& a, int n);

// Lifted m of A |x M on words with letters >= dim A read as module letters,
// computed from the action tables directly. Terms with two module letters vanish.
WordChain mixed_bar_m(const AlgebraPresentation& a, const ModulePresentation& m, const StructureConstants& right,
                      const Letters& w);

// Throws InvalidInput naming the first failed axiom.
void require_valid(const AlgebraPresentation& a, const ModulePresentation& m);
// Every component of c must have the given degree as a map A[1]^r -> M[1].
void require_cochain_degree(const AlgebraPresentation& a, const ModulePresentation& m, const TaylorCoefficients& c,
                            int expected);

// C_n(A,M) (n+1 letters, one from M) -> C_{n-1}(A,M).
SparseMap hochschild_boundary(const AlgebraPresentation& a, const ModulePresentation& m, int n);
// Same map read off the lifted m of the semidirect product.
SparseMap hochschild_boundary_semidirect(const AlgebraPresentation& a, const ModulePresentation& m, int n);

// Cochains of arity n: column index = word_index * dim(M) + module_index.
SparseMap hochschild_cohomology_coboundary(const AlgebraPresentation& a, const ModulePresentation& m, int n);
std::vector<int> word_cochain_degrees(const AlgebraPresentation& a, const ModulePresentation& m, const WordSpace& src);

// Coboundary of module-valued cochains on word spaces (shared with Harrison).
// src has arity n (n = 0 allowed via the single empty word), tgt arity n+1.
SparseMap word_cochain_coboundary(const AlgebraPresentation& a, const ModulePresentation& m, const WordSpace& src,
                                  const WordSpace& tgt);

struct CocycleReport {
  bool is_morphism = true;
  std::vector<int> morphism_failures;  // input weights where the structure equation fails
  std::vector<int> cocycle_failures;   // arities j with a nonzero coboundary of c_j
  bool verdicts_agree = true;
};

// Cochains are given with values in M (module indices).
SparseVector cochain_vector(const TaylorCoefficients& c, int arity, const WordSpace& src, std::size_t dim_m);
TaylorCoefficients cochain_from_vector(const SparseVector& v, int arity, const WordSpace& src, std::size_t dim_m,
                                       int degree);

CocycleReport morphism_cocycle_check(const AlgebraPresentation& a, const ModulePresentation& m,
                                     const TaylorCoefficients& c, int n_max);
// c_1 = 0, c_n = coboundary of b_{n-1}; b has degree -1.
TaylorCoefficients trivial_cocycle(const AlgebraPresentation& a, const ModulePresentation& m,
                                   const TaylorCoefficients& b, int n_max);
// Whether c_n lies in the image of the coboundary from arity n-1.
bool is_hochschild_coboundary(const AlgebraPresentation& a, const ModulePresentation& m, const TaylorCoefficients& c,
                              int n);

bool in_column_space(const SparseMap& d, const SparseVector& v);

}  // namespace envelope

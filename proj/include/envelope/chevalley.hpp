#pragma once

#include <vector>

#include "envelope/bar.hpp"

namespace envelope {

// Element of S(V[1]) in canonical form: letters sorted by index, odd letters at most once.
using SymWord = Letters;

// All canonical words of n letters drawn from [0, alphabet); deg is the shifted degree per letter.
std::vector<SymWord> sym_words(const std::vector<int>& deg, int alphabet, int n);

// Shifted degrees of the letters of g (and then of M).
std::vector<int> lie_shifted_degrees(const AlgebraPresentation& g, const ModulePresentation* m = nullptr);

std::vector<SymWord> sym_basis(const AlgebraPresentation& g, int n);
// n letters from g and one from M (index dim g + v): a basis of C_n(g,M).
std::vector<SymWord> sym_basis(const AlgebraPresentation& g, const ModulePresentation& m, int n);

// Product of a sequence of letters in S(V[1]): canonical word and sign (0 if it vanishes).
std::pair<SymWord, int> sym_product(const Letters& letters, const std::vector<int>& deg);

struct SymSplit {
  SymWord left;
  SymWord right;
  Scalar coeff;
};
// Sum over I |_| J = positions, both nonempty, of eps(I,J) a_I (x) a_J.
std::vector<SymSplit> delta_sym(const SymWord& w, const std::vector<int>& deg);
Chain<WordPair> delta_sym_chain(const WordChain& c, const std::vector<int>& deg);

// D(w) = sum over I |_| J with I nonempty (J may be empty) of eps D_|I|(a_I) . a_J.
WordChain lift_coderivation_sym(const TaylorCoefficients& t, const SymWord& w, const std::vector<int>& deg);
WordChain lift_coderivation_sym(const TaylorCoefficients& t, const WordChain& c, const std::vector<int>& deg);
// Degree-0 morphism: each unordered partition of the positions once, blocks by first position.
WordChain lift_morphism_sym(const TaylorCoefficients& t, const SymWord& w, const std::vector<int>& deg_src,
                            const std::vector<int>& deg_tgt);
WordChain lift_morphism_sym(const TaylorCoefficients& t, const WordChain& c, const std::vector<int>& deg_src,
                            const std::vector<int>& deg_tgt);

// l(a.b) = (-1)^{deg a}[a,b] on canonical pairs.
TaylorCoefficients bracket_coderivation(const AlgebraPresentation& g);
// The same on S(g[1] + M[1]) from the action table: l(a.v) = (-1)^{deg a} a v, l(v.w) = 0.
TaylorCoefficients module_bracket_coderivation(const AlgebraPresentation& g, const ModulePresentation& m);
WordChain lie_ell(const AlgebraPresentation& g, const SymWord& w);
WordChain lie_ell(const AlgebraPresentation& g, const WordChain& c);

// l : S^n(g[1]) -> S^{n-1}(g[1]).
SparseMap lie_differential(const AlgebraPresentation& g, int n);
// C_n(g,M) -> C_{n-1}(g,M); n = 0 gives the zero map onto the zero space.
SparseMap chevalley_boundary(const AlgebraPresentation& g, const ModulePresentation& m, int n);
SparseMap chevalley_boundary_semidirect(const AlgebraPresentation& g, const ModulePresentation& m, int n);

// Cochains L(S^n(g[1]), M[1]), column = basis_index * dim(M) + module index.
SparseMap chevalley_cohomology_coboundary(const AlgebraPresentation& g, const ModulePresentation& m, int n);
std::vector<int> sym_cochain_degrees(const AlgebraPresentation& g, const ModulePresentation& m, int n);

CocycleReport l_infty_morphism_cocycle_check(const AlgebraPresentation& g, const ModulePresentation& m,
                                             const TaylorCoefficients& c, int n_max);
// c = l_h o (iota . b) + b o l_g (graded commutator with the odd b), arities 2..n_max.
TaylorCoefficients l_infty_trivial_cocycle(const AlgebraPresentation& g, const ModulePresentation& m,
                                           const TaylorCoefficients& b, int n_max);
bool is_chevalley_coboundary(const AlgebraPresentation& g, const ModulePresentation& m, const TaylorCoefficients& c,
                             int n);

}  // namespace envelope

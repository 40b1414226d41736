#pragma once

#include <vector>

#include "envelope/bar.hpp"

namespace envelope {

// bat_{p,q}(alpha, beta): signed sum over the (p,q)-shuffles. `degrees` is indexed
// by letter and is used as given (pass shifted degrees for R[1]).
WordChain shuffle_product(const Letters& alpha, const Letters& beta, const std::vector<int>& degrees);

// Span of every bat_{p,n-p}(w[0..p), w[p..n)) for w among the ambient words. Shuffles
// keep the letter multiset, so the ambient list must be closed under permutations.
Subspace shuffle_subspace(const std::vector<Letters>& ambient, const std::vector<int>& degrees);

// The quotient of tensor^n R[1] by shuffles.
WordSpace harrison_chain_space(const AlgebraPresentation& r, int n);
// Words of length n with one module letter (index dim R + v), modulo the shuffles of R |x M.
WordSpace harrison_chain_space(const AlgebraPresentation& r, const ModulePresentation& m, int n);

// Shifted degrees of R letters followed by M letters.
std::vector<int> mixed_shifted_degrees(const AlgebraPresentation& r, const ModulePresentation* m);

struct SplitTerm {
  Letters left;
  Letters right;
  Scalar coeff;
};
// delta = deconcatenation minus its twisted flip, on shifted degrees.
std::vector<SplitTerm> cobracket_delta(const Letters& w, const std::vector<int>& degrees);
Chain<WordPair> cobracket_chain(const WordChain& c, const std::vector<int>& degrees);

// Whether op maps the relations of src into the relations of tgt.
template <class Op>
bool preserves_relations(const WordSpace& src, const WordSpace& tgt, Op op) {
  if (!src.relations()) return true;
  for (const auto& row : src.relations()->rows()) {
    WordChain c;
    for (const auto& [i, k] : row) accumulate(c, op(src.ambient()[i]), k);
    if (!tgt.coordinates(c).empty()) return false;
  }
  return true;
}

// Lifted m of R on the quotient, tensor^n R[1] -> tensor^{n-1} R[1].
SparseMap harrison_differential(const AlgebraPresentation& r, int n);
// C_n(R,M) (n+1 letters) -> C_{n-1}(R,M), from the action tables.
SparseMap harrison_boundary(const AlgebraPresentation& r, const ModulePresentation& m, int n);
// The same map read off the lifted m of R |x M.
SparseMap harrison_boundary_semidirect(const AlgebraPresentation& r, const ModulePresentation& m, int n);

// Cochains of arity n on the quotient, column index = basis_index * dim(M) + module index.
SparseMap harrison_cohomology_coboundary(const AlgebraPresentation& r, const ModulePresentation& m, int n);

// A cochain given on representatives, evaluated on any word through its class.
LetterChain evaluate_on_class(const TaylorCoefficients& c, const WordSpace& space, const Letters& w);

CocycleReport c_infty_morphism_cocycle_check(const AlgebraPresentation& r, const ModulePresentation& m,
                                             const TaylorCoefficients& c, int n_max);
TaylorCoefficients harrison_trivial_cocycle(const AlgebraPresentation& r, const ModulePresentation& m,
                                            const TaylorCoefficients& b, int n_max);
bool is_harrison_coboundary(const AlgebraPresentation& r, const ModulePresentation& m, const TaylorCoefficients& c,
                            int n);

}  // namespace envelope

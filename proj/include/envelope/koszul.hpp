#pragma once

#include <map>
#include <utility>
#include <vector>

#include "envelope/algebras.hpp"
#include "envelope/report.hpp"

namespace envelope {

// Basis monomial of U(g): indices i1 <= ... <= ik, repeats only at even |a|.
using PBWMonomial = Letters;

bool is_pbw_monomial(const AlgebraPresentation& g, const Letters& w);
std::vector<PBWMonomial> pbw_basis(const AlgebraPresentation& g, int length);

// Normal-ordered expansion of an arbitrary product of basis letters in U(g), using
// a b = (-1)^{|a||b|} b a + [a, b] for a > b and x x = [x, x]/2 for odd x.
WordChain pbw_normal_form(const AlgebraPresentation& g, const Letters& word);
WordChain pbw_multiply(const AlgebraPresentation& g, const PBWMonomial& m, int i);
// Bilinear product of normal-form chains.
WordChain pbw_product(const AlgebraPresentation& g, const WordChain& x, const WordChain& y);

// Canonical form of a wedge of letters of g: a ^ b = -(-1)^{|a||b|} b ^ a. Returns the
// sign, 0 when an even letter repeats.
int wedge_sort(Letters& letters, const std::vector<int>& degree_of);

using KoszulElement = std::pair<PBWMonomial, Letters>;  // u (x) a_{j1} ^ ... ^ a_{jn}
using KoszulChain = Chain<KoszulElement>;

struct KoszulChainSpace {
  int p = 0;
  int n = 0;
  std::vector<KoszulElement> basis;
  std::map<KoszulElement, std::size_t> index;

  std::size_t dim() const { return basis.size(); }
  std::size_t at(const KoszulElement& e) const;
};

// F_p(C)_n: pairs with len(u) + n <= p.
KoszulChainSpace koszul_chain_space(const AlgebraPresentation& g, int p, int n);
// W_p^n = F_p(C)_n / F_{p-1}(C)_n, represented by the pairs with len(u) + n == p.
KoszulChainSpace koszul_graded_piece(const AlgebraPresentation& g, int p, int n);

KoszulChain koszul_boundary(const AlgebraPresentation& g, const KoszulElement& e);
// F_p(C)_n -> F_p(C)_{n-1}; n = 0 is the augmentation onto R (one row).
SparseMap koszul_boundary(const AlgebraPresentation& g, int p, int n);

// Leading part d_n : W_p^n -> W_p^{n-1} (only u a_i, top length kept); n = 0 is the
// augmentation, nonzero only for p = 0.
SparseMap koszul_leading_differential(const AlgebraPresentation& g, int p, int n);
// h_{n+1} : W_p^n -> W_p^{n+1}. The repeated-letter factor counts the occurrences of the
// moved letter in the new wedge. h is zero on the empty monomial; n = -1 gives the unit
// R -> W_p^0 (nonzero only for p = 0).
SparseMap koszul_homotopy(const AlgebraPresentation& g, int p, int n);

// Homology of 0 <- R <- F_p(C)_0 <- ... <- F_p(C)_p <- 0 for every p <= p_max. Weight q in
// the report is the slot F_p(C)_q, weight -1 is R; note carries p.
BettiReport verify_resolution(const AlgebraPresentation& g, int p_max);

}  // namespace envelope

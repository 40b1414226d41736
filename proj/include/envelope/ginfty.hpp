#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "envelope/chevalley.hpp"
#include "envelope/harrison.hpp"
#include "envelope/report.hpp"

namespace envelope {

// X_1 . ... . X_r in S(H[1]): sorted ids of Harrison classes.
using BicoWord = SymWord;
using BicoPair = std::pair<BicoWord, BicoWord>;
using BicoTriple = std::array<BicoWord, 3>;

struct HClass {
  Letters word;            // quotient representative; letters >= dim G belong to M
  int length = 0;
  int weight = 0;          // letters from G
  std::size_t index = 0;   // position in the quotient basis of its length
  bool module = false;
  int degree = 0;          // in H[1]: shifted letter degrees summed, minus 1
};

enum class ModuleRoute { action_tables, semidirect };

// Shuffles of x and y in which some x-letter is immediately followed by a y-letter,
// that pair replaced by its bracket; eps on shifted degrees. Letters >= dim g are read
// as letters of m, bracketed through the bracket action.
WordChain bracket_on_H(const AlgebraPresentation& g, const Letters& x, const Letters& y,
                       const ModulePresentation* m = nullptr);

// kappa(X) = sum_j (-1)^{deg U_j + 1}(U_j (x) V_j + tau(U_j (x) V_j)) on an ambient word;
// `degrees` are the shifted letter degrees (G[1]).
std::vector<SplitTerm> kappa_on_word(const Letters& word, const std::vector<int>& degrees);

class GinftyAlgebra {
 public:
  // Classes of G up to max_weight letters, and with a module, classes with one letter of
  // M and up to max_weight letters of G. Throws InvalidInput when validation fails.
  GinftyAlgebra(const AlgebraPresentation& g, const ModulePresentation* m, int max_weight,
                ModuleRoute route = ModuleRoute::action_tables);
  // Same without validating the presentation (used to watch the structure equation fail).
  static GinftyAlgebra unchecked(const AlgebraPresentation& g, const ModulePresentation* m, int max_weight,
                                 ModuleRoute route = ModuleRoute::action_tables);

  const AlgebraPresentation& algebra() const { return g_; }
  bool has_module() const { return has_module_; }
  const ModulePresentation& module() const { return m_; }
  int max_weight() const { return max_weight_; }

  const std::vector<HClass>& classes() const { return classes_; }
  const std::vector<int>& degrees() const { return degrees_; }
  // Class chain of any word of letters; words with two module letters give 0.
  LetterChain reduce(const Letters& word) const;
  const WordSpace& space(bool module, int length) const;

  std::vector<BicoWord> chain_basis(int weight) const;         // C_N(G)
  std::vector<BicoWord> module_chain_basis(int weight) const;  // C_N(G,M)
  int weight(const BicoWord& w) const;
  int degree(const BicoWord& w) const;
  std::vector<int> shape(const BicoWord& w) const;

  const TaylorCoefficients& m_coefficients() const { return m_coeff_; }
  const TaylorCoefficients& ell_coefficients() const { return ell_coeff_; }
  WordChain m(const BicoWord& w) const;
  WordChain ell(const BicoWord& w) const;
  WordChain m_plus_ell(const BicoWord& w) const;

  Chain<std::pair<int, int>> kappa_on_class(int id) const;
  Chain<BicoPair> kappa(const BicoWord& w) const;
  Chain<BicoPair> delta(const BicoWord& w) const;

 private:
  GinftyAlgebra() = default;
  void build(const AlgebraPresentation& g, const ModulePresentation* m, int max_weight, ModuleRoute route);

  AlgebraPresentation g_;
  AlgebraPresentation gc_;  // product only
  ModulePresentation m_;
  bool has_module_ = false;
  int max_weight_ = 0;
  std::vector<WordSpace> pure_;    // by length, index 0 unused
  std::vector<WordSpace> mixed_;   // by length (module letter included)
  std::vector<HClass> classes_;
  std::vector<int> degrees_;
  std::map<std::pair<int, std::size_t>, int> pure_id_, mixed_id_;
  TaylorCoefficients m_coeff_, ell_coeff_, total_coeff_;
};

// m and l on C_N(G) -> C_{N-1}(G).
std::pair<SparseMap, SparseMap> m_ell_extension(const GinftyAlgebra& a, int n);
SparseMap ginfty_boundary(const GinftyAlgebra& a, int n);

// C_N(G,M) -> C_{N-1}(G,M) from the three-term formula (action tables).
SparseMap chevalley_harrison_boundary(const GinftyAlgebra& a, int n);
// The restriction of (m + l) of G |x M to C_N(G,M); needs a ModuleRoute::semidirect algebra.
SparseMap chevalley_harrison_boundary_restricted(const GinftyAlgebra& a, int n);

// Cochains C^N(G,M): column = basis_index(C_N(G)) * dim M + module index; degree of a
// column (w, v) is |v| - 2 - deg(w).
std::vector<int> ginfty_cochain_degrees(const GinftyAlgebra& a, int n);
SparseMap ginfty_dm(const GinftyAlgebra& a, int n);   // C^N -> C^{N+1}
SparseMap ginfty_dl(const GinftyAlgebra& a, int n);
SparseMap chevalley_harrison_coboundary(const GinftyAlgebra& a, int n);  // d_m + d_l

// c_{p_1...p_r} stored on canonical words; lookups on other orders pick up the sort sign.
struct GinftyCochain {
  int weight = 0;
  std::map<BicoWord, LetterChain> values;

  LetterChain at(const BicoWord& w, const std::vector<int>& degrees) const;
};
SparseVector cochain_vector(const GinftyAlgebra& a, const GinftyCochain& c);
GinftyCochain cochain_from_vector(const GinftyAlgebra& a, int n, const SparseVector& v);
GinftyCochain chevalley_harrison_coboundary(const GinftyAlgebra& a, const GinftyCochain& c);

struct PropertyVerdict {
  std::string name;
  bool holds = true;
  int first_failure_weight = 0;
};
// (m, l, kappa, Delta) laws on every basis word of weight <= max_weight.
std::vector<PropertyVerdict> ginfty_properties(const GinftyAlgebra& a, int max_weight);

// Chain and cochain Betti numbers of C(G,M) for N <= n_max.
BettiReport chevalley_harrison_betti(const AlgebraPresentation& g, const ModulePresentation& m, int n_max);

}  // namespace envelope

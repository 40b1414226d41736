#pragma once

// Seeded generators and small independent oracles shared by the unit tests.

#include <random>
#include <vector>

#include "envelope/algebras.hpp"
#include "envelope/bar.hpp"
#include "envelope/catalog.hpp"
#include "envelope/linalg.hpp"

namespace testing_support {

using namespace envelope;

inline Scalar random_scalar(std::mt19937& rng, int range = 3) {
  std::uniform_int_distribution<int> num(-range, range), den(1, 2);
  return make_scalar(num(rng), den(rng));
}

inline Scalar random_nonzero(std::mt19937& rng, int range = 3) {
  Scalar s;
  do s = random_scalar(rng, range);
  while (s == 0);
  return s;
}

inline int random_int(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Letters random_word(std::mt19937& rng, int alphabet, int length) {
  Letters w(length);
  for (auto& x : w) x = random_int(rng, 0, alphabet - 1);
  return w;
}

inline std::vector<std::vector<Scalar>> dense(const SparseMap& m) {
  std::vector<std::vector<Scalar>> d(m.rows(), std::vector<Scalar>(m.cols()));
  for (const auto& e : m.entries()) d[e.row][e.col] = e.value;
  return d;
}

// Plain Gauss-Jordan over the rationals, no sparsity.
inline std::size_t dense_rank(std::vector<std::vector<Scalar>> a) {
  std::size_t r = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Scalar f = a[i][c] / a[r][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    ++r;
  }
  return r;
}

// Pairwise-inversion form of the Koszul sign, independent of the bubble sort in the library.
inline int inversion_sign(const std::vector<int>& deg, const Permutation& sigma) {
  int s = 1;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    for (std::size_t j = i + 1; j < sigma.size(); ++j)
      if (sigma[i] > sigma[j] && (deg[sigma[i]] * deg[sigma[j]]) % 2 != 0) s = -s;
  return s;
}

inline SparseMap random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, double density = 0.4) {
  std::bernoulli_distribution keep(density);
  SparseMap m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (keep(rng)) m.add(i, j, random_scalar(rng));
  return m;
}

// Random homogeneous cochain of the given degree on the representatives of a word space.
inline TaylorCoefficients random_cochain(std::mt19937& rng, const AlgebraPresentation& a,
                                         const ModulePresentation& m, const WordSpace& src, int degree,
                                         double density = 0.5) {
  std::bernoulli_distribution keep(density);
  TaylorCoefficients c;
  c.degree = degree;
  for (std::size_t q = 0; q < src.dim(); ++q) {
    const Letters& w = src.representative(q);
    int in = 0;
    for (int x : w) in += a.shifted(x);
    LetterChain val;
    for (std::size_t v = 0; v < m.dim(); ++v)
      if (m.basis.degree(v) - 1 - in == degree && keep(rng)) accumulate(val, static_cast<int>(v), random_scalar(rng));
    if (!val.empty()) c.set(w, val);
  }
  return c;
}

inline void merge_into(TaylorCoefficients& into, const TaylorCoefficients& from) {
  for (const auto& [r, table] : from.maps)
    for (const auto& [w, v] : table) into.set(w, v);
}

// Module over A made of copies of the regular module shifted down by 0..depth-1, so that
// degree-zero cochains exist in every arity up to depth.
inline ModulePresentation staircase_module(const AlgebraPresentation& a, int depth) {
  ModulePresentation reg = catalog::regular_module(a);
  ModulePresentation m = reg;
  for (int s = 1; s < depth; ++s) m = catalog::direct_sum(a, m, catalog::shifted_module(a, reg, -s));
  return m;
}

}  // namespace testing_support

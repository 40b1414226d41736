#include <numeric>

#include "doctest.h"
#include "envelope/error.hpp"
#include "support.hpp"

using namespace envelope;
using namespace testing_support;
namespace cat = envelope::catalog;

namespace {

// Ungraded products of letters of A (indices < na) and M (indices >= na).
LetterChain ungraded_product(const AlgebraPresentation& a, const ModulePresentation& m, int x, int y) {
  const int na = static_cast<int>(a.dim());
  LetterChain out;
  if (x < na && y < na) {
    for (const auto& t : (*a.product)(x, y)) accumulate(out, t.index, t.coeff);
  } else if (x < na && y >= na) {
    for (const auto& t : (*m.left)(x, y - na)) accumulate(out, t.index + na, t.coeff);
  } else if (x >= na && y < na) {
    for (const auto& t : (*m.right)(x - na, y)) accumulate(out, t.index + na, t.coeff);
  }
  return out;
}

// The textbook alternating sum sum_i (-1)^i (.. x_i x_{i+1} ..).
WordChain alternating_boundary(const AlgebraPresentation& a, const ModulePresentation& m, const Letters& w) {
  WordChain out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    for (const auto& [k, c] : ungraded_product(a, m, w[i], w[i + 1])) {
      Letters x(w.begin(), w.begin() + i);
      x.push_back(k);
      x.insert(x.end(), w.begin() + i + 2, w.end());
      accumulate(out, x, c * (i % 2 == 0 ? 1 : -1));
    }
  return out;
}

// Textbook Hochschild coboundary of f: A^{(x)n} -> M with the standard signs:
// a_0 f(a_1..) + sum_i (-1)^{i+1} f(..a_i a_{i+1}..) + (-1)^{n+1} f(..a_{n-1}) a_n.
SparseMap textbook_coboundary(const AlgebraPresentation& a, const ModulePresentation& m, int n) {
  const std::size_t dm = m.dim(), na = a.dim();
  auto words_n = n == 0 ? std::vector<Letters>{Letters{}} : all_words(static_cast<int>(na), n);
  auto words_n1 = all_words(static_cast<int>(na), n + 1);
  std::map<Letters, std::size_t> idx;
  for (std::size_t i = 0; i < words_n.size(); ++i) idx[words_n[i]] = i;
  SparseMap out(words_n1.size() * dm, words_n.size() * dm);
  for (std::size_t r = 0; r < words_n1.size(); ++r) {
    const Letters& w = words_n1[r];
    for (std::size_t v = 0; v < dm; ++v) {
      const std::size_t tail = idx[Letters(w.begin() + 1, w.end())];
      for (const auto& t : (*m.left)(w.front(), static_cast<int>(v))) out.add(r * dm + t.index, tail * dm + v, t.coeff);
      const std::size_t head = idx[Letters(w.begin(), w.end() - 1)];
      for (const auto& t : (*m.right)(static_cast<int>(v), w.back()))
        out.add(r * dm + t.index, head * dm + v, t.coeff * ((n + 1) % 2 == 0 ? 1 : -1));
      for (int i = 0; i + 1 <= n; ++i)
        for (const auto& t : (*a.product)(w[i], w[i + 1])) {
          Letters x(w.begin(), w.begin() + i);
          x.push_back(t.index);
          x.insert(x.end(), w.begin() + i + 2, w.end());
          out.add(r * dm + v, idx[x] * dm + v, t.coeff * ((i + 1) % 2 == 0 ? 1 : -1));
        }
    }
  }
  return out;
}

TaylorCoefficients random_taylor(std::mt19937& rng, int alphabet, int max_arity, int degree) {
  TaylorCoefficients t;
  t.degree = degree;
  for (int r = 1; r <= max_arity; ++r)
    for (const auto& w : all_words(alphabet, r)) {
      if (random_int(rng, 0, 2) != 0) continue;
      LetterChain v;
      accumulate(v, random_int(rng, 0, alphabet - 1), random_nonzero(rng));
      if (random_int(rng, 0, 1)) accumulate(v, random_int(rng, 0, alphabet - 1), random_scalar(rng));
      if (!v.empty()) t.set(w, v);
    }
  return t;
}

// (D (x) id + id (x) D) applied to a chain of pairs, with the Koszul sign for D passing u.
Chain<WordPair> derivation_on_pairs(const TaylorCoefficients& t, const Chain<WordPair>& c, const std::vector<int>& deg) {
  Chain<WordPair> out;
  for (const auto& [p, k] : c) {
    for (const auto& [u, a] : lift_coderivation(t, p.first, deg)) accumulate(out, WordPair{u, p.second}, k * a);
    long du = 0;
    for (int x : p.first) du += deg[x];
    const int s = sign_of(du * t.degree);
    for (const auto& [v, b] : lift_coderivation(t, p.second, deg)) accumulate(out, WordPair{p.first, v}, k * b * s);
  }
  return out;
}

Chain<WordPair> morphism_on_pairs(const TaylorCoefficients& t, const Chain<WordPair>& c) {
  Chain<WordPair> out;
  for (const auto& [p, k] : c)
    for (const auto& [u, a] : lift_morphism(t, p.first))
      for (const auto& [v, b] : lift_morphism(t, p.second)) accumulate(out, WordPair{u, v}, k * a * b);
  return out;
}

std::size_t bar_homology(const AlgebraPresentation& a, int n) {
  return homology_dim(bar_boundary(a, n), bar_boundary(a, n + 1));
}

}  // namespace

TEST_CASE("deconcatenation examples") {
  CHECK(deconcat({0}).empty());
  auto two = deconcat({0, 1});
  REQUIRE(two.size() == 1);
  CHECK(two[0] == WordPair{{0}, {1}});
  auto three = deconcat({0, 1, 2});
  REQUIRE(three.size() == 2);
  CHECK(three[0] == WordPair{{0}, {1, 2}});
  CHECK(three[1] == WordPair{{0, 1}, {2}});
}

TEST_CASE("deconcatenation is coassociative") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& w : all_words(2, n)) {
      // (Delta (x) id) Delta and (id (x) Delta) Delta as triples
      Chain<std::vector<Letters>> left, right;
      for (const auto& [u, v] : deconcat(w)) {
        for (const auto& [u1, u2] : deconcat(u)) accumulate(left, std::vector<Letters>{u1, u2, v}, Scalar(1));
        for (const auto& [v1, v2] : deconcat(v)) accumulate(right, std::vector<Letters>{u, v1, v2}, Scalar(1));
      }
      CHECK(left == right);
    }
}

TEST_CASE("lift_coderivation examples") {
  TaylorCoefficients id;
  for (int i = 0; i < 3; ++i) id.set({i}, LetterChain{{i, Scalar(1)}});
  std::vector<int> deg{-1, -1, -1};
  CHECK(lift_coderivation(id, Letters{0, 2, 1}, deg) == WordChain{{{0, 2, 1}, Scalar(3)}});

  // generic ungraded algebra on letters a, b, c with ab -> p, bc -> q
  AlgebraPresentation f;
  f.kind = Kind::associative;
  f.basis = GradedBasis({{"a", 0}, {"b", 0}, {"c", 0}, {"p", 0}, {"q", 0}});
  f.product = StructureConstants(5, 5, 5);
  f.product->add(0, 1, 3, 1);
  f.product->add(1, 2, 4, 1);
  auto m = product_coderivation(f);
  CHECK(lift_coderivation(m, Letters{0, 1}, f.basis.degrees(1)) == WordChain{{{3}, Scalar(-1)}});
  // lifted m on (a,b,c) is minus the alternating sum (ab,c) - (a,bc)
  WordChain abc = lift_coderivation(m, Letters{0, 1, 2}, f.basis.degrees(1));
  CHECK(abc == WordChain{{{3, 2}, Scalar(-1)}, {{0, 4}, Scalar(1)}});
  CHECK(bar_m(f, Letters{0, 1, 2}) == abc);

  // a graded product: (-1)^{deg a} with deg = |a| - 1
  AlgebraPresentation g = f;
  g.basis = GradedBasis({{"a", 1}, {"b", 0}, {"c", 2}, {"p", 1}, {"q", 2}});
  auto mg = product_coderivation(g);
  CHECK(lift_coderivation(mg, Letters{0, 1}, g.basis.degrees(1)) == WordChain{{{3}, Scalar(1)}});
  // second window: prefix deg a = 0, m(b,c) = (-1)^{deg b} q = -q
  CHECK(lift_coderivation(mg, Letters{0, 1, 2}, g.basis.degrees(1)) ==
        WordChain{{{3, 2}, Scalar(1)}, {{0, 4}, Scalar(-1)}});
}

TEST_CASE("lift_morphism examples") {
  TaylorCoefficients id;
  for (int i = 0; i < 2; ++i) id.set({i}, LetterChain{{i, Scalar(1)}});
  CHECK(lift_morphism(id, Letters{1, 0, 1}) == WordChain{{{1, 0, 1}, Scalar(1)}});

  // F_1 = inclusion into a bigger alphabet, F_2 = c2 with generic values
  TaylorCoefficients f = id;
  f.set({0, 1}, LetterChain{{2, Scalar(5)}});
  CHECK(lift_morphism(f, Letters{0, 1}) == WordChain{{{0, 1}, Scalar(1)}, {{2}, Scalar(5)}});

  TaylorCoefficients g;
  g.set({0}, LetterChain{{0, Scalar(1)}});
  g.set({0, 0}, LetterChain{{1, Scalar(1)}});
  // compositions 1+1+1, 1+2, 2+1 (F_3 = 0)
  WordChain out = lift_morphism(g, Letters{0, 0, 0});
  CHECK(out == WordChain{{{0, 0, 0}, Scalar(1)}, {{0, 1}, Scalar(1)}, {{1, 0}, Scalar(1)}});
}

TEST_CASE("lifts round-trip and satisfy their laws") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const int alphabet = random_int(rng, 1, 3);
    std::vector<int> deg(alphabet);
    for (auto& d : deg) d = random_int(rng, -2, 2);
    const int degree = random_int(rng, -1, 2);
    TaylorCoefficients d = random_taylor(rng, alphabet, 3, degree);
    TaylorCoefficients f = random_taylor(rng, alphabet, 3, 0);
    for (int n = 1; n <= 5; ++n)
      for (const auto& w : all_words(alphabet, n)) {
        WordChain proj_d = single_letter_part(lift_coderivation(d, w, deg));
        WordChain proj_f = single_letter_part(lift_morphism(f, w));
        WordChain want_d, want_f;
        if (auto v = d.find(w))
          for (const auto& [x, c] : *v) accumulate(want_d, Letters{x}, c);
        if (auto v = f.find(w))
          for (const auto& [x, c] : *v) accumulate(want_f, Letters{x}, c);
        CHECK(proj_d == want_d);
        CHECK(proj_f == want_f);

        WordChain single{{w, Scalar(1)}};
        CHECK(deconcat_chain(lift_coderivation(d, w, deg)) == derivation_on_pairs(d, deconcat_chain(single), deg));
        CHECK(deconcat_chain(lift_morphism(f, w)) == morphism_on_pairs(f, deconcat_chain(single)));
      }
  }
}

TEST_CASE("m squares to zero exactly when the product is associative") {
  std::vector<AlgebraPresentation> algebras{cat::dual_numbers(), cat::upper_triangular2(), cat::group_algebra_z2(),
                                            forget_bracket(cat::lambda_aff1())};
  int broken = 0;
  for (const auto& a : algebras) {
    for (int n = 2; n <= 4; ++n) CHECK((bar_differential(a, n - 1) * bar_differential(a, n)).is_zero());
    const int d = static_cast<int>(a.dim());
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
          AlgebraPresentation b = a;
          b.kind = Kind::associative;
          b.product->add(i, j, k, 1);
          bool ass = true;
          for (const auto& v : validate(b))
            if (v.axiom == "Ass") ass = false;
          const bool mm = (bar_differential(b, 2) * bar_differential(b, 3)).is_zero();
          CHECK(ass == mm);
          if (!ass) ++broken;
        }
  }
  CHECK(broken > 20);
}

TEST_CASE("bar homotopy") {
  auto a = cat::dual_numbers();
  CHECK(bar_homotopy(a, 1).apply(SparseVector{{0, Scalar(1)}}) == SparseVector{{0, Scalar(1)}});
  for (auto alg : {cat::dual_numbers(), cat::group_algebra_z2(), cat::upper_triangular2()})
    for (int n = 0; n <= 4; ++n) {
      SparseMap lhs = bar_homotopy(alg, n) * bar_boundary(alg, n) + bar_boundary(alg, n + 1) * bar_homotopy(alg, n + 1);
      CHECK(lhs == SparseMap::identity(lhs.rows()));
    }
  AlgebraPresentation nil;
  nil.kind = Kind::commutative;
  nil.basis = GradedBasis({{"x", 0}});
  nil.product = StructureConstants(1, 1, 1);
  CHECK_THROWS_AS(bar_homotopy(nil, 1), Error);
}

TEST_CASE("bar complex is acyclic for unital algebras") {
  auto a = cat::dual_numbers();
  CHECK(bar_homology(a, 3) == 0);
  for (auto alg : {cat::dual_numbers(), cat::group_algebra_z2()})
    for (int n = 1; n <= 4; ++n) CHECK(bar_homology(alg, n) == 0);
  // the non-unital square-zero line is far from acyclic
  AlgebraPresentation nil;
  nil.kind = Kind::commutative;
  nil.basis = GradedBasis({{"x", 0}});
  nil.product = StructureConstants(1, 1, 1);
  CHECK(bar_homology(nil, 2) == 1);
}

TEST_CASE("hochschild boundary examples") {
  auto r = cat::ground_field();
  // with the zero action every product involving v vanishes
  CHECK(hochschild_boundary(r, cat::trivial_module(r), 1).is_zero());
  // M = R as a bimodule over itself: words (v,1), (1,v) -> (v); both hit v with the same sign,
  // since there is no cyclic term to cancel against
  SparseMap d1 = hochschild_boundary(r, cat::regular_module(r), 1);
  CHECK(d1.rows() == 1);
  CHECK(d1.cols() == 2);
  CHECK(d1.at(0, 0) == -1);
  CHECK(d1.at(0, 1) == -1);
  CHECK(rank(d1) == 1);

  auto a = cat::dual_numbers();
  auto m = cat::regular_module(a);
  // C_1 words: (1',1),(1',x),(x',1),(x',x) then (1,1'),(1,x'),(x,1'),(x,x')
  auto words = mixed_words(2, 2, 2);
  REQUIRE(words.size() == 8);
  CHECK(words[0] == Letters{2, 0});
  CHECK(words[4] == Letters{0, 2});
  SparseMap d = hochschild_boundary(a, m, 1);
  // d(x (x) x') = -(x x') = 0 and d(x (x) 1') = -x'
  CHECK(d.column(7).empty());
  CHECK(d.column(6) == SparseVector{{1, Scalar(-1)}});
}

TEST_CASE("hochschild boundary is minus the alternating sum on ungraded input") {
  std::vector<std::pair<AlgebraPresentation, ModulePresentation>> cases{
      {cat::dual_numbers(), cat::regular_module(cat::dual_numbers())},
      {cat::upper_triangular2(), cat::regular_module(cat::upper_triangular2())},
      {cat::group_algebra_z2(), cat::trivial_module(cat::group_algebra_z2(), 2)}};
  for (auto& [a, m] : cases) {
    if (!m.right) m.right = effective_right_action(a, m);
    for (int n = 0; n <= 3; ++n) {
      WordSpace src = mixed_tensor_space(a, m, n + 1), tgt = mixed_tensor_space(a, m, n);
      SparseMap oracle = word_operator_matrix(src, tgt, [&](const Letters& w) { return alternating_boundary(a, m, w); });
      CHECK(hochschild_boundary(a, m, n) == oracle.scaled(-1));
    }
  }
}

TEST_CASE("hochschild complex is the restriction of the semidirect bar differential") {
  auto lam = forget_bracket(cat::lambda_aff1());
  std::vector<std::pair<AlgebraPresentation, ModulePresentation>> cases{
      {cat::dual_numbers(), cat::regular_module(cat::dual_numbers())},
      {cat::upper_triangular2(), cat::regular_module(cat::upper_triangular2())},
      {cat::dual_numbers(), staircase_module(cat::dual_numbers(), 3)},
      {lam, cat::regular_module(lam)},
      {lam, cat::shifted_module(lam, cat::regular_module(lam), -1)}};
  for (const auto& [a, m] : cases)
    for (int n = 0; n <= 3; ++n) {
      CHECK(hochschild_boundary(a, m, n) == hochschild_boundary_semidirect(a, m, n));
      if (n >= 1) CHECK((hochschild_boundary(a, m, n - 1) * hochschild_boundary(a, m, n)).is_zero());
    }
  auto a = cat::dual_numbers();
  auto m = cat::regular_module(a);
  for (int n = 1; n <= 5; ++n) CHECK((hochschild_boundary(a, m, n - 1) * hochschild_boundary(a, m, n)).is_zero());
}

TEST_CASE("hochschild cohomology") {
  auto a = cat::dual_numbers();
  auto m = cat::regular_module(a);
  CHECK(hochschild_cohomology_coboundary(a, m, 0).is_zero());
  SparseMap d0 = hochschild_cohomology_coboundary(a, m, 0);
  CHECK(d0.cols() - rank(d0) == 2);
  for (int n = 0; n <= 3; ++n)
    CHECK((hochschild_cohomology_coboundary(a, m, n + 1) * hochschild_cohomology_coboundary(a, m, n)).is_zero());

  // the noncommutative upper triangular algebra has a one-dimensional center
  auto t = cat::upper_triangular2();
  SparseMap dt = hochschild_cohomology_coboundary(t, cat::regular_module(t), 0);
  CHECK(dt.cols() - rank(dt) == 1);

  // ungraded: (-1)^n times the textbook signs
  std::vector<std::pair<AlgebraPresentation, ModulePresentation>> cases{
      {a, m}, {t, cat::regular_module(t)}, {cat::group_algebra_z2(), cat::regular_module(cat::group_algebra_z2())}};
  for (const auto& [alg, mod] : cases)
    for (int n = 0; n <= 3; ++n)
      CHECK(hochschild_cohomology_coboundary(alg, mod, n) == textbook_coboundary(alg, mod, n).scaled(n % 2 ? -1 : 1));

  auto lam = forget_bracket(cat::lambda_aff1());
  auto lm = staircase_module(lam, 2);
  for (int n = 0; n <= 2; ++n)
    CHECK((hochschild_cohomology_coboundary(lam, lm, n + 1) * hochschild_cohomology_coboundary(lam, lm, n)).is_zero());
}

TEST_CASE("morphism versus cocycle") {
  auto a = cat::dual_numbers();
  auto reg = cat::regular_module(a);

  TaylorCoefficients zero;
  auto r0 = morphism_cocycle_check(a, reg, zero, 4);
  CHECK(r0.is_morphism);
  CHECK(r0.cocycle_failures.empty());
  CHECK(r0.verdicts_agree);

  // x d/dx into the regular module is a derivation
  TaylorCoefficients der;
  der.set({1}, LetterChain{{1, Scalar(1)}});
  auto r1 = morphism_cocycle_check(a, reg, der, 3);
  CHECK(r1.is_morphism);
  CHECK(r1.verdicts_agree);

  // x -> 1' is not a derivation: d(x^2) = 0 but 2 x.1' != 0
  TaylorCoefficients bad;
  bad.set({1}, LetterChain{{0, Scalar(1)}});
  auto r2 = morphism_cocycle_check(a, reg, bad, 3);
  CHECK(!r2.is_morphism);
  CHECK(r2.cocycle_failures == std::vector<int>{1});
  CHECK(r2.verdicts_agree);

  TaylorCoefficients wrong_degree;
  wrong_degree.set({1, 1}, LetterChain{{1, Scalar(1)}});
  CHECK_THROWS_AS(morphism_cocycle_check(a, reg, wrong_degree, 3), Error);
}

TEST_CASE("random cochains: verdicts agree, coboundaries give trivial morphisms") {
  std::mt19937 rng(41);
  std::vector<AlgebraPresentation> algebras{cat::dual_numbers(), cat::upper_triangular2()};
  int morphisms = 0, non_morphisms = 0;
  for (const auto& a : algebras) {
    ModulePresentation m = staircase_module(a, 4);
    for (int trial = 0; trial < 12; ++trial) {
      // arbitrary degree-0 cochains
      TaylorCoefficients c;
      for (int j = 1; j <= 3; ++j) merge_into(c, random_cochain(rng, a, m, tensor_space(a, j), 0, 0.3));
      auto rep = morphism_cocycle_check(a, m, c, 4);
      CHECK(rep.verdicts_agree);
      (rep.is_morphism ? morphisms : non_morphisms)++;

      // cocycles chosen from the kernel
      TaylorCoefficients z;
      for (int j = 1; j <= 3; ++j) {
        WordSpace src = tensor_space(a, j);
        SparseMap d = word_cochain_coboundary(a, m, src, tensor_space(a, j + 1));
        auto degs = word_cochain_degrees(a, m, src);
        std::vector<std::size_t> cols;
        for (std::size_t i = 0; i < degs.size(); ++i)
          if (degs[i] == 0) cols.push_back(i);
        std::vector<std::size_t> rows(d.rows());
        std::iota(rows.begin(), rows.end(), 0);
        auto ker = kernel_basis(d.submatrix(rows, cols));
        std::map<std::size_t, Scalar> v;
        for (const auto& k : ker) {
          Scalar s = random_scalar(rng);
          for (const auto& [i, x] : k) v[cols[i]] += s * x;
        }
        merge_into(z, cochain_from_vector(sparse_from_map(v), j, src, m.dim(), 0));
      }
      auto rz = morphism_cocycle_check(a, m, z, 4);
      CHECK(rz.is_morphism);
      CHECK(rz.verdicts_agree);

      // trivial: c_1 = 0, c_n = d b_{n-1}
      TaylorCoefficients b;
      for (int j = 1; j <= 3; ++j) merge_into(b, random_cochain(rng, a, m, tensor_space(a, j), -1, 0.4));
      TaylorCoefficients t = trivial_cocycle(a, m, b, 4);
      auto rt = morphism_cocycle_check(a, m, t, 4);
      CHECK(rt.is_morphism);
      CHECK(rt.verdicts_agree);
      for (int n = 2; n <= 4; ++n) CHECK(is_hochschild_coboundary(a, m, t, n));
    }
  }
  CHECK(morphisms + non_morphisms == 24);
  CHECK(non_morphisms > 0);
}

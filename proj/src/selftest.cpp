#include <random>

#include "envelope/bar.hpp"
#include "envelope/catalog.hpp"
#include "envelope/chevalley.hpp"
#include "envelope/cli.hpp"
#include "envelope/error.hpp"
#include "envelope/ginfty.hpp"
#include "envelope/harrison.hpp"
#include "envelope/koszul.hpp"

namespace envelope {

namespace {

namespace cat = catalog;

Scalar random_coefficient(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  int x = 0;
  while (x == 0) x = d(rng);
  return Scalar(x);
}

// Homology of a boundary family d(n): C_n -> C_{n-1}, slots lo..hi.
std::vector<std::size_t> homology(int lo, int hi, const std::function<SparseMap(int)>& d) {
  std::vector<std::size_t> h;
  for (int n = lo; n <= hi; ++n) {
    std::size_t total = 0;
    for (const auto& e : betti_entries(n, d(n), d(n + 1))) total += e.homology;
    h.push_back(total);
  }
  return h;
}

bool all_zero(const std::vector<std::size_t>& v) {
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

// Degree-0 arity-1 cochains with random values.
TaylorCoefficients random_linear_map(std::mt19937& rng, const AlgebraPresentation& a, const ModulePresentation& m) {
  TaylorCoefficients c;
  std::bernoulli_distribution keep(0.4);
  for (int i = 0; i < static_cast<int>(a.dim()); ++i) {
    LetterChain val;
    for (std::size_t v = 0; v < m.dim(); ++v)
      if (m.basis.degree(v) == a.degree(i) && keep(rng)) accumulate(val, static_cast<int>(v), random_coefficient(rng));
    if (!val.empty()) c.set({i}, val);
  }
  return c;
}

template <class F>
void guarded(BettiReport& r, const std::string& name, F f) {
  try {
    std::string detail;
    const bool ok = f(detail);
    r.check(name, ok, detail);
  } catch (const std::exception& e) {
    r.check(name, false, e.what());
  }
}

}  // namespace

BettiReport selftest(unsigned seed, int jobs) {
  (void)jobs;
  std::mt19937 rng(seed);
  BettiReport r;
  r.theory = "all";
  r.direction = "selftest";
  r.input = "seed " + std::to_string(seed);

  const std::vector<AlgebraPresentation> unital{cat::dual_numbers(), cat::group_algebra_z2(), cat::upper_triangular2()};

  guarded(r, "bar resolution is acyclic above weight 0", [&](std::string&) {
    for (const auto& a : unital)
      if (!all_zero(homology(1, 4, [&](int n) { return n == 0 ? SparseMap(0, a.dim()) : bar_boundary(a, n); })))
        return false;
    return true;
  });

  guarded(r, "bar homotopy h d + d h = id", [&](std::string&) {
    for (const auto& a : unital)
      for (int n = 0; n <= 3; ++n) {
        const SparseMap lhs = bar_homotopy(a, n) * bar_boundary(a, n) + bar_boundary(a, n + 1) * bar_homotopy(a, n + 1);
        if (!(lhs == SparseMap::identity(lhs.rows()))) return false;
      }
    return true;
  });

  guarded(r, "m o m = 0 exactly for associative products", [&](std::string& detail) {
    int broken = 0;
    for (int trial = 0; trial < 12; ++trial) {
      AlgebraPresentation a = cat::upper_triangular2();
      const int n = static_cast<int>(a.dim());
      std::uniform_int_distribution<int> idx(0, n - 1);
      a.product->add(idx(rng), idx(rng), idx(rng), random_coefficient(rng));
      bool associative = true;
      for (const auto& v : validate(a))
        if (v.axiom == "Ass") associative = false;
      const bool square_zero = (bar_differential(a, 2) * bar_differential(a, 3)).is_zero();
      if (associative != square_zero) return false;
      broken += !associative;
    }
    detail = std::to_string(broken) + " of 12 mutations non-associative";
    return broken > 0;
  });

  guarded(r, "l o l = 0 exactly under Jacobi", [&](std::string& detail) {
    int broken = 0;
    for (int trial = 0; trial < 12; ++trial) {
      AlgebraPresentation g = cat::sl2();
      std::uniform_int_distribution<int> idx(0, 2);
      int i = idx(rng), j = idx(rng);
      while (j == i) j = idx(rng);
      const int k = idx(rng);
      const Scalar c = random_coefficient(rng);
      g.bracket->add(i, j, k, c);
      g.bracket->add(j, i, k, -c);
      bool jacobi = true;
      for (const auto& v : validate(g))
        if (v.axiom == "Jac") jacobi = false;
      // lie_differential refuses a broken bracket, so compose the raw lifts
      bool square_zero = true;
      for (const auto& w : sym_basis(g, 3))
        if (!lie_ell(g, lie_ell(g, w)).empty()) square_zero = false;
      if (jacobi != square_zero) return false;
      broken += !jacobi;
    }
    detail = std::to_string(broken) + " of 12 mutations break Jacobi";
    return broken > 0;
  });

  guarded(r, "module complexes are restrictions of semidirect differentials", [&](std::string&) {
    const auto d = cat::dual_numbers();
    const auto dm = cat::regular_module(d);
    const auto g = cat::sl2();
    const auto gm = cat::regular_module(g);
    for (int n = 1; n <= 3; ++n) {
      if (!(hochschild_boundary(d, dm, n) == hochschild_boundary_semidirect(d, dm, n))) return false;
      if (!(harrison_boundary(d, dm, n) == harrison_boundary_semidirect(d, dm, n))) return false;
      if (!(chevalley_boundary(g, gm, n) == chevalley_boundary_semidirect(g, gm, n))) return false;
    }
    return true;
  });

  guarded(r, "chevalley Betti numbers: abelian (1,3,3,1), sl2 (1,0,0,1)", [&](std::string& detail) {
    const auto ab = cat::abelian_lie(3);
    const auto s = cat::sl2();
    const auto hab = homology(0, 3, [&](int n) { return chevalley_boundary(ab, cat::trivial_module(ab), n); });
    const auto hs = homology(0, 3, [&](int n) { return chevalley_boundary(s, cat::trivial_module(s), n); });
    detail = "abelian";
    for (auto x : hab) detail += " " + std::to_string(x);
    detail += "; sl2";
    for (auto x : hs) detail += " " + std::to_string(x);
    return hab == std::vector<std::size_t>{1, 3, 3, 1} && hs == std::vector<std::size_t>{1, 0, 0, 1};
  });

  guarded(r, "random derivation candidates: morphism and cocycle verdicts agree", [&](std::string& detail) {
    int morphisms = 0;
    const auto d = cat::dual_numbers();
    const auto dm = cat::regular_module(d);
    const auto g = cat::sl2();
    const auto gm = cat::regular_module(g);
    for (int trial = 0; trial < 10; ++trial) {
      const auto c1 = random_linear_map(rng, d, dm);
      const auto h = morphism_cocycle_check(d, dm, c1, 3);
      const auto k = c_infty_morphism_cocycle_check(d, dm, c1, 3);
      const auto c2 = random_linear_map(rng, g, gm);
      const auto l = l_infty_morphism_cocycle_check(g, gm, c2, 3);
      // ad_x is always a derivation of g into the adjoint module
      TaylorCoefficients ad;
      std::uniform_int_distribution<int> pick(0, 2);
      const int x = pick(rng);
      for (int i = 0; i < 3; ++i) {
        const LetterChain v = apply_table(*g.bracket, x, i);
        if (!v.empty()) ad.set({i}, v);
      }
      const auto inner = l_infty_morphism_cocycle_check(g, gm, ad, 3);
      if (!h.verdicts_agree || !k.verdicts_agree || !l.verdicts_agree || !inner.verdicts_agree) return false;
      if (!inner.is_morphism) return false;
      morphisms += h.is_morphism + k.is_morphism + l.is_morphism;
    }
    detail = std::to_string(morphisms) + " of 30 random maps were morphisms; 10 inner derivations recognised";
    return true;
  });

  guarded(r, "koszul resolution exact (aff1, abelian 2, sl2; p <= 3)", [&](std::string&) {
    for (const auto& g : {cat::aff1(), cat::abelian_lie(2), cat::sl2()})
      if (!verify_resolution(g, 3).all_passed()) return false;
    return true;
  });

  guarded(r, "G-infinity laws on the polyvectors of aff(1), weight <= 3", [&](std::string& detail) {
    const GinftyAlgebra a(cat::lambda_aff1(), nullptr, 3);
    for (const auto& v : ginfty_properties(a, 3))
      if (!v.holds) {
        detail = v.name;
        return false;
      }
    return true;
  });

  guarded(r, "Chevalley-Harrison complexes on the polyvectors of aff(1)", [&](std::string&) {
    const auto g = cat::lambda_aff1();
    const auto m = cat::regular_module(g);
    const GinftyAlgebra a(g, &m, 3);
    const GinftyAlgebra s(g, &m, 3, ModuleRoute::semidirect);
    for (int n = 1; n <= 2; ++n) {
      if (!(chevalley_harrison_boundary(a, n) == chevalley_harrison_boundary_restricted(s, n))) return false;
      if (!(chevalley_harrison_boundary(a, n) * chevalley_harrison_boundary(a, n + 1)).is_zero()) return false;
    }
    for (int trial = 0; trial < 10; ++trial) {
      const auto basis = a.chain_basis(1);
      GinftyCochain c;
      c.weight = 1;
      std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1), vpick(0, m.dim() - 1);
      for (int k = 0; k < 3; ++k)
        accumulate(c.values[basis[pick(rng)]], static_cast<int>(vpick(rng)), random_coefficient(rng));
      if (!chevalley_harrison_coboundary(a, chevalley_harrison_coboundary(a, c)).values.empty()) return false;
    }
    return true;
  });

  return r;
}

}  // namespace envelope

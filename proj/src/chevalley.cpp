#include "envelope/chevalley.hpp"

#include <functional>

#include "envelope/error.hpp"

namespace envelope {

namespace {

void require_lie(const AlgebraPresentation& g) {
  if (g.kind != Kind::lie || !g.bracket) throw Error(ErrorCode::InvalidInput, "Chevalley complexes need a Lie algebra");
  auto v = validate(g);
  if (!v.empty()) throw Error(ErrorCode::InvalidInput, "algebra fails " + v.front().describe());
}

void require_lie_module(const AlgebraPresentation& g, const ModulePresentation& m) {
  require_lie(g);
  if (!m.bracket_action) throw Error(ErrorCode::InvalidInput, "module has no bracket action");
  auto v = validate_module(g, m);
  if (!v.empty()) throw Error(ErrorCode::InvalidInput, "module fails " + v.front().describe());
}

// Sign of bringing the letters at the chosen positions to the front, in order.
int front_sign(const Letters& w, const std::vector<int>& deg, const std::vector<int>& chosen) {
  std::vector<int> degs;
  for (int x : w) degs.push_back(deg.at(x));
  std::vector<bool> used(w.size(), false);
  Permutation sigma;
  for (int p : chosen) {
    sigma.push_back(p);
    used[p] = true;
  }
  for (std::size_t k = 0; k < w.size(); ++k)
    if (!used[k]) sigma.push_back(static_cast<int>(k));
  return koszul_sign(degs, sigma);
}

Letters pick(const Letters& w, unsigned mask, bool inside) {
  Letters out;
  for (std::size_t k = 0; k < w.size(); ++k)
    if (((mask >> k) & 1u) == (inside ? 1u : 0u)) out.push_back(w[k]);
  return out;
}

std::vector<int> positions(unsigned mask, std::size_t n) {
  std::vector<int> out;
  for (std::size_t k = 0; k < n; ++k)
    if ((mask >> k) & 1u) out.push_back(static_cast<int>(k));
  return out;
}

}  // namespace

std::vector<SymWord> sym_words(const std::vector<int>& deg, int alphabet, int n) {
  std::vector<SymWord> out;
  if (n < 0) return out;
  SymWord w;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(w.size()) == n) {
      out.push_back(w);
      return;
    }
    for (int x = from; x < alphabet; ++x) {
      if (!w.empty() && w.back() == x && is_odd(deg.at(x))) continue;
      w.push_back(x);
      rec(x);
      w.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<int> lie_shifted_degrees(const AlgebraPresentation& g, const ModulePresentation* m) {
  std::vector<int> deg;
  for (std::size_t i = 0; i < g.dim(); ++i) deg.push_back(g.shifted(static_cast<int>(i)));
  if (m)
    for (std::size_t v = 0; v < m->dim(); ++v) deg.push_back(m->basis.degree(v) - 1);
  return deg;
}

std::vector<SymWord> sym_basis(const AlgebraPresentation& g, int n) {
  return sym_words(lie_shifted_degrees(g), static_cast<int>(g.dim()), n);
}

std::vector<SymWord> sym_basis(const AlgebraPresentation& g, const ModulePresentation& m, int n) {
  std::vector<SymWord> out;
  const int ng = static_cast<int>(g.dim());
  for (const auto& w : sym_basis(g, n))
    for (int v = 0; v < static_cast<int>(m.dim()); ++v) {
      SymWord x = w;
      x.push_back(ng + v);
      out.push_back(std::move(x));
    }
  return out;
}

std::pair<SymWord, int> sym_product(const Letters& letters, const std::vector<int>& deg) {
  SymWord w = letters;
  const int s = sort_graded(w, deg);
  return {w, s};
}

std::vector<SymSplit> delta_sym(const SymWord& w, const std::vector<int>& deg) {
  std::vector<SymSplit> out;
  const std::size_t n = w.size();
  if (n < 2) return out;
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask)
    out.push_back({pick(w, mask, true), pick(w, mask, false), Scalar(front_sign(w, deg, positions(mask, n)))});
  return out;
}

Chain<WordPair> delta_sym_chain(const WordChain& c, const std::vector<int>& deg) {
  Chain<WordPair> out;
  for (const auto& [w, k] : c)
    for (const auto& s : delta_sym(w, deg)) accumulate(out, WordPair{s.left, s.right}, s.coeff * k);
  return out;
}

WordChain lift_coderivation_sym(const TaylorCoefficients& t, const SymWord& w, const std::vector<int>& deg) {
  WordChain out;
  const std::size_t n = w.size();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    const LetterChain* val = t.find(pick(w, mask, true));
    if (!val || val->empty()) continue;
    const int eps = front_sign(w, deg, positions(mask, n));
    Letters rest = pick(w, mask, false);
    for (const auto& [d, k] : *val) {
      Letters seq{d};
      seq.insert(seq.end(), rest.begin(), rest.end());
      auto [word, s] = sym_product(seq, deg);
      if (s != 0) accumulate(out, word, k * eps * s);
    }
  }
  return out;
}

WordChain lift_coderivation_sym(const TaylorCoefficients& t, const WordChain& c, const std::vector<int>& deg) {
  WordChain out;
  for (const auto& [w, k] : c) accumulate(out, lift_coderivation_sym(t, w, deg), k);
  return out;
}

WordChain lift_morphism_sym(const TaylorCoefficients& t, const SymWord& w, const std::vector<int>& deg_src,
                            const std::vector<int>& deg_tgt) {
  WordChain out;
  const int n = static_cast<int>(w.size());
  if (n == 0) return out;
  std::vector<int> block(n, 0);
  std::vector<int> degs;
  for (int x : w) degs.push_back(deg_src.at(x));
  // restricted growth strings enumerate each set partition once
  std::function<void(int, int)> rec = [&](int pos, int blocks) {
    if (pos == n) {
      std::vector<std::vector<int>> parts(blocks);
      for (int k = 0; k < n; ++k) parts[block[k]].push_back(k);
      Permutation sigma;
      for (const auto& p : parts) sigma.insert(sigma.end(), p.begin(), p.end());
      const int eps = koszul_sign(degs, sigma);
      // product of the images block by block
      WordChain acc{{Letters{}, Scalar(eps)}};
      for (const auto& p : parts) {
        Letters sub;
        for (int k : p) sub.push_back(w[k]);
        const LetterChain* val = t.find(sub);
        if (!val || val->empty()) return;
        WordChain next;
        for (const auto& [seq, k1] : acc)
          for (const auto& [d, k2] : *val) {
            Letters s2 = seq;
            s2.push_back(d);
            accumulate(next, s2, k1 * k2);
          }
        acc = std::move(next);
      }
      for (const auto& [seq, k] : acc) {
        auto [word, s] = sym_product(seq, deg_tgt);
        if (s != 0) accumulate(out, word, k * s);
      }
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      block[pos] = b;
      rec(pos + 1, b == blocks ? blocks + 1 : blocks);
    }
  };
  rec(0, 0);
  return out;
}

WordChain lift_morphism_sym(const TaylorCoefficients& t, const WordChain& c, const std::vector<int>& deg_src,
                            const std::vector<int>& deg_tgt) {
  WordChain out;
  for (const auto& [w, k] : c) accumulate(out, lift_morphism_sym(t, w, deg_src, deg_tgt), k);
  return out;
}

TaylorCoefficients bracket_coderivation(const AlgebraPresentation& g) {
  if (!g.bracket) throw Error(ErrorCode::MalformedPresentation, "algebra has no bracket");
  TaylorCoefficients t;
  t.degree = 1;
  const auto deg = lie_shifted_degrees(g);
  const int n = static_cast<int>(g.dim());
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      if (a == b && is_odd(deg[a])) continue;
      LetterChain v;
      for (const auto& term : (*g.bracket)(a, b)) accumulate(v, term.index, term.coeff * sign_of(deg[a]));
      if (!v.empty()) t.set({a, b}, v);
    }
  return t;
}

TaylorCoefficients module_bracket_coderivation(const AlgebraPresentation& g, const ModulePresentation& m) {
  TaylorCoefficients t = bracket_coderivation(g);
  if (!m.bracket_action) return t;
  const int ng = static_cast<int>(g.dim());
  for (int a = 0; a < ng; ++a)
    for (int v = 0; v < static_cast<int>(m.dim()); ++v) {
      LetterChain val;
      for (const auto& term : (*m.bracket_action)(a, v)) accumulate(val, ng + term.index, term.coeff * sign_of(g.shifted(a)));
      if (!val.empty()) t.set({a, ng + v}, val);
    }
  return t;
}

WordChain lie_ell(const AlgebraPresentation& g, const SymWord& w) {
  return lift_coderivation_sym(bracket_coderivation(g), w, lie_shifted_degrees(g));
}

WordChain lie_ell(const AlgebraPresentation& g, const WordChain& c) {
  const TaylorCoefficients t = bracket_coderivation(g);
  return lift_coderivation_sym(t, c, lie_shifted_degrees(g));
}

SparseMap lie_differential(const AlgebraPresentation& g, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "weight must be at least 1");
  require_lie(g);
  WordSpace src(sym_basis(g, n)), tgt(n == 1 ? std::vector<Letters>{} : sym_basis(g, n - 1));
  const TaylorCoefficients t = bracket_coderivation(g);
  const auto deg = lie_shifted_degrees(g);
  return word_operator_matrix(src, tgt, [&](const Letters& w) { return lift_coderivation_sym(t, w, deg); });
}

SparseMap chevalley_boundary(const AlgebraPresentation& g, const ModulePresentation& m, int n) {
  if (n < 0) throw Error(ErrorCode::InvalidInput, "negative degree");
  require_lie_module(g, m);
  WordSpace src(sym_basis(g, m, n));
  if (n == 0) return SparseMap(0, src.dim());
  WordSpace tgt(sym_basis(g, m, n - 1));
  const TaylorCoefficients t = module_bracket_coderivation(g, m);
  const auto deg = lie_shifted_degrees(g, &m);
  return word_operator_matrix(src, tgt, [&](const Letters& w) { return lift_coderivation_sym(t, w, deg); });
}

SparseMap chevalley_boundary_semidirect(const AlgebraPresentation& g, const ModulePresentation& m, int n) {
  if (n < 0) throw Error(ErrorCode::InvalidInput, "negative degree");
  const AlgebraPresentation h = semidirect(g, m);
  WordSpace src(sym_basis(g, m, n));
  if (n == 0) return SparseMap(0, src.dim());
  WordSpace tgt(sym_basis(g, m, n - 1));
  const TaylorCoefficients t = bracket_coderivation(h);
  const auto deg = lie_shifted_degrees(h);
  return word_operator_matrix(src, tgt, [&](const Letters& w) { return lift_coderivation_sym(t, w, deg); });
}

std::vector<int> sym_cochain_degrees(const AlgebraPresentation& g, const ModulePresentation& m, int n) {
  std::vector<int> out;
  const auto src = n == 0 ? std::vector<SymWord>{{}} : sym_basis(g, n);
  for (const auto& w : src) {
    int in = 0;
    for (int x : w) in += g.shifted(x);
    for (std::size_t v = 0; v < m.dim(); ++v) out.push_back(m.basis.degree(v) - 1 - in);
  }
  return out;
}

SparseMap chevalley_cohomology_coboundary(const AlgebraPresentation& g, const ModulePresentation& m, int n) {
  if (n < 0) throw Error(ErrorCode::InvalidInput, "negative arity");
  require_lie_module(g, m);
  const std::size_t dm = m.dim();
  const auto deg = lie_shifted_degrees(g);
  WordSpace src(n == 0 ? std::vector<SymWord>{{}} : sym_basis(g, n));
  WordSpace tgt(sym_basis(g, n + 1));
  const std::vector<int> fdeg = sym_cochain_degrees(g, m, n);
  const TaylorCoefficients ell = bracket_coderivation(g);
  SparseMap out(tgt.dim() * dm, src.dim() * dm);
  for (std::size_t t = 0; t < tgt.dim(); ++t) {
    const SymWord& w = tgt.representative(t);
    // sum_i (-1)^{deg a_i deg f} eps l(a_i . f(rest))
    for (std::size_t i = 0; i < w.size(); ++i) {
      const int a = w[i];
      const int eps = front_sign(w, deg, {static_cast<int>(i)});
      SymWord rest = w;
      rest.erase(rest.begin() + static_cast<long>(i));
      const std::size_t q = src.ambient_index(rest);
      for (std::size_t v = 0; v < dm; ++v) {
        const int s = eps * sign_of(long(deg[a]) * fdeg[q * dm + v]) * sign_of(deg[a]);
        for (const auto& term : (*m.bracket_action)(a, static_cast<int>(v)))
          out.add(t * dm + term.index, q * dm + v, term.coeff * s);
      }
    }
    // - (-1)^{deg f} sum_{i<j} eps f(l(a_i . a_j) . rest)
    for (const auto& [q, k] : src.coordinates(lift_coderivation_sym(ell, w, deg)))
      for (std::size_t v = 0; v < dm; ++v) out.add(t * dm + v, q * dm + v, -k * sign_of(fdeg[q * dm + v]));
  }
  return out;
}

CocycleReport l_infty_morphism_cocycle_check(const AlgebraPresentation& g, const ModulePresentation& m,
                                             const TaylorCoefficients& c, int n_max) {
  require_lie_module(g, m);
  require_cochain_degree(g, m, c, 0);
  const AlgebraPresentation h = semidirect_unchecked(g, m);
  const int ng = static_cast<int>(g.dim());
  const auto deg_g = lie_shifted_degrees(g), deg_h = lie_shifted_degrees(h);
  TaylorCoefficients f;
  for (int i = 0; i < ng; ++i) f.set({i}, LetterChain{{i, Scalar(1)}});
  for (const auto& [r, table] : c.maps)
    for (const auto& [w, val] : table) {
      LetterChain shifted = r == 1 ? *f.find(w) : LetterChain{};
      for (const auto& [v, k] : val) accumulate(shifted, ng + v, k);
      f.set(w, shifted);
    }
  const TaylorCoefficients ell_g = bracket_coderivation(g), ell_h = bracket_coderivation(h);
  CocycleReport rep;
  for (int n = 1; n <= n_max; ++n) {
    bool ok = true;
    for (const auto& w : sym_basis(g, n)) {
      WordChain lhs = single_letter_part(lift_coderivation_sym(ell_h, lift_morphism_sym(f, w, deg_g, deg_h), deg_h));
      WordChain rhs = single_letter_part(lift_morphism_sym(f, lift_coderivation_sym(ell_g, w, deg_g), deg_g, deg_h));
      if (lhs != rhs) {
        ok = false;
        break;
      }
    }
    if (!ok) rep.morphism_failures.push_back(n);
  }
  for (int j = 1; j < n_max; ++j) {
    WordSpace src(sym_basis(g, j));
    SparseVector v = cochain_vector(c, j, src, m.dim());
    if (v.empty()) continue;
    if (!chevalley_cohomology_coboundary(g, m, j).apply(v).empty()) rep.cocycle_failures.push_back(j);
  }
  rep.is_morphism = rep.morphism_failures.empty();
  rep.verdicts_agree = rep.is_morphism == rep.cocycle_failures.empty();
  return rep;
}

TaylorCoefficients l_infty_trivial_cocycle(const AlgebraPresentation& g, const ModulePresentation& m,
                                           const TaylorCoefficients& b, int n_max) {
  require_lie_module(g, m);
  require_cochain_degree(g, m, b, -1);
  const AlgebraPresentation h = semidirect_unchecked(g, m);
  const int ng = static_cast<int>(g.dim());
  const auto deg_g = lie_shifted_degrees(g), deg_h = lie_shifted_degrees(h);
  const TaylorCoefficients ell_g = bracket_coderivation(g), ell_h = bracket_coderivation(h);
  TaylorCoefficients c;
  for (int n = 2; n <= n_max; ++n)
    for (const auto& w : sym_basis(g, n)) {
      LetterChain val;
      // l_h(iota . b)(w) = sum_i (-1)^{deg a_i} eps l_h(a_i . b(rest))
      for (std::size_t i = 0; i < w.size(); ++i) {
        SymWord rest = w;
        rest.erase(rest.begin() + static_cast<long>(i));
        const LetterChain* bv = b.find(rest);
        if (!bv) continue;
        const int s = front_sign(w, deg_g, {static_cast<int>(i)}) * sign_of(deg_g[w[i]]);
        for (const auto& [v, k] : *bv)
          for (const auto& [x, y] : lift_coderivation_sym(ell_h, SymWord{w[i], ng + v}, deg_h))
            accumulate(val, x.front() - ng, k * y * s);
      }
      // b is odd, so the graded commutator [l, b] adds b(l_g(w))
      for (const auto& [u, k] : lift_coderivation_sym(ell_g, w, deg_g))
        if (const LetterChain* bv = b.find(u)) accumulate(val, *bv, k);
      if (!val.empty()) c.set(w, val);
    }
  return c;
}

bool is_chevalley_coboundary(const AlgebraPresentation& g, const ModulePresentation& m, const TaylorCoefficients& c,
                             int n) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "arity must be at least 1");
  WordSpace tgt(sym_basis(g, n));
  return in_column_space(chevalley_cohomology_coboundary(g, m, n - 1), cochain_vector(c, n, tgt, m.dim()));
}

}  // namespace envelope

#include "envelope/ginfty.hpp"

#include <algorithm>
#include <functional>

#include "envelope/error.hpp"

namespace envelope {

namespace {

// Letter-level bracket on G[1] + M[1]; module letters are >= ng.
LetterChain letter_bracket(const AlgebraPresentation& g, const ModulePresentation* m, int a, int b) {
  const int ng = static_cast<int>(g.dim());
  LetterChain out;
  if (a < ng && b < ng) {
    for (const auto& t : (*g.bracket)(a, b)) accumulate(out, t.index, t.coeff);
  } else if (a < ng && b >= ng) {
    if (m && m->bracket_action)
      for (const auto& t : (*m->bracket_action)(a, b - ng)) accumulate(out, ng + t.index, t.coeff);
  } else if (a >= ng && b < ng) {
    // [u, b] = -(-1)^{deg b deg u} b . u
    if (m && m->bracket_action) {
      const long e = long(g.degree(b) - 1) * (m->basis.degree(static_cast<std::size_t>(a - ng)) - 1);
      for (const auto& t : (*m->bracket_action)(b, a - ng)) accumulate(out, ng + t.index, -t.coeff * sign_of(e));
    }
  }
  return out;
}

std::vector<int> letter_degrees(const AlgebraPresentation& g, const ModulePresentation* m) {
  std::vector<int> d;
  for (std::size_t i = 0; i < g.dim(); ++i) d.push_back(g.degree(static_cast<int>(i)) - 1);
  if (m)
    for (std::size_t v = 0; v < m->dim(); ++v) d.push_back(m->basis.degree(v) - 1);
  return d;
}

int sum_degrees(const Letters& w, const std::vector<int>& deg, std::size_t from = 0, std::size_t to = SIZE_MAX) {
  int s = 0;
  for (std::size_t i = from; i < std::min(to, w.size()); ++i) s += deg[w[i]];
  return s;
}

void require_gerstenhaber(const AlgebraPresentation& g, const ModulePresentation* m) {
  if (g.kind != Kind::gerstenhaber || !g.product || !g.bracket)
    throw Error(ErrorCode::InvalidInput, "G-infinity complexes need a Gerstenhaber algebra");
  auto v = validate(g);
  if (!v.empty()) throw Error(ErrorCode::InvalidInput, "algebra fails " + v.front().describe());
  if (m) {
    auto w = validate_module(g, *m);
    if (!w.empty()) throw Error(ErrorCode::InvalidInput, "module fails " + w.front().describe());
  }
}

// Reorders ids into canonical form; 0 when an odd class repeats.
std::pair<BicoWord, int> canonical(Letters w, const std::vector<int>& deg) {
  const int s = sort_graded(w, deg);
  return {w, s};
}

std::map<BicoWord, std::size_t> index_of(const std::vector<BicoWord>& basis) {
  std::map<BicoWord, std::size_t> idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], i);
  return idx;
}

std::size_t lookup(const std::map<BicoWord, std::size_t>& idx, const BicoWord& w) {
  auto it = idx.find(w);
  if (it == idx.end()) throw Error(ErrorCode::DimensionMismatch, "word outside the G-infinity chain space");
  return it->second;
}

}  // namespace

WordChain bracket_on_H(const AlgebraPresentation& g, const Letters& x, const Letters& y, const ModulePresentation* m) {
  if (!g.bracket) throw Error(ErrorCode::InvalidInput, "algebra has no bracket");
  const auto deg = letter_degrees(g, m);
  const int p = static_cast<int>(x.size()), q = static_cast<int>(y.size());
  Letters joined = x;
  joined.insert(joined.end(), y.begin(), y.end());
  WordChain out;
  for (const Permutation& sigma : enumerate_shuffles(p, q)) {
    const Permutation inv = inverse(sigma);
    Letters word(joined.size());
    for (std::size_t i = 0; i < joined.size(); ++i) word[sigma[i]] = joined[i];
    std::vector<int> d(joined.size());
    for (std::size_t i = 0; i < joined.size(); ++i) d[i] = deg[joined[i]];
    const int eps = koszul_sign(d, inv);
    for (int k = 0; k + 1 < p + q; ++k) {
      if (!(inv[k] < p && inv[k + 1] >= p)) continue;
      for (const auto& [c, coeff] : letter_bracket(g, m, word[k], word[k + 1])) {
        Letters v(word.begin(), word.begin() + k);
        v.push_back(c);
        v.insert(v.end(), word.begin() + k + 2, word.end());
        accumulate(out, v, coeff * eps);
      }
    }
  }
  return out;
}

std::vector<SplitTerm> kappa_on_word(const Letters& word, const std::vector<int>& degrees) {
  std::vector<SplitTerm> out;
  for (std::size_t j = 1; j < word.size(); ++j) {
    Letters u(word.begin(), word.begin() + static_cast<long>(j)), v(word.begin() + static_cast<long>(j), word.end());
    const int du = sum_degrees(u, degrees) - 1, dv = sum_degrees(v, degrees) - 1;
    const int s = sign_of(du + 1);
    out.push_back({u, v, Scalar(s)});
    out.push_back({v, u, Scalar(s * sign_of(long(du) * dv))});
  }
  return out;
}

GinftyAlgebra::GinftyAlgebra(const AlgebraPresentation& g, const ModulePresentation* m, int max_weight,
                             ModuleRoute route) {
  require_gerstenhaber(g, m);
  build(g, m, max_weight, route);
}

GinftyAlgebra GinftyAlgebra::unchecked(const AlgebraPresentation& g, const ModulePresentation* m, int max_weight,
                                       ModuleRoute route) {
  if (g.kind != Kind::gerstenhaber || !g.product || !g.bracket)
    throw Error(ErrorCode::InvalidInput, "G-infinity complexes need a Gerstenhaber algebra");
  GinftyAlgebra a;
  a.build(g, m, max_weight, route);
  return a;
}

void GinftyAlgebra::build(const AlgebraPresentation& g, const ModulePresentation* m, int max_weight,
                          ModuleRoute route) {
  if (max_weight < 1) throw Error(ErrorCode::InvalidInput, "weight cap must be at least 1");
  g_ = g;
  gc_ = forget_bracket(g);
  has_module_ = m != nullptr;
  if (m) m_ = *m;
  max_weight_ = max_weight;

  const auto ldeg = letter_degrees(g, m);
  pure_.resize(static_cast<std::size_t>(max_weight) + 1);
  for (int len = 1; len <= max_weight; ++len) {
    pure_[len] = harrison_chain_space(gc_, len);
    for (std::size_t q = 0; q < pure_[len].dim(); ++q) {
      HClass c;
      c.word = pure_[len].representative(q);
      c.length = c.weight = len;
      c.index = q;
      c.degree = sum_degrees(c.word, ldeg) - 1;
      pure_id_[{len, q}] = static_cast<int>(classes_.size());
      classes_.push_back(c);
    }
  }
  if (m) {
    mixed_.resize(static_cast<std::size_t>(max_weight) + 2);
    for (int len = 1; len <= max_weight + 1; ++len) {
      mixed_[len] = harrison_chain_space(gc_, *m, len);
      for (std::size_t q = 0; q < mixed_[len].dim(); ++q) {
        HClass c;
        c.word = mixed_[len].representative(q);
        c.length = len;
        c.weight = len - 1;
        c.index = q;
        c.module = true;
        c.degree = sum_degrees(c.word, ldeg) - 1;
        mixed_id_[{len, q}] = static_cast<int>(classes_.size());
        classes_.push_back(c);
      }
    }
  }
  for (const auto& c : classes_) degrees_.push_back(c.degree);

  // Taylor coefficients of m (arity 1) and l (arity 2).
  AlgebraPresentation s, sc;
  if (m && route == ModuleRoute::semidirect) {
    s = semidirect_unchecked(g, *m);
    sc = forget_bracket(s);
  }
  StructureConstants right;
  if (m) right = effective_right_action(gc_, *m);
  m_coeff_.degree = ell_coeff_.degree = total_coeff_.degree = 1;
  for (int id = 0; id < static_cast<int>(classes_.size()); ++id) {
    const HClass& c = classes_[id];
    WordChain image;
    if (!c.module)
      image = bar_m(gc_, c.word);
    else if (route == ModuleRoute::semidirect)
      image = bar_m(sc, c.word);
    else
      image = mixed_bar_m(gc_, *m, right, c.word);
    LetterChain val;
    for (const auto& [w, k] : image) accumulate(val, reduce(w), k);
    if (!val.empty()) {
      m_coeff_.set({id}, val);
      total_coeff_.set({id}, val);
    }
  }
  for (int x = 0; x < static_cast<int>(classes_.size()); ++x)
    for (int y = x; y < static_cast<int>(classes_.size()); ++y) {
      const HClass &cx = classes_[x], &cy = classes_[y];
      if (cx.module && cy.module) continue;
      if (cx.weight + cy.weight > max_weight) continue;
      if (x == y && is_odd(cx.degree)) continue;
      WordChain image;
      if (m && route == ModuleRoute::semidirect)
        image = bracket_on_H(s, cx.word, cy.word, nullptr);
      else
        image = bracket_on_H(g, cx.word, cy.word, m);
      LetterChain val;
      for (const auto& [w, k] : image) accumulate(val, reduce(w), k * sign_of(cx.degree));
      if (!val.empty()) {
        ell_coeff_.set({x, y}, val);
        total_coeff_.set({x, y}, val);
      }
    }
}

const WordSpace& GinftyAlgebra::space(bool module, int length) const {
  const auto& v = module ? mixed_ : pure_;
  if (length < 1 || length >= static_cast<int>(v.size()))
    throw Error(ErrorCode::DimensionMismatch, "word length beyond the weight cap");
  return v[length];
}

LetterChain GinftyAlgebra::reduce(const Letters& word) const {
  const int ng = static_cast<int>(g_.dim());
  const long mods = std::count_if(word.begin(), word.end(), [&](int x) { return x >= ng; });
  LetterChain out;
  if (mods > 1 || word.empty()) return out;
  const bool module = mods == 1;
  if (module && !has_module_) throw Error(ErrorCode::InvalidInput, "module letter without a module");
  const int len = static_cast<int>(word.size());
  const WordSpace& sp = space(module, len);
  const auto& ids = module ? mixed_id_ : pure_id_;
  for (const auto& [q, k] : sp.coordinates(WordChain{{word, Scalar(1)}})) accumulate(out, ids.at({len, q}), k);
  return out;
}

int GinftyAlgebra::weight(const BicoWord& w) const {
  int s = 0;
  for (int x : w) s += classes_[x].weight;
  return s;
}

int GinftyAlgebra::degree(const BicoWord& w) const {
  int s = 0;
  for (int x : w) s += degrees_[x];
  return s;
}

std::vector<int> GinftyAlgebra::shape(const BicoWord& w) const {
  std::vector<int> s;
  for (int x : w) s.push_back(classes_[x].weight);
  return s;
}

std::vector<BicoWord> GinftyAlgebra::chain_basis(int weight) const {
  if (weight > max_weight_) throw Error(ErrorCode::InvalidInput, "weight beyond the cap of this algebra");
  std::vector<BicoWord> out;
  if (weight < 1) return out;
  BicoWord cur;
  std::function<void(int, int)> rec = [&](int from, int left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int id = from; id < static_cast<int>(classes_.size()); ++id) {
      const HClass& c = classes_[id];
      if (c.module || c.weight > left) continue;
      if (!cur.empty() && cur.back() == id && is_odd(c.degree)) continue;
      cur.push_back(id);
      rec(id, left - c.weight);
      cur.pop_back();
    }
  };
  rec(0, weight);
  return out;
}

std::vector<BicoWord> GinftyAlgebra::module_chain_basis(int weight) const {
  if (!has_module_) throw Error(ErrorCode::InvalidInput, "no module");
  if (weight > max_weight_) throw Error(ErrorCode::InvalidInput, "weight beyond the cap of this algebra");
  std::vector<BicoWord> out;
  if (weight < 0) return out;
  for (int y = 0; y < static_cast<int>(classes_.size()); ++y) {
    const HClass& c = classes_[y];
    if (!c.module || c.weight > weight) continue;
    const int rest = weight - c.weight;
    if (rest == 0) {
      out.push_back({y});
      continue;
    }
    for (auto w : chain_basis(rest)) {
      w.push_back(y);
      out.push_back(std::move(w));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

WordChain GinftyAlgebra::m(const BicoWord& w) const { return lift_coderivation_sym(m_coeff_, w, degrees_); }
WordChain GinftyAlgebra::ell(const BicoWord& w) const { return lift_coderivation_sym(ell_coeff_, w, degrees_); }
WordChain GinftyAlgebra::m_plus_ell(const BicoWord& w) const {
  return lift_coderivation_sym(total_coeff_, w, degrees_);
}

Chain<std::pair<int, int>> GinftyAlgebra::kappa_on_class(int id) const {
  const auto ldeg = letter_degrees(g_, has_module_ ? &m_ : nullptr);
  Chain<std::pair<int, int>> out;
  for (const auto& t : kappa_on_word(classes_.at(id).word, ldeg)) {
    const LetterChain u = reduce(t.left), v = reduce(t.right);
    for (const auto& [a, ka] : u)
      for (const auto& [b, kb] : v) accumulate(out, std::pair<int, int>{a, b}, t.coeff * ka * kb);
  }
  return out;
}

Chain<BicoPair> GinftyAlgebra::kappa(const BicoWord& w) const {
  Chain<BicoPair> out;
  const int n = static_cast<int>(w.size());
  for (int s = 0; s < n; ++s) {
    int before = 0;
    for (int i = 0; i < s; ++i) before += degrees_[w[i]];
    std::vector<int> rest;
    for (int i = 0; i < n; ++i)
      if (i != s) rest.push_back(i);
    const int r = static_cast<int>(rest.size());
    for (const auto& [ab, c] : kappa_on_class(w[s])) {
      const auto [a, b] = ab;
      // sequence X_1 .. X_{s-1} A B X_{s+1} .. X_n; A at slot s, B at slot s+1
      std::vector<int> seq_deg, seq_id;
      for (int i = 0; i < n; ++i) {
        if (i == s) {
          seq_deg.push_back(degrees_[a]);
          seq_id.push_back(a);
          seq_deg.push_back(degrees_[b]);
          seq_id.push_back(b);
        } else {
          seq_deg.push_back(degrees_[w[i]]);
          seq_id.push_back(w[i]);
        }
      }
      auto slot = [&](int i) { return i < s ? i : i + 1; };
      for (int mask = 0; mask < (1 << r); ++mask) {
        Permutation perm;  // new order of sequence slots: X_I, A, B, X_J
        Letters left, right;
        for (int t = 0; t < r; ++t)
          if (mask & (1 << t)) {
            perm.push_back(slot(rest[t]));
            left.push_back(w[rest[t]]);
          }
        perm.push_back(s);
        perm.push_back(s + 1);
        left.push_back(a);
        right.push_back(b);
        for (int t = 0; t < r; ++t)
          if (!(mask & (1 << t))) {
            perm.push_back(slot(rest[t]));
            right.push_back(w[rest[t]]);
          }
        const int eps = koszul_sign(seq_deg, perm);
        auto [lw, ls] = canonical(left, degrees_);
        auto [rw, rs] = canonical(right, degrees_);
        if (ls == 0 || rs == 0) continue;
        accumulate(out, BicoPair{lw, rw}, c * (sign_of(before) * eps * ls * rs));
      }
    }
  }
  return out;
}

Chain<BicoPair> GinftyAlgebra::delta(const BicoWord& w) const {
  Chain<BicoPair> out;
  for (const auto& t : delta_sym(w, degrees_)) accumulate(out, BicoPair{t.left, t.right}, t.coeff);
  return out;
}

std::pair<SparseMap, SparseMap> m_ell_extension(const GinftyAlgebra& a, int n) {
  const auto src = a.chain_basis(n);
  const auto tgt = a.chain_basis(n - 1);
  const auto idx = index_of(tgt);
  SparseMap m(tgt.size(), src.size()), l(tgt.size(), src.size());
  for (std::size_t c = 0; c < src.size(); ++c) {
    for (const auto& [w, k] : a.m(src[c])) m.add(lookup(idx, w), c, k);
    for (const auto& [w, k] : a.ell(src[c])) l.add(lookup(idx, w), c, k);
  }
  return {m, l};
}

SparseMap ginfty_boundary(const GinftyAlgebra& a, int n) {
  auto [m, l] = m_ell_extension(a, n);
  return m + l;
}

SparseMap chevalley_harrison_boundary(const GinftyAlgebra& a, int n) {
  const auto src = a.module_chain_basis(n);
  const auto tgt = a.module_chain_basis(n - 1);
  const auto idx = index_of(tgt);
  const auto& deg = a.degrees();
  const auto& cls = a.classes();
  const AlgebraPresentation& g = a.algebra();
  const ModulePresentation& mod = a.module();
  SparseMap d(tgt.size(), src.size());
  for (std::size_t c = 0; c < src.size(); ++c) {
    const BicoWord& w = src[c];
    const int y = w.back();
    const BicoWord xs(w.begin(), w.end() - 1);
    const int r = static_cast<int>(xs.size());
    int total = 0;
    for (int x : xs) total += deg[x];
    // (l + m)(X_1 ... X_r) . Y
    if (r > 0)
      for (const auto& [w0, k] : a.m_plus_ell(xs)) {
        BicoWord u = w0;
        u.push_back(y);
        d.add(lookup(idx, u), c, k);
      }
    // (-1)^{sum deg X_i} (X_1 ... X_r) . m(Y)
    if (const LetterChain* my = a.m_coefficients().find({y}))
      for (const auto& [y2, k] : *my) {
        BicoWord u = xs;
        u.push_back(y2);
        d.add(lookup(idx, u), c, k * sign_of(total));
      }
    // sum_i (-1)^{sum_{j != i} deg X_j} eps X_1 .. ^i .. X_r . l(X_i, Y)
    for (int i = 0; i < r; ++i) {
      int after = 0;
      for (int j = i + 1; j < r; ++j) after += deg[xs[j]];
      const int s = sign_of(total - deg[xs[i]]) * sign_of(long(deg[xs[i]]) * after);
      BicoWord rest = xs;
      rest.erase(rest.begin() + i);
      LetterChain lxy;
      for (const auto& [word, k] : bracket_on_H(g, cls[xs[i]].word, cls[y].word, &mod))
        accumulate(lxy, a.reduce(word), k * sign_of(deg[xs[i]]));
      for (const auto& [y2, k] : lxy) {
        BicoWord u = rest;
        u.push_back(y2);
        d.add(lookup(idx, u), c, k * s);
      }
    }
  }
  return d;
}

SparseMap chevalley_harrison_boundary_restricted(const GinftyAlgebra& a, int n) {
  const auto src = a.module_chain_basis(n);
  const auto tgt = a.module_chain_basis(n - 1);
  const auto idx = index_of(tgt);
  SparseMap d(tgt.size(), src.size());
  for (std::size_t c = 0; c < src.size(); ++c)
    for (const auto& [w, k] : a.m_plus_ell(src[c])) d.add(lookup(idx, w), c, k);
  return d;
}

std::vector<int> ginfty_cochain_degrees(const GinftyAlgebra& a, int n) {
  std::vector<int> out;
  const std::size_t dm = a.module().dim();
  for (const auto& w : a.chain_basis(n))
    for (std::size_t v = 0; v < dm; ++v) out.push_back(a.module().basis.degree(v) - 2 - a.degree(w));
  return out;
}

namespace {

// Pieces of the coboundary; `part` selects d_m (A terms and c o m) or d_l (action terms
// and c o l).
enum class Part { dm, dl };

SparseMap coboundary_part(const GinftyAlgebra& a, int n, Part part) {
  if (!a.has_module()) throw Error(ErrorCode::InvalidInput, "cochains need a module");
  const auto src = a.chain_basis(n);
  const auto tgt = a.chain_basis(n + 1);
  const auto idx = index_of(src);
  const auto& deg = a.degrees();
  const auto& cls = a.classes();
  const AlgebraPresentation& g = a.algebra();
  const ModulePresentation& mod = a.module();
  const AlgebraPresentation gc = forget_bracket(g);
  const StructureConstants right = effective_right_action(gc, mod);
  const auto ldeg = letter_degrees(g, &mod);
  const int ng = static_cast<int>(g.dim());
  const std::size_t dm = mod.dim();
  auto col_degree = [&](const BicoWord& s, std::size_t v) { return mod.basis.degree(v) - 2 - a.degree(s); };

  SparseMap d(tgt.size() * dm, src.size() * dm);
  for (std::size_t t = 0; t < tgt.size(); ++t) {
    const BicoWord& w = tgt[t];
    const int r = static_cast<int>(w.size());
    // - (-1)^{deg c} c((m or l)(w))
    const WordChain image = part == Part::dm ? a.m(w) : a.ell(w);
    for (const auto& [s_word, k] : image) {
      const std::size_t s = lookup(idx, s_word);
      for (std::size_t v = 0; v < dm; ++v)
        d.add(t * dm + v, s * dm + v, -k * sign_of(col_degree(s_word, v)));
    }
    if (part == Part::dm) {
      for (int j = 0; j < r; ++j) {
        const HClass& xj = cls[w[j]];
        if (xj.length < 2) continue;
        int before = 0, after = 0;
        for (int i = 0; i < j; ++i) before += deg[w[i]];
        for (int i = j + 1; i < r; ++i) after += deg[w[i]];
        const int first = xj.word.front(), last = xj.word.back();
        // a_1 (x) c(... a_2 .. a_p ...)
        const Letters tail(xj.word.begin() + 1, xj.word.end());
        for (const auto& [q, kq] : a.reduce(tail)) {
          BicoWord u = w;
          u[j] = q;
          auto [s_word, sg] = canonical(u, deg);
          if (sg == 0) continue;
          const std::size_t s = lookup(idx, s_word);
          for (std::size_t v = 0; v < dm; ++v) {
            const int sign = sign_of(long(ldeg[first]) * (col_degree(s_word, v) + before));
            for (const auto& [out, ko] : mixed_bar_m(gc, mod, right, {first, ng + static_cast<int>(v)}))
              d.add(t * dm + static_cast<std::size_t>(out[0] - ng), s * dm + v, kq * ko * (sg * sign));
          }
        }
        // c(... a_1 .. a_{p-1} ...) (x) a_p
        const Letters head(xj.word.begin(), xj.word.end() - 1);
        for (const auto& [q, kq] : a.reduce(head)) {
          BicoWord u = w;
          u[j] = q;
          auto [s_word, sg] = canonical(u, deg);
          if (sg == 0) continue;
          const std::size_t s = lookup(idx, s_word);
          for (std::size_t v = 0; v < dm; ++v) {
            const int sign = sign_of(long(ldeg[last]) * after);
            for (const auto& [out, ko] : mixed_bar_m(gc, mod, right, {ng + static_cast<int>(v), last}))
              d.add(t * dm + static_cast<std::size_t>(out[0] - ng), s * dm + v, kq * ko * (sg * sign));
          }
        }
      }
    } else if (r >= 2 && mod.bracket_action) {
      // Y . c(rest) for every single-letter factor Y
      for (int i = 0; i < r; ++i) {
        const HClass& xi = cls[w[i]];
        if (xi.length != 1) continue;
        int before = 0;
        for (int k = 0; k < i; ++k) before += deg[w[k]];
        BicoWord rest = w;
        rest.erase(rest.begin() + i);
        const std::size_t s = lookup(idx, rest);
        const int eps = sign_of(long(deg[w[i]]) * before) * sign_of(deg[w[i]]);
        for (std::size_t v = 0; v < dm; ++v) {
          const int sign = eps * sign_of(long(col_degree(rest, v)) * deg[w[i]]);
          for (const auto& tm : (*mod.bracket_action)(xi.word[0], static_cast<int>(v)))
            d.add(t * dm + static_cast<std::size_t>(tm.index), s * dm + v, tm.coeff * sign);
        }
      }
    }
  }
  return d;
}

}  // namespace

SparseMap ginfty_dm(const GinftyAlgebra& a, int n) { return coboundary_part(a, n, Part::dm); }
SparseMap ginfty_dl(const GinftyAlgebra& a, int n) { return coboundary_part(a, n, Part::dl); }
SparseMap chevalley_harrison_coboundary(const GinftyAlgebra& a, int n) { return ginfty_dm(a, n) + ginfty_dl(a, n); }

LetterChain GinftyCochain::at(const BicoWord& w, const std::vector<int>& degrees) const {
  auto [cw, s] = canonical(w, degrees);
  LetterChain out;
  if (s == 0) return out;
  auto it = values.find(cw);
  if (it != values.end()) accumulate(out, it->second, Scalar(s));
  return out;
}

SparseVector cochain_vector(const GinftyAlgebra& a, const GinftyCochain& c) {
  const auto basis = a.chain_basis(c.weight);
  const auto idx = index_of(basis);
  const std::size_t dm = a.module().dim();
  std::map<std::size_t, Scalar> v;
  for (const auto& [w, val] : c.values) {
    if (a.weight(w) != c.weight) throw Error(ErrorCode::ShapeMismatch, "cochain word of the wrong weight");
    auto it = idx.find(w);
    if (it == idx.end()) throw Error(ErrorCode::ShapeMismatch, "cochain given on a non-canonical word");
    for (const auto& [u, k] : val) v[it->second * dm + static_cast<std::size_t>(u)] += k;
  }
  return sparse_from_map(v);
}

GinftyCochain cochain_from_vector(const GinftyAlgebra& a, int n, const SparseVector& v) {
  const auto basis = a.chain_basis(n);
  const std::size_t dm = a.module().dim();
  GinftyCochain c;
  c.weight = n;
  for (const auto& [i, k] : v) accumulate(c.values[basis[i / dm]], static_cast<int>(i % dm), k);
  return c;
}

GinftyCochain chevalley_harrison_coboundary(const GinftyAlgebra& a, const GinftyCochain& c) {
  return cochain_from_vector(a, c.weight + 1, chevalley_harrison_coboundary(a, c.weight).apply(cochain_vector(a, c)));
}

namespace {

using Op = std::function<WordChain(const BicoWord&)>;

WordChain apply_op(const Op& f, const WordChain& c) {
  WordChain out;
  for (const auto& [w, k] : c) accumulate(out, f(w), k);
  return out;
}

// (f (x) 1 + 1 (x) f) with f of odd degree.
Chain<BicoPair> tensor_sum(const GinftyAlgebra& a, const Op& f, const Chain<BicoPair>& c) {
  Chain<BicoPair> out;
  for (const auto& [p, k] : c) {
    for (const auto& [u, ku] : f(p.first)) accumulate(out, BicoPair{u, p.second}, k * ku);
    const int s = sign_of(a.degree(p.first));
    for (const auto& [u, ku] : f(p.second)) accumulate(out, BicoPair{p.first, u}, k * ku * s);
  }
  return out;
}

Chain<BicoPair> tau(const GinftyAlgebra& a, const Chain<BicoPair>& c) {
  Chain<BicoPair> out;
  for (const auto& [p, k] : c)
    accumulate(out, BicoPair{p.second, p.first}, k * sign_of(long(a.degree(p.first)) * a.degree(p.second)));
  return out;
}

// (K (x) 1) and (1 (x) K) on pairs; odd K picks up (-1)^{|A|} on the right.
template <class K>
Chain<BicoTriple> left_split(const Chain<BicoPair>& c, K k) {
  Chain<BicoTriple> out;
  for (const auto& [p, x] : c)
    for (const auto& [q, y] : k(p.first)) accumulate(out, BicoTriple{q.first, q.second, p.second}, x * y);
  return out;
}

template <class K>
Chain<BicoTriple> right_split(const GinftyAlgebra& a, const Chain<BicoPair>& c, K k, bool odd) {
  Chain<BicoTriple> out;
  for (const auto& [p, x] : c) {
    const int s = odd ? sign_of(a.degree(p.first)) : 1;
    for (const auto& [q, y] : k(p.second)) accumulate(out, BicoTriple{p.first, q.first, q.second}, x * y * s);
  }
  return out;
}

Chain<BicoTriple> tau12(const GinftyAlgebra& a, const Chain<BicoTriple>& c) {
  Chain<BicoTriple> out;
  for (const auto& [t, k] : c)
    accumulate(out, BicoTriple{t[1], t[0], t[2]}, k * sign_of(long(a.degree(t[0])) * a.degree(t[1])));
  return out;
}

Chain<BicoTriple> tau23(const GinftyAlgebra& a, const Chain<BicoTriple>& c) {
  Chain<BicoTriple> out;
  for (const auto& [t, k] : c)
    accumulate(out, BicoTriple{t[0], t[2], t[1]}, k * sign_of(long(a.degree(t[1])) * a.degree(t[2])));
  return out;
}

template <class K>
Chain<K> plus(Chain<K> x, const Chain<K>& y, const Scalar& c = 1) {
  accumulate(x, y, c);
  return x;
}

}  // namespace

std::vector<PropertyVerdict> ginfty_properties(const GinftyAlgebra& a, int max_weight) {
  const Op m = [&](const BicoWord& w) { return a.m(w); };
  const Op l = [&](const BicoWord& w) { return a.ell(w); };
  auto kap = [&](const BicoWord& w) { return a.kappa(w); };
  auto del = [&](const BicoWord& w) { return a.delta(w); };
  auto del_chain = [&](const WordChain& c) {
    Chain<BicoPair> out;
    for (const auto& [w, k] : c) accumulate(out, del(w), k);
    return out;
  };
  auto kappa_chain = [&](const WordChain& c) {
    Chain<BicoPair> out;
    for (const auto& [w, k] : c) accumulate(out, kap(w), k);
    return out;
  };

  using Check = std::function<bool(const BicoWord&)>;
  std::vector<std::pair<std::string, Check>> checks{
      {"Delta cocommutative", [&](const BicoWord& w) { return tau(a, del(w)) == del(w); }},
      {"Delta coassociative",
       [&](const BicoWord& w) {
         return left_split(del(w), del) == right_split(a, del(w), del, false);
       }},
      {"kappa cocommutative", [&](const BicoWord& w) { return tau(a, kap(w)) == kap(w); }},
      {"kappa coJacobi",
       [&](const BicoWord& w) {
         const auto kk = left_split(kap(w), kap);
         auto sum = plus(plus(kk, tau12(a, tau23(a, kk))), tau23(a, tau12(a, kk)));
         return sum.empty();
       }},
      {"kappa coLeibniz",
       [&](const BicoWord& w) {
         const auto lhs = right_split(a, kap(w), del, false);
         const auto rhs = plus(left_split(del(w), kap), tau12(a, right_split(a, del(w), kap, true)));
         return lhs == rhs;
       }},
      {"m kappa-coderivation",
       [&](const BicoWord& w) { return tensor_sum(a, m, kap(w)) == plus(Chain<BicoPair>{}, kappa_chain(m(w)), Scalar(-1)); }},
      {"m Delta-coderivation", [&](const BicoWord& w) { return tensor_sum(a, m, del(w)) == del_chain(m(w)); }},
      {"m o m = 0", [&](const BicoWord& w) { return apply_op(m, m(w)).empty(); }},
      {"l kappa-coderivation",
       [&](const BicoWord& w) { return tensor_sum(a, l, kap(w)) == plus(Chain<BicoPair>{}, kappa_chain(l(w)), Scalar(-1)); }},
      {"l Delta-coderivation", [&](const BicoWord& w) { return tensor_sum(a, l, del(w)) == del_chain(l(w)); }},
      {"l o l = 0", [&](const BicoWord& w) { return apply_op(l, l(w)).empty(); }},
      {"m l + l m = 0", [&](const BicoWord& w) { return plus(apply_op(m, l(w)), apply_op(l, m(w))).empty(); }},
  };

  std::vector<PropertyVerdict> out;
  for (const auto& [name, check] : checks) {
    PropertyVerdict v;
    v.name = name;
    for (int n = 1; n <= max_weight && v.holds; ++n)
      for (const auto& w : a.chain_basis(n))
        if (!check(w)) {
          v.holds = false;
          v.first_failure_weight = n;
          break;
        }
    out.push_back(v);
  }
  return out;
}

BettiReport chevalley_harrison_betti(const AlgebraPresentation& g, const ModulePresentation& m, int n_max) {
  if (n_max < 1) throw Error(ErrorCode::InvalidInput, "weight must be at least 1");
  const GinftyAlgebra a(g, &m, n_max + 1);
  BettiReport report;
  report.theory = "ginfty";
  report.direction = "homology+cohomology";
  bool graded = false;
  for (const int d : a.degrees())
    if (d != -1 && d != 0) graded = true;  // single letters of degree 0 algebras sit at -1
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (g.degree(static_cast<int>(i)) != 0) graded = true;

  auto chain_tags = [&](int n) {
    std::vector<int> t;
    if (!graded) return t;
    for (const auto& w : a.module_chain_basis(n)) t.push_back(a.degree(w));
    return t;
  };
  bool chains_ok = true;
  for (int n = 0; n <= n_max; ++n) {
    const SparseMap out = n == 0 ? SparseMap(0, a.module_chain_basis(0).size()) : chevalley_harrison_boundary(a, n);
    const SparseMap in = chevalley_harrison_boundary(a, n + 1);
    try {
      for (auto e : betti_entries(n, out, in, chain_tags(n))) {
        e.note = "chains";
        report.entries.push_back(e);
      }
    } catch (const Error& err) {
      if (err.code() != ErrorCode::CompositeNotZero) throw;
      chains_ok = false;
    }
  }
  report.check("boundary squares to zero on C_N(G,M)", chains_ok);

  bool cochains_ok = true;
  for (int n = 1; n <= n_max; ++n) {
    const SparseMap out = chevalley_harrison_coboundary(a, n);
    const SparseMap in = n == 1 ? SparseMap(out.cols(), 0) : chevalley_harrison_coboundary(a, n - 1);
    std::vector<int> tags;
    if (graded) tags = ginfty_cochain_degrees(a, n);
    try {
      for (auto e : betti_entries(n, out, in, tags)) {
        e.note = "cochains";
        report.entries.push_back(e);
      }
    } catch (const Error& err) {
      if (err.code() != ErrorCode::CompositeNotZero) throw;
      cochains_ok = false;
    }
  }
  report.check("(d_m + d_l)^2 = 0 on C^N(G,M)", cochains_ok);
  return report;
}

}  // namespace envelope

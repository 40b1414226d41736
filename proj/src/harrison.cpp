#include "envelope/harrison.hpp"

#include <memory>
#include <mutex>
#include <tuple>

#include "envelope/error.hpp"

namespace envelope {

WordChain shuffle_product(const Letters& alpha, const Letters& beta, const std::vector<int>& degrees) {
  const int p = static_cast<int>(alpha.size()), q = static_cast<int>(beta.size());
  Letters joined = alpha;
  joined.insert(joined.end(), beta.begin(), beta.end());
  std::vector<int> deg;
  deg.reserve(joined.size());
  for (int x : joined) deg.push_back(degrees.at(x));
  WordChain out;
  for (const auto& sigma : enumerate_shuffles(p, q)) {
    Permutation inv = inverse(sigma);
    Letters word(joined.size());
    for (std::size_t k = 0; k < joined.size(); ++k) word[k] = joined[inv[k]];
    accumulate(out, word, Scalar(koszul_sign(deg, inv)));
  }
  return out;
}

Subspace shuffle_subspace(const std::vector<Letters>& ambient, const std::vector<int>& degrees) {
  std::map<Letters, std::size_t> index;
  for (std::size_t i = 0; i < ambient.size(); ++i) index.emplace(ambient[i], i);
  std::vector<SparseVector> gens;
  for (const auto& w : ambient) {
    const std::size_t n = w.size();
    // bat(beta, alpha) = +-bat(alpha, beta), so p <= n/2 already spans everything
    for (std::size_t p = 1; 2 * p <= n; ++p) {
      WordChain c = shuffle_product(Letters(w.begin(), w.begin() + p), Letters(w.begin() + p, w.end()), degrees);
      std::map<std::size_t, Scalar> v;
      for (const auto& [u, k] : c) {
        auto it = index.find(u);
        if (it == index.end()) throw Error(ErrorCode::DimensionMismatch, "ambient words not closed under shuffles");
        v[it->second] += k;
      }
      SparseVector sv = sparse_from_map(v);
      if (!sv.empty()) gens.push_back(std::move(sv));
    }
  }
  return Subspace(ambient.size(), gens);
}

std::vector<int> mixed_shifted_degrees(const AlgebraPresentation& r, const ModulePresentation* m) {
  std::vector<int> deg;
  for (std::size_t i = 0; i < r.dim(); ++i) deg.push_back(r.shifted(static_cast<int>(i)));
  if (m)
    for (std::size_t v = 0; v < m->dim(); ++v) deg.push_back(m->basis.degree(v) - 1);
  return deg;
}

namespace {

// Building the relations is the expensive step; spaces are looked up by shape.
using SpaceKey = std::tuple<std::vector<int>, int, int>;
std::mutex cache_mutex;
std::map<SpaceKey, std::shared_ptr<const WordSpace>> space_cache;

WordSpace cached_space(const std::vector<int>& degrees, int dim_a, int dim_m, int n, bool mixed) {
  SpaceKey key{degrees, mixed ? dim_a : -1, n};
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = space_cache.find(key);
    if (it != space_cache.end()) return *it->second;
  }
  std::vector<Letters> words = mixed ? mixed_words(dim_a, dim_m, n) : all_words(dim_a, n);
  Subspace rel = shuffle_subspace(words, degrees);
  auto space = std::make_shared<const WordSpace>(std::move(words), std::move(rel));
  std::lock_guard<std::mutex> lock(cache_mutex);
  space_cache.emplace(key, space);
  return *space;
}

void require_commutative(const AlgebraPresentation& r) {
  if (r.kind != Kind::commutative && r.kind != Kind::gerstenhaber)
    throw Error(ErrorCode::InvalidInput, "Harrison complexes need a commutative algebra");
  if (!r.product) throw Error(ErrorCode::MalformedPresentation, "algebra has no product");
}

void require_valid_commutative(const AlgebraPresentation& r, const ModulePresentation& m) {
  require_commutative(r);
  AlgebraPresentation plain = r.kind == Kind::gerstenhaber ? forget_bracket(r) : r;
  require_valid(plain, m);
}

template <class Op>
SparseMap quotient_operator_matrix(const WordSpace& src, const WordSpace& tgt, Op op) {
  if (!preserves_relations(src, tgt, op))
    throw Error(ErrorCode::QuotientNotPreserved, "differential does not preserve the shuffle relations");
  return word_operator_matrix(src, tgt, op);
}

}  // namespace

WordSpace harrison_chain_space(const AlgebraPresentation& r, int n) {
  require_commutative(r);
  if (n < 1) return WordSpace{};
  auto deg = mixed_shifted_degrees(r, nullptr);
  return cached_space(deg, static_cast<int>(r.dim()), 0, n, false);
}

WordSpace harrison_chain_space(const AlgebraPresentation& r, const ModulePresentation& m, int n) {
  require_commutative(r);
  if (n < 1) return WordSpace{};
  auto deg = mixed_shifted_degrees(r, &m);
  return cached_space(deg, static_cast<int>(r.dim()), static_cast<int>(m.dim()), n, true);
}

std::vector<SplitTerm> cobracket_delta(const Letters& w, const std::vector<int>& degrees) {
  std::vector<SplitTerm> out;
  for (std::size_t j = 1; j < w.size(); ++j) {
    Letters u(w.begin(), w.begin() + j), v(w.begin() + j, w.end());
    long du = 0, dv = 0;
    for (int x : u) du += degrees.at(x);
    for (int x : v) dv += degrees.at(x);
    out.push_back({u, v, Scalar(1)});
    out.push_back({v, u, Scalar(-sign_of(du * dv))});
  }
  return out;
}

Chain<WordPair> cobracket_chain(const WordChain& c, const std::vector<int>& degrees) {
  Chain<WordPair> out;
  for (const auto& [w, k] : c)
    for (const auto& t : cobracket_delta(w, degrees)) accumulate(out, WordPair{t.left, t.right}, t.coeff * k);
  return out;
}

SparseMap harrison_differential(const AlgebraPresentation& r, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "weight must be at least 1");
  WordSpace src = harrison_chain_space(r, n), tgt = harrison_chain_space(r, n - 1);
  return quotient_operator_matrix(src, tgt, [&](const Letters& w) { return bar_m(r, w); });
}

SparseMap harrison_boundary(const AlgebraPresentation& r, const ModulePresentation& m, int n) {
  if (n < 0) throw Error(ErrorCode::InvalidInput, "negative degree");
  require_valid_commutative(r, m);
  const StructureConstants right = effective_right_action(r, m);
  WordSpace src = harrison_chain_space(r, m, n + 1), tgt = harrison_chain_space(r, m, n);
  return quotient_operator_matrix(src, tgt, [&](const Letters& w) { return mixed_bar_m(r, m, right, w); });
}

SparseMap harrison_boundary_semidirect(const AlgebraPresentation& r, const ModulePresentation& m, int n) {
  if (n < 0) throw Error(ErrorCode::InvalidInput, "negative degree");
  require_valid_commutative(r, m);
  AlgebraPresentation b = semidirect(r.kind == Kind::gerstenhaber ? forget_bracket(r) : r, m);
  WordSpace src = harrison_chain_space(r, m, n + 1), tgt = harrison_chain_space(r, m, n);
  return quotient_operator_matrix(src, tgt, [&](const Letters& w) { return bar_m(b, w); });
}

SparseMap harrison_cohomology_coboundary(const AlgebraPresentation& r, const ModulePresentation& m, int n) {
  if (n < 0) throw Error(ErrorCode::InvalidInput, "negative arity");
  require_valid_commutative(r, m);
  const std::size_t dm = m.dim();
  WordSpace src = n == 0 ? WordSpace({Letters{}}) : harrison_chain_space(r, n);
  WordSpace tgt = harrison_chain_space(r, n + 1);
  // evaluate on every ambient word, then check the result vanishes on shuffles
  WordSpace plain(tgt.ambient());
  SparseMap full = word_cochain_coboundary(r, m, src, plain);
  if (tgt.relations()) {
    for (const auto& rel : tgt.relations()->rows())
      for (std::size_t v = 0; v < dm; ++v) {
        std::map<std::size_t, Scalar> acc;
        for (const auto& [i, k] : rel)
          for (const auto& [col, x] : full.row(i * dm + v)) acc[col] += k * x;
        for (const auto& [col, x] : acc)
          if (x != 0) throw Error(ErrorCode::QuotientNotPreserved, "coboundary does not vanish on shuffles");
      }
  }
  SparseMap out(tgt.dim() * dm, src.dim() * dm);
  for (std::size_t t = 0; t < tgt.dim(); ++t) {
    const std::size_t i = plain.ambient_index(tgt.representative(t));
    for (std::size_t v = 0; v < dm; ++v)
      for (const auto& [col, x] : full.row(i * dm + v)) out.add(t * dm + v, col, x);
  }
  return out;
}

LetterChain evaluate_on_class(const TaylorCoefficients& c, const WordSpace& space, const Letters& w) {
  LetterChain out;
  for (const auto& [q, k] : space.coordinates(WordChain{{w, Scalar(1)}}))
    if (const LetterChain* val = c.find(space.representative(q))) accumulate(out, *val, k);
  return out;
}

CocycleReport c_infty_morphism_cocycle_check(const AlgebraPresentation& r, const ModulePresentation& m,
                                             const TaylorCoefficients& c, int n_max) {
  require_valid_commutative(r, m);
  require_cochain_degree(r, m, c, 0);
  const AlgebraPresentation plain = r.kind == Kind::gerstenhaber ? forget_bracket(r) : r;
  const AlgebraPresentation b = semidirect_unchecked(plain, m);
  const int na = static_cast<int>(r.dim());
  // F on every ambient word: iota + c_1 in arity 1, c_j through the quotient class
  TaylorCoefficients f;
  for (int j = 1; j <= n_max; ++j) {
    WordSpace space = harrison_chain_space(r, j);
    for (const auto& w : all_words(na, j)) {
      LetterChain val;
      if (j == 1) val[w[0]] = 1;
      for (const auto& [v, k] : evaluate_on_class(c, space, w)) accumulate(val, na + v, k);
      if (!val.empty()) f.set(w, val);
    }
  }
  CocycleReport rep;
  for (int n = 1; n <= n_max; ++n) {
    bool ok = true;
    for (const auto& w : all_words(na, n)) {
      WordChain lhs = single_letter_part(bar_m(b, lift_morphism(f, w)));
      WordChain rhs = single_letter_part(lift_morphism(f, bar_m(plain, w)));
      if (lhs != rhs) {
        ok = false;
        break;
      }
    }
    if (!ok) rep.morphism_failures.push_back(n);
  }
  for (int j = 1; j < n_max; ++j) {
    WordSpace src = harrison_chain_space(r, j);
    SparseVector v = cochain_vector(c, j, src, m.dim());
    if (v.empty()) continue;
    if (!harrison_cohomology_coboundary(r, m, j).apply(v).empty()) rep.cocycle_failures.push_back(j);
  }
  rep.is_morphism = rep.morphism_failures.empty();
  rep.verdicts_agree = rep.is_morphism == rep.cocycle_failures.empty();
  return rep;
}

TaylorCoefficients harrison_trivial_cocycle(const AlgebraPresentation& r, const ModulePresentation& m,
                                            const TaylorCoefficients& b, int n_max) {
  require_valid_commutative(r, m);
  require_cochain_degree(r, m, b, -1);
  TaylorCoefficients c;
  for (int n = 2; n <= n_max; ++n) {
    WordSpace src = harrison_chain_space(r, n - 1), tgt = harrison_chain_space(r, n);
    SparseVector v = harrison_cohomology_coboundary(r, m, n - 1).apply(cochain_vector(b, n - 1, src, m.dim()));
    TaylorCoefficients cn = cochain_from_vector(v, n, tgt, m.dim(), 0);
    for (const auto& [w, val] : cn.maps[n]) c.set(w, val);
  }
  return c;
}

bool is_harrison_coboundary(const AlgebraPresentation& r, const ModulePresentation& m, const TaylorCoefficients& c,
                            int n) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "arity must be at least 1");
  WordSpace tgt = harrison_chain_space(r, n);
  return in_column_space(harrison_cohomology_coboundary(r, m, n - 1), cochain_vector(c, n, tgt, m.dim()));
}

}  // namespace envelope

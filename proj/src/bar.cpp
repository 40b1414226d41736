#include "envelope/bar.hpp"

#include <algorithm>

#include "envelope/error.hpp"

namespace envelope {

void TaylorCoefficients::set(const Letters& w, const LetterChain& value) {
  auto& slot = maps[static_cast<int>(w.size())][w];
  slot = value;
}

const LetterChain* TaylorCoefficients::find(const Letters& w) const {
  auto it = maps.find(static_cast<int>(w.size()));
  if (it == maps.end()) return nullptr;
  auto jt = it->second.find(w);
  return jt == it->second.end() ? nullptr : &jt->second;
}

std::vector<std::pair<Letters, Letters>> deconcat(const Letters& w) {
  std::vector<std::pair<Letters, Letters>> out;
  for (std::size_t j = 1; j < w.size(); ++j)
    out.emplace_back(Letters(w.begin(), w.begin() + j), Letters(w.begin() + j, w.end()));
  return out;
}

Chain<WordPair> deconcat_chain(const WordChain& c) {
  Chain<WordPair> out;
  for (const auto& [w, k] : c)
    for (auto& p : deconcat(w)) accumulate(out, p, k);
  return out;
}

WordChain lift_coderivation(const TaylorCoefficients& t, const Letters& w, const std::vector<int>& degrees) {
  WordChain out;
  const int n = static_cast<int>(w.size());
  for (const auto& [r, table] : t.maps) {
    if (r > n || r < 1) continue;
    long prefix = 0;
    for (int j = 0; j + r <= n; ++j) {
      if (j > 0) prefix += degrees[w[j - 1]];
      Letters window(w.begin() + j, w.begin() + j + r);
      auto it = table.find(window);
      if (it != table.end()) {
        const int s = sign_of(long(t.degree) * prefix);
        for (const auto& [letter, c] : it->second) {
          Letters word(w.begin(), w.begin() + j);
          word.push_back(letter);
          word.insert(word.end(), w.begin() + j + r, w.end());
          accumulate(out, word, c * s);
        }
      }
    }
  }
  return out;
}

WordChain lift_coderivation(const TaylorCoefficients& t, const WordChain& c, const std::vector<int>& degrees) {
  WordChain out;
  for (const auto& [w, k] : c) accumulate(out, lift_coderivation(t, w, degrees), k);
  return out;
}

namespace {

// F(w[from..]) as a chain of words, composition by composition.
WordChain morphism_tail(const TaylorCoefficients& t, const Letters& w, std::size_t from) {
  WordChain out;
  if (from == w.size()) {
    out[Letters{}] = 1;
    return out;
  }
  for (std::size_t r = 1; from + r <= w.size(); ++r) {
    const LetterChain* head = t.find(Letters(w.begin() + from, w.begin() + from + r));
    if (!head || head->empty()) continue;
    WordChain rest = morphism_tail(t, w, from + r);
    for (const auto& [letter, c] : *head)
      for (const auto& [tail, k] : rest) {
        Letters word{letter};
        word.insert(word.end(), tail.begin(), tail.end());
        accumulate(out, word, c * k);
      }
  }
  return out;
}

}  // namespace

WordChain lift_morphism(const TaylorCoefficients& t, const Letters& w) {
  if (w.empty()) return {};
  return morphism_tail(t, w, 0);
}

WordChain lift_morphism(const TaylorCoefficients& t, const WordChain& c) {
  WordChain out;
  for (const auto& [w, k] : c) accumulate(out, lift_morphism(t, w), k);
  return out;
}

WordChain single_letter_part(const WordChain& c) {
  WordChain out;
  for (const auto& [w, k] : c)
    if (w.size() == 1) out.emplace(w, k);
  return out;
}

TaylorCoefficients product_coderivation(const AlgebraPresentation& a) {
  if (!a.product) throw Error(ErrorCode::MalformedPresentation, "algebra has no product");
  TaylorCoefficients t;
  t.degree = 1;
  const int n = static_cast<int>(a.dim());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& terms = (*a.product)(i, j);
      if (terms.empty()) continue;
      LetterChain v;
      for (const auto& term : terms) accumulate(v, term.index, term.coeff * sign_of(a.shifted(i)));
      t.set({i, j}, v);
    }
  return t;
}

WordChain bar_m(const AlgebraPresentation& a, const Letters& w) {
  if (!a.product) throw Error(ErrorCode::MalformedPresentation, "algebra has no product");
  WordChain out;
  long prefix = 0;
  for (std::size_t j = 0; j + 1 < w.size(); ++j) {
    const int s = sign_of(prefix + a.shifted(w[j]));
    prefix += a.shifted(w[j]);
    for (const auto& term : (*a.product)(w[j], w[j + 1])) {
      Letters word(w.begin(), w.begin() + j);
      word.push_back(term.index);
      word.insert(word.end(), w.begin() + j + 2, w.end());
      accumulate(out, word, term.coeff * s);
    }
  }
  return out;
}

WordChain bar_m(const AlgebraPresentation& a, const WordChain& c) {
  WordChain out;
  for (const auto& [w, k] : c) accumulate(out, bar_m(a, w), k);
  return out;
}

std::vector<Letters> all_words(int alphabet, int length) {
  std::vector<Letters> out;
  if (length < 0) return out;
  if (length > 0 && alphabet <= 0) return out;
  Letters w(length, 0);
  while (true) {
    out.push_back(w);
    int k = length - 1;
    while (k >= 0 && w[k] == alphabet - 1) w[k--] = 0;
    if (k < 0) break;
    ++w[k];
  }
  return out;
}

std::vector<Letters> mixed_words(int dim_a, int dim_m, int length) {
  std::vector<Letters> out;
  if (length < 1 || dim_m <= 0) return out;
  auto rest = all_words(dim_a, length - 1);
  for (int pos = 0; pos < length; ++pos) {
    std::vector<Letters> block;
    for (const auto& r : rest)
      for (int v = 0; v < dim_m; ++v) {
        Letters w(r.begin(), r.begin() + pos);
        w.push_back(dim_a + v);
        w.insert(w.end(), r.begin() + pos, r.end());
        block.push_back(std::move(w));
      }
    std::sort(block.begin(), block.end());
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

WordSpace::WordSpace(std::vector<Letters> ambient, std::optional<Subspace> relations)
    : ambient_(std::move(ambient)), relations_(std::move(relations)) {
  for (std::size_t i = 0; i < ambient_.size(); ++i) {
    if (!index_.emplace(ambient_[i], i).second) throw Error(ErrorCode::InvalidInput, "duplicate word in space");
  }
  if (relations_ && relations_->ambient_dim() != ambient_.size())
    throw Error(ErrorCode::DimensionMismatch, "relations live in a different space");
  basis_pos_.assign(ambient_.size(), -1);
  for (std::size_t i = 0; i < ambient_.size(); ++i) {
    if (relations_ && relations_->is_pivot(i)) continue;
    basis_pos_[i] = static_cast<long>(basis_.size());
    basis_.push_back(i);
  }
}

std::size_t WordSpace::ambient_index(const Letters& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) throw Error(ErrorCode::DimensionMismatch, "word outside the chain space");
  return it->second;
}

SparseVector WordSpace::ambient_vector(const WordChain& c) const {
  std::map<std::size_t, Scalar> m;
  for (const auto& [w, k] : c) m[ambient_index(w)] += k;
  return sparse_from_map(m);
}

SparseVector WordSpace::coordinates(const WordChain& c) const {
  SparseVector v = ambient_vector(c);
  if (relations_) v = quotient_reduce(*relations_, v);
  SparseVector out;
  out.reserve(v.size());
  for (auto& [i, k] : v) out.emplace_back(static_cast<std::size_t>(basis_pos_[i]), std::move(k));
  return out;
}

WordChain WordSpace::chain_of(const SparseVector& coords) const {
  WordChain out;
  for (const auto& [i, k] : coords) accumulate(out, representative(i), k);
  return out;
}

WordSpace tensor_space(const AlgebraPresentation& a, int length) {
  if (length < 1) return WordSpace{};
  return WordSpace(all_words(static_cast<int>(a.dim()), length));
}

WordSpace mixed_tensor_space(const AlgebraPresentation& a, const ModulePresentation& m, int length) {
  return WordSpace(mixed_words(static_cast<int>(a.dim()), static_cast<int>(m.dim()), length));
}

SparseMap bar_differential(const AlgebraPresentation& a, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "weight must be at least 1");
  WordSpace src = tensor_space(a, n), tgt = tensor_space(a, n - 1);
  return word_operator_matrix(src, tgt, [&](const Letters& w) { return bar_m(a, w); });
}

SparseMap bar_boundary(const AlgebraPresentation& a, int n) {
  if (n < 0) throw Error(ErrorCode::InvalidInput, "negative degree");
  return bar_differential(a, n + 1).scaled(-1);
}

SparseMap bar_homotopy(const AlgebraPresentation& a, int n) {
  if (!a.unit) throw Error(ErrorCode::NoUnit, "bar homotopy needs a unit");
  if (n < 0) throw Error(ErrorCode::InvalidInput, "negative degree");
  WordSpace tgt = tensor_space(a, n + 1);
  if (n == 0) return SparseMap(tgt.dim(), 0);
  WordSpace src = tensor_space(a, n);
  const int u = *a.unit;
  return word_operator_matrix(src, tgt, [&](const Letters& w) {
    Letters x{u};
    x.insert(x.end(), w.begin(), w.end());
    return WordChain{{x, Scalar(1)}};
  });
}

void require_valid(const AlgebraPresentation& a, const ModulePresentation& m) {
  auto va = validate(a);
  if (!va.empty()) throw Error(ErrorCode::InvalidInput, "algebra fails " + va.front().describe());
  auto vm = validate_module(a, m);
  if (!vm.empty()) throw Error(ErrorCode::InvalidInput, "module fails " + vm.front().describe());
}

WordChain mixed_bar_m(const AlgebraPresentation& a, const ModulePresentation& m, const StructureConstants& right,
                      const Letters& w) {
  const int na = static_cast<int>(a.dim());
  auto deg = [&](int x) { return x < na ? a.shifted(x) : m.basis.degree(static_cast<std::size_t>(x - na)) - 1; };
  WordChain out;
  long prefix = 0;
  for (std::size_t j = 0; j + 1 < w.size(); ++j) {
    const int x = w[j], y = w[j + 1];
    const int s = sign_of(prefix + deg(x));
    prefix += deg(x);
    if (x >= na && y >= na) continue;
    std::vector<Term> prod;
    int offset = 0;
    if (x < na && y < na) {
      prod = (*a.product)(x, y);
    } else if (x < na) {
      if (m.left) prod = (*m.left)(x, y - na);
      offset = na;
    } else {
      prod = right(x - na, y);
      offset = na;
    }
    for (const auto& t : prod) {
      Letters word(w.begin(), w.begin() + j);
      word.push_back(t.index + offset);
      word.insert(word.end(), w.begin() + j + 2, w.end());
      accumulate(out, word, t.coeff * s);
    }
  }
  return out;
}

SparseMap hochschild_boundary(const AlgebraPresentation& a, const ModulePresentation& m, int n) {
  if (n < 0) throw Error(ErrorCode::InvalidInput, "negative degree");
  require_valid(a, m);
  StructureConstants right = effective_right_action(a, m);
  WordSpace src = mixed_tensor_space(a, m, n + 1);
  WordSpace tgt = mixed_tensor_space(a, m, n);
  return word_operator_matrix(src, tgt, [&](const Letters& w) { return mixed_bar_m(a, m, right, w); });
}

SparseMap hochschild_boundary_semidirect(const AlgebraPresentation& a, const ModulePresentation& m, int n) {
  if (n < 0) throw Error(ErrorCode::InvalidInput, "negative degree");
  AlgebraPresentation b = semidirect(a, m);
  WordSpace src = mixed_tensor_space(a, m, n + 1);
  WordSpace tgt = mixed_tensor_space(a, m, n);
  return word_operator_matrix(src, tgt, [&](const Letters& w) { return bar_m(b, w); });
}

std::vector<int> word_cochain_degrees(const AlgebraPresentation& a, const ModulePresentation& m,
                                      const WordSpace& src) {
  std::vector<int> out;
  for (std::size_t q = 0; q < src.dim(); ++q) {
    int in = 0;
    for (int x : src.representative(q)) in += a.shifted(x);
    for (std::size_t v = 0; v < m.dim(); ++v) out.push_back(m.basis.degree(v) - 1 - in);
  }
  return out;
}

SparseMap word_cochain_coboundary(const AlgebraPresentation& a, const ModulePresentation& m, const WordSpace& src,
                                  const WordSpace& tgt) {
  const std::size_t dm = m.dim();
  const StructureConstants right = effective_right_action(a, m);
  const std::vector<int> fdeg = word_cochain_degrees(a, m, src);
  auto mdeg = [&](std::size_t v) { return m.basis.degree(v) - 1; };
  SparseMap out(tgt.dim() * dm, src.dim() * dm);
  for (std::size_t t = 0; t < tgt.dim(); ++t) {
    const Letters& w = tgt.representative(t);
    const std::size_t n = w.size();
    const int a0 = w.front(), an = w.back();
    // (-1)^{deg f deg a_0} m(a_0 (x) f(a_1..a_n))
    if (m.left) {
      for (const auto& [q, c] : src.coordinates(WordChain{{Letters(w.begin() + 1, w.end()), Scalar(1)}}))
        for (std::size_t v = 0; v < dm; ++v) {
          const int df = fdeg[q * dm + v];
          const int s = sign_of(long(df) * a.shifted(a0) + a.shifted(a0));
          for (const auto& term : (*m.left)(a0, static_cast<int>(v)))
            out.add(t * dm + term.index, q * dm + v, c * term.coeff * s);
        }
    }
    // m(f(a_0..a_{n-1}) (x) a_n)
    for (const auto& [q, c] : src.coordinates(WordChain{{Letters(w.begin(), w.begin() + (n - 1)), Scalar(1)}}))
      for (std::size_t v = 0; v < dm; ++v) {
        const int s = sign_of(mdeg(v));
        for (const auto& term : right(static_cast<int>(v), an))
          out.add(t * dm + term.index, q * dm + v, c * term.coeff * s);
      }
    // -(-1)^{deg f} f(m(a_0..a_n))
    for (const auto& [q, c] : src.coordinates(bar_m(a, w)))
      for (std::size_t v = 0; v < dm; ++v) {
        const int df = fdeg[q * dm + v];
        out.add(t * dm + v, q * dm + v, -c * sign_of(df));
      }
  }
  return out;
}

SparseMap hochschild_cohomology_coboundary(const AlgebraPresentation& a, const ModulePresentation& m, int n) {
  if (n < 0) throw Error(ErrorCode::InvalidInput, "negative arity");
  require_valid(a, m);
  WordSpace src = n == 0 ? WordSpace({Letters{}}) : tensor_space(a, n);
  return word_cochain_coboundary(a, m, src, tensor_space(a, n + 1));
}

SparseVector cochain_vector(const TaylorCoefficients& c, int arity, const WordSpace& src, std::size_t dim_m) {
  std::map<std::size_t, Scalar> out;
  for (std::size_t q = 0; q < src.dim(); ++q) {
    const Letters& w = src.representative(q);
    if (static_cast<int>(w.size()) != arity) throw Error(ErrorCode::ShapeMismatch, "cochain arity mismatch");
    const LetterChain* val = c.find(w);
    if (!val) continue;
    for (const auto& [v, k] : *val) {
      if (v < 0 || static_cast<std::size_t>(v) >= dim_m) throw Error(ErrorCode::InvalidInput, "module index out of range");
      out[q * dim_m + v] += k;
    }
  }
  return sparse_from_map(out);
}

TaylorCoefficients cochain_from_vector(const SparseVector& v, int arity, const WordSpace& src, std::size_t dim_m,
                                       int degree) {
  TaylorCoefficients c;
  c.degree = degree;
  std::map<Letters, LetterChain> vals;
  for (const auto& [i, k] : v) accumulate(vals[src.representative(i / dim_m)], static_cast<int>(i % dim_m), k);
  for (auto& [w, val] : vals) {
    if (static_cast<int>(w.size()) != arity) throw Error(ErrorCode::ShapeMismatch, "cochain arity mismatch");
    if (!val.empty()) c.set(w, val);
  }
  return c;
}

bool in_column_space(const SparseMap& d, const SparseVector& v) {
  if (v.empty()) return true;
  SparseMap t = d.transpose();
  std::vector<SparseVector> cols;
  for (std::size_t i = 0; i < t.rows(); ++i)
    if (!t.row(i).empty()) cols.push_back(sparse_from_map(t.row(i)));
  return Subspace(d.rows(), cols).contains(v);
}

void require_cochain_degree(const AlgebraPresentation& a, const ModulePresentation& m, const TaylorCoefficients& c,
                    int expected) {
  for (const auto& [r, table] : c.maps)
    for (const auto& [w, val] : table) {
      int in = 0;
      for (int x : w) {
        if (x < 0 || static_cast<std::size_t>(x) >= a.dim()) throw Error(ErrorCode::InvalidInput, "letter out of range");
        in += a.shifted(x);
      }
      for (const auto& [v, k] : val) {
        if (v < 0 || static_cast<std::size_t>(v) >= m.dim())
          throw Error(ErrorCode::InvalidInput, "module index out of range");
        if (m.basis.degree(static_cast<std::size_t>(v)) - 1 - in != expected)
          throw Error(ErrorCode::InvalidInput, "cochain component of the wrong degree");
      }
    }
}

CocycleReport morphism_cocycle_check(const AlgebraPresentation& a, const ModulePresentation& m,
                                     const TaylorCoefficients& c, int n_max) {
  require_valid(a, m);
  require_cochain_degree(a, m, c, 0);
  const AlgebraPresentation b = semidirect_unchecked(a, m);
  const int na = static_cast<int>(a.dim());
  TaylorCoefficients f;
  for (int i = 0; i < na; ++i) f.set({i}, LetterChain{{i, Scalar(1)}});
  for (const auto& [r, table] : c.maps)
    for (const auto& [w, val] : table) {
      LetterChain shifted = r == 1 ? *f.find(w) : LetterChain{};
      for (const auto& [v, k] : val) accumulate(shifted, na + v, k);
      f.set(w, shifted);
    }
  CocycleReport rep;
  for (int n = 1; n <= n_max; ++n) {
    bool ok = true;
    for (const auto& w : all_words(na, n)) {
      WordChain lhs = bar_m(b, lift_morphism(f, w));
      WordChain rhs = lift_morphism(f, bar_m(a, w));
      if (lhs != rhs) {
        ok = false;
        break;
      }
    }
    if (!ok) rep.morphism_failures.push_back(n);
  }
  for (int j = 1; j < n_max; ++j) {
    WordSpace src = tensor_space(a, j);
    SparseVector v = cochain_vector(c, j, src, m.dim());
    if (v.empty()) continue;
    SparseMap d = word_cochain_coboundary(a, m, src, tensor_space(a, j + 1));
    if (!d.apply(v).empty()) rep.cocycle_failures.push_back(j);
  }
  rep.is_morphism = rep.morphism_failures.empty();
  rep.verdicts_agree = rep.is_morphism == rep.cocycle_failures.empty();
  return rep;
}

TaylorCoefficients trivial_cocycle(const AlgebraPresentation& a, const ModulePresentation& m,
                                   const TaylorCoefficients& b, int n_max) {
  require_valid(a, m);
  require_cochain_degree(a, m, b, -1);
  TaylorCoefficients c;
  for (int n = 2; n <= n_max; ++n) {
    WordSpace src = tensor_space(a, n - 1), tgt = tensor_space(a, n);
    SparseVector v = word_cochain_coboundary(a, m, src, tgt).apply(cochain_vector(b, n - 1, src, m.dim()));
    TaylorCoefficients cn = cochain_from_vector(v, n, tgt, m.dim(), 0);
    for (const auto& [w, val] : cn.maps[n]) c.set(w, val);
  }
  return c;
}

bool is_hochschild_coboundary(const AlgebraPresentation& a, const ModulePresentation& m, const TaylorCoefficients& c,
                              int n) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "arity must be at least 1");
  WordSpace tgt = tensor_space(a, n);
  SparseVector v = cochain_vector(c, n, tgt, m.dim());
  return in_column_space(hochschild_cohomology_coboundary(a, m, n - 1), v);
}

}  // namespace envelope

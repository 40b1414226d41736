#include "envelope/koszul.hpp"

#include <algorithm>

#include "envelope/chevalley.hpp"
#include "envelope/error.hpp"

namespace envelope {

namespace {

void require_lie(const AlgebraPresentation& g) {
  if (g.kind != Kind::lie || !g.bracket) throw Error(ErrorCode::InvalidInput, "the Koszul complex needs a Lie algebra");
  auto v = validate(g);
  if (!v.empty()) throw Error(ErrorCode::InvalidInput, "algebra fails " + v.front().describe());
}

bool graded(const AlgebraPresentation& g) {
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (g.degree(static_cast<int>(i)) != 0) return true;
  return false;
}

// Straightening with a cache local to one computation.
class Straightener {
 public:
  explicit Straightener(const AlgebraPresentation& g) : g_(g), deg_(g.basis.degrees()) {}

  const WordChain& normal(const Letters& w) {
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
    WordChain out = compute(w);
    return cache_.emplace(w, std::move(out)).first->second;
  }

 private:
  WordChain compute(const Letters& w) {
    std::size_t k = 0;
    for (; k + 1 < w.size(); ++k)
      if (w[k] > w[k + 1] || (w[k] == w[k + 1] && is_odd(deg_[w[k]]))) break;
    if (k + 1 >= w.size()) return WordChain{{w, Scalar(1)}};

    WordChain out;
    const int a = w[k], b = w[k + 1];
    auto with_bracket = [&](const Scalar& factor) {
      for (const auto& t : (*g_.bracket)(a, b)) {
        Letters v(w.begin(), w.begin() + static_cast<long>(k));
        v.push_back(t.index);
        v.insert(v.end(), w.begin() + static_cast<long>(k) + 2, w.end());
        accumulate(out, normal(v), factor * t.coeff);
      }
    };
    if (a > b) {
      Letters swapped = w;
      std::swap(swapped[k], swapped[k + 1]);
      accumulate(out, normal(swapped), Scalar(sign_of(static_cast<long>(deg_[a]) * deg_[b])));
      with_bracket(Scalar(1));
    } else {
      with_bracket(make_scalar(1, 2));
    }
    return out;
  }

  const AlgebraPresentation& g_;
  std::vector<int> deg_;
  std::map<Letters, WordChain> cache_;
};

// Sign of moving the letters at the chosen positions to the front, in order, with the
// plain (unshifted) transposition rule.
int front_sign_unshifted(const Letters& w, const std::vector<int>& deg, std::initializer_list<std::size_t> chosen) {
  long e = 0;
  std::vector<bool> moved(w.size(), false);
  for (std::size_t c : chosen) {
    for (std::size_t l = 0; l < c; ++l)
      if (!moved[l]) e += static_cast<long>(deg[w[c]]) * deg[w[l]];
    moved[c] = true;
  }
  return sign_of(e);
}

Letters erase_positions(const Letters& w, std::initializer_list<std::size_t> pos) {
  Letters out;
  for (std::size_t l = 0; l < w.size(); ++l)
    if (std::find(pos.begin(), pos.end(), l) == pos.end()) out.push_back(w[l]);
  return out;
}

KoszulChainSpace make_space(int p, int n, std::vector<KoszulElement> basis) {
  KoszulChainSpace s;
  s.p = p;
  s.n = n;
  s.basis = std::move(basis);
  for (std::size_t i = 0; i < s.basis.size(); ++i) s.index.emplace(s.basis[i], i);
  return s;
}

// u a_i (x) rest terms; top_only keeps the monomials of length len(u)+1.
void leading_terms(Straightener& st, const AlgebraPresentation& g, const KoszulElement& e, bool top_only,
                   KoszulChain& out) {
  const auto& [u, w] = e;
  const auto deg = g.basis.degrees();
  for (std::size_t i = 0; i < w.size(); ++i) {
    const int s = sign_of(static_cast<long>(i)) * front_sign_unshifted(w, deg, {i});
    Letters rest = erase_positions(w, {i});
    Letters ua = u;
    ua.push_back(w[i]);
    for (const auto& [m, c] : st.normal(ua)) {
      if (top_only && m.size() != u.size() + 1) continue;
      accumulate(out, KoszulElement{m, rest}, c * s);
    }
  }
}

KoszulChain boundary_terms(Straightener& st, const AlgebraPresentation& g, const KoszulElement& e) {
  KoszulChain out;
  leading_terms(st, g, e, false, out);
  const auto& [u, w] = e;
  const auto deg = g.basis.degrees();
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      const int s = sign_of(static_cast<long>(i + j)) * front_sign_unshifted(w, deg, {i, j});
      const Letters rest = erase_positions(w, {i, j});
      for (const auto& t : (*g.bracket)(w[i], w[j])) {
        Letters v{t.index};
        v.insert(v.end(), rest.begin(), rest.end());
        const int ws = wedge_sort(v, deg);
        if (ws != 0) accumulate(out, KoszulElement{u, v}, t.coeff * (s * ws));
      }
    }
  return out;
}

}  // namespace

bool is_pbw_monomial(const AlgebraPresentation& g, const Letters& w) {
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] < 0 || w[k] >= static_cast<int>(g.dim())) return false;
    if (k + 1 < w.size() && (w[k] > w[k + 1] || (w[k] == w[k + 1] && is_odd(g.degree(w[k]))))) return false;
  }
  return true;
}

std::vector<PBWMonomial> pbw_basis(const AlgebraPresentation& g, int length) {
  return sym_words(g.basis.degrees(), static_cast<int>(g.dim()), length);
}

WordChain pbw_normal_form(const AlgebraPresentation& g, const Letters& word) {
  require_lie(g);
  for (int x : word)
    if (x < 0 || x >= static_cast<int>(g.dim())) throw Error(ErrorCode::InvalidInput, "letter out of range");
  Straightener st(g);
  return st.normal(word);
}

WordChain pbw_multiply(const AlgebraPresentation& g, const PBWMonomial& m, int i) {
  if (!is_pbw_monomial(g, m)) throw Error(ErrorCode::InvalidInput, "not a PBW monomial");
  Letters w = m;
  w.push_back(i);
  return pbw_normal_form(g, w);
}

WordChain pbw_product(const AlgebraPresentation& g, const WordChain& x, const WordChain& y) {
  require_lie(g);
  Straightener st(g);
  WordChain out;
  for (const auto& [u, a] : x)
    for (const auto& [v, b] : y) {
      Letters w = u;
      w.insert(w.end(), v.begin(), v.end());
      accumulate(out, st.normal(w), a * b);
    }
  return out;
}

int wedge_sort(Letters& letters, const std::vector<int>& degree_of) {
  int sign = 1;
  for (std::size_t i = 1; i < letters.size(); ++i)
    for (std::size_t j = i; j > 0 && letters[j - 1] > letters[j]; --j) {
      const long d = static_cast<long>(degree_of[letters[j - 1]]) * degree_of[letters[j]];
      sign *= -sign_of(d);
      std::swap(letters[j - 1], letters[j]);
    }
  for (std::size_t i = 0; i + 1 < letters.size(); ++i)
    if (letters[i] == letters[i + 1] && !is_odd(degree_of[letters[i]])) return 0;
  return sign;
}

std::size_t KoszulChainSpace::at(const KoszulElement& e) const {
  auto it = index.find(e);
  if (it == index.end()) throw Error(ErrorCode::DimensionMismatch, "element outside the Koszul chain space");
  return it->second;
}

KoszulChainSpace koszul_chain_space(const AlgebraPresentation& g, int p, int n) {
  std::vector<KoszulElement> basis;
  if (n >= 0)
    for (int k = 0; k + n <= p; ++k)
      for (const auto& u : pbw_basis(g, k))
        for (const auto& w : sym_basis(g, n)) basis.emplace_back(u, w);
  return make_space(p, n, std::move(basis));
}

KoszulChainSpace koszul_graded_piece(const AlgebraPresentation& g, int p, int n) {
  std::vector<KoszulElement> basis;
  if (n >= 0 && n <= p)
    for (const auto& u : pbw_basis(g, p - n))
      for (const auto& w : sym_basis(g, n)) basis.emplace_back(u, w);
  return make_space(p, n, std::move(basis));
}

KoszulChain koszul_boundary(const AlgebraPresentation& g, const KoszulElement& e) {
  require_lie(g);
  Straightener st(g);
  return boundary_terms(st, g, e);
}

SparseMap koszul_boundary(const AlgebraPresentation& g, int p, int n) {
  require_lie(g);
  const auto src = koszul_chain_space(g, p, n);
  if (n == 0) {
    SparseMap aug(1, src.dim());
    for (std::size_t c = 0; c < src.dim(); ++c)
      if (src.basis[c].first.empty()) aug.add(0, c, Scalar(1));
    return aug;
  }
  const auto tgt = koszul_chain_space(g, p, n - 1);
  Straightener st(g);
  SparseMap d(tgt.dim(), src.dim());
  for (std::size_t c = 0; c < src.dim(); ++c)
    for (const auto& [e, v] : boundary_terms(st, g, src.basis[c])) d.add(tgt.at(e), c, v);
  return d;
}

SparseMap koszul_leading_differential(const AlgebraPresentation& g, int p, int n) {
  require_lie(g);
  const auto src = koszul_graded_piece(g, p, n);
  if (n == 0) {
    SparseMap aug(1, src.dim());
    if (p == 0 && src.dim() == 1) aug.add(0, 0, Scalar(1));
    return aug;
  }
  const auto tgt = koszul_graded_piece(g, p, n - 1);
  Straightener st(g);
  SparseMap d(tgt.dim(), src.dim());
  for (std::size_t c = 0; c < src.dim(); ++c) {
    KoszulChain out;
    leading_terms(st, g, src.basis[c], true, out);
    for (const auto& [e, v] : out) d.add(tgt.at(e), c, v);
  }
  return d;
}

SparseMap koszul_homotopy(const AlgebraPresentation& g, int p, int n) {
  require_lie(g);
  const auto tgt = koszul_graded_piece(g, p, n + 1);
  if (n == -1) {
    SparseMap unit(tgt.dim(), 1);
    if (p == 0 && tgt.dim() == 1) unit.add(0, 0, Scalar(1));
    return unit;
  }
  const auto src = koszul_graded_piece(g, p, n);
  const auto deg = g.basis.degrees();
  SparseMap h(tgt.dim(), src.dim());
  for (std::size_t c = 0; c < src.dim(); ++c) {
    const auto& [u, w] = src.basis[c];
    if (u.empty()) continue;
    const int ik = u.back();
    if (!w.empty() && (ik < w.back() || (ik == w.back() && !is_odd(deg[ik])))) continue;
    Letters v{ik};
    v.insert(v.end(), w.begin(), w.end());
    const long count = std::count(v.begin(), v.end(), ik);
    const int s = wedge_sort(v, deg);
    if (s == 0) continue;
    Letters rest(u.begin(), u.end() - 1);
    h.add(tgt.at({rest, v}), c, make_scalar(s, count));
  }
  return h;
}

BettiReport verify_resolution(const AlgebraPresentation& g, int p_max) {
  require_lie(g);
  if (p_max < 0) throw Error(ErrorCode::InvalidInput, "p_max must be nonnegative");
  BettiReport report;
  report.theory = "koszul";
  report.direction = "verify";
  const bool tagged = graded(g);
  const auto deg = g.basis.degrees();
  auto tags_of = [&](const KoszulChainSpace& s) {
    std::vector<int> t;
    if (!tagged) return t;
    for (const auto& [u, w] : s.basis) {
      int d = 0;
      for (int x : u) d += deg[x];
      for (int x : w) d += deg[x];
      t.push_back(d);
    }
    return t;
  };

  for (int p = 0; p <= p_max; ++p) {
    // Slots -1 (R), 0..p; F_p(C) is closed under the boundary, so every slot is a genuine
    // subcomplex slot and nothing is cut off.
    std::vector<std::size_t> dims;
    dims.push_back(1);
    for (int q = 0; q <= p; ++q) dims.push_back(koszul_chain_space(g, p, q).dim());
    // out[q+1] : slot q -> slot q-1
    std::vector<SparseMap> out(static_cast<std::size_t>(p) + 2);
    out[0] = SparseMap(0, 1);
    for (int q = 0; q <= p; ++q) out[static_cast<std::size_t>(q) + 1] = koszul_boundary(g, p, q);
    bool exact = true;
    for (int q = -1; q <= p; ++q) {
      const std::size_t slot = static_cast<std::size_t>(q + 1);
      const SparseMap in = (q == p) ? SparseMap(dims[slot], 0) : out[slot + 1];
      std::vector<int> tags;
      if (q >= 0) tags = tags_of(koszul_chain_space(g, p, q));
      std::vector<BettiEntry> es;
      try {
        es = betti_entries(q, out[slot], in, tags);
      } catch (const Error& err) {
        if (err.code() != ErrorCode::CompositeNotZero) throw;
        report.check("boundary squares to zero on F_" + std::to_string(p) + "(C), slot " + std::to_string(q), false);
        exact = false;
        continue;
      }
      for (auto& e : es) {
        if (e.homology != 0) exact = false;
        if (p == p_max) {
          e.note = "p=" + std::to_string(p);
          report.entries.push_back(e);
        }
      }
    }
    report.check("F_" + std::to_string(p) + "(C) augmented complex is exact", exact);

    bool homotopy = true;
    for (int n = 0; n <= p; ++n) {
      const SparseMap id = SparseMap::identity(koszul_graded_piece(g, p, n).dim());
      const SparseMap hd = koszul_homotopy(g, p, n - 1) * koszul_leading_differential(g, p, n);
      const SparseMap dh = koszul_leading_differential(g, p, n + 1) * koszul_homotopy(g, p, n);
      if (!(hd + dh == id)) homotopy = false;
    }
    report.check("h d + d h = id on W_" + std::to_string(p) + "^n", homotopy);
  }
  return report;
}

}  // namespace envelope

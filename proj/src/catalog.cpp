#include "envelope/catalog.hpp"

namespace envelope::catalog {

namespace {

AlgebraPresentation make(Kind kind, std::vector<BasisElement> elems) {
  AlgebraPresentation a;
  a.kind = kind;
  a.basis = GradedBasis(std::move(elems));
  const std::size_t n = a.dim();
  if (kind != Kind::lie) a.product = StructureConstants(n, n, n);
  if (kind == Kind::lie || kind == Kind::gerstenhaber) a.bracket = StructureConstants(n, n, n);
  return a;
}

void unit_laws(AlgebraPresentation& a, int u) {
  a.unit = u;
  for (int i = 0; i < static_cast<int>(a.dim()); ++i) {
    a.product->add(u, i, i, 1);
    if (i != u) a.product->add(i, u, i, 1);
  }
}

}  // namespace

AlgebraPresentation ground_field() {
  auto a = make(Kind::commutative, {{"1", 0}});
  unit_laws(a, 0);
  return a;
}

AlgebraPresentation dual_numbers() {
  auto a = make(Kind::commutative, {{"1", 0}, {"x", 0}});
  unit_laws(a, 0);
  return a;
}

AlgebraPresentation group_algebra_z2() {
  auto a = make(Kind::commutative, {{"1", 0}, {"g", 0}});
  unit_laws(a, 0);
  a.product->add(1, 1, 0, 1);
  return a;
}

AlgebraPresentation upper_triangular2() {
  // 1 = e11 + e22, a = e12, b = e22: ab = a, ba = 0, aa = 0, bb = b.
  auto a = make(Kind::associative, {{"1", 0}, {"e12", 0}, {"e22", 0}});
  unit_laws(a, 0);
  a.product->add(1, 2, 1, 1);
  a.product->add(2, 2, 2, 1);
  return a;
}

AlgebraPresentation aff1() {
  auto g = make(Kind::lie, {{"e", 0}, {"f", 0}});
  g.bracket->add(0, 1, 1, 1);
  g.bracket->add(1, 0, 1, -1);
  return g;
}

AlgebraPresentation sl2() {
  auto g = make(Kind::lie, {{"e", 0}, {"f", 0}, {"h", 0}});
  auto& b = *g.bracket;
  b.add(0, 1, 2, 1);
  b.add(1, 0, 2, -1);
  b.add(2, 0, 0, 2);
  b.add(0, 2, 0, -2);
  b.add(2, 1, 1, -2);
  b.add(1, 2, 1, 2);
  return g;
}

AlgebraPresentation abelian_lie(int dim) {
  std::vector<BasisElement> elems;
  for (int i = 0; i < dim; ++i) elems.push_back({"a" + std::to_string(i + 1), 0});
  return make(Kind::lie, elems);
}

AlgebraPresentation lambda_aff1() {
  auto g = make(Kind::gerstenhaber, {{"1", 0}, {"e", 1}, {"f", 1}, {"ef", 2}});
  unit_laws(g, 0);
  g.product->add(1, 2, 3, 1);
  g.product->add(2, 1, 3, -1);
  auto& b = *g.bracket;
  b.add(1, 2, 2, 1);
  b.add(2, 1, 2, -1);
  b.add(1, 3, 3, 1);
  b.add(3, 1, 3, -1);
  return g;
}

AlgebraPresentation zero_bracket(const AlgebraPresentation& c) {
  AlgebraPresentation g = c;
  g.kind = Kind::gerstenhaber;
  g.bracket = StructureConstants(c.dim(), c.dim(), c.dim());
  return g;
}

ModulePresentation regular_module(const AlgebraPresentation& a) {
  ModulePresentation m;
  std::vector<BasisElement> elems;
  for (const auto& e : a.basis.elements()) elems.push_back({e.name + "'", e.degree});
  m.basis = GradedBasis(elems);
  const std::size_t n = a.dim();
  const int ni = static_cast<int>(n);
  if (a.product) {
    m.left = StructureConstants(n, n, n);
    m.right = StructureConstants(n, n, n);
    for (int i = 0; i < ni; ++i)
      for (int j = 0; j < ni; ++j)
        for (const auto& t : (*a.product)(i, j)) {
          m.left->add(i, j, t.index, t.coeff);
          m.right->add(i, j, t.index, t.coeff);
        }
  }
  if (a.bracket) {
    m.bracket_action = StructureConstants(n, n, n);
    for (int i = 0; i < ni; ++i)
      for (int j = 0; j < ni; ++j)
        for (const auto& t : (*a.bracket)(i, j)) m.bracket_action->add(i, j, t.index, t.coeff);
  }
  return m;
}

ModulePresentation trivial_module(const AlgebraPresentation& a, int dim, int degree) {
  ModulePresentation m;
  std::vector<BasisElement> elems;
  for (int i = 0; i < dim; ++i) elems.push_back({dim == 1 ? std::string("v") : "v" + std::to_string(i + 1), degree});
  m.basis = GradedBasis(elems);
  const std::size_t n = a.dim(), d = static_cast<std::size_t>(dim);
  if (a.product) {
    m.left = StructureConstants(n, d, d);
    m.right = StructureConstants(d, n, d);
  }
  if (a.bracket) m.bracket_action = StructureConstants(n, d, d);
  return m;
}

ModulePresentation shifted_module(const AlgebraPresentation& a, const ModulePresentation& m, int s) {
  ModulePresentation out;
  std::vector<BasisElement> elems = m.basis.elements();
  for (auto& e : elems) e.degree += s;
  out.basis = GradedBasis(elems);
  // a.(sv) = (-1)^{|a|s} s(a.v), (sv).a = s(v.a); the bracket moves past s with |a| - shift
  const int shift = a.kind == Kind::gerstenhaber ? 1 : 0;
  auto twist = [&](const std::optional<StructureConstants>& t, int offset) -> std::optional<StructureConstants> {
    if (!t) return std::nullopt;
    StructureConstants r(t->left_dim(), t->right_dim(), t->out_dim());
    for (int i = 0; i < static_cast<int>(t->left_dim()); ++i)
      for (int j = 0; j < static_cast<int>(t->right_dim()); ++j)
        for (const auto& term : (*t)(i, j)) r.add(i, j, term.index, term.coeff * sign_of(long(a.degree(i) - offset) * s));
    return r;
  };
  out.left = twist(m.left, 0);
  out.bracket_action = twist(m.bracket_action, shift);
  out.right = m.right;
  return out;
}

ModulePresentation direct_sum(const AlgebraPresentation& a, const ModulePresentation& m1, const ModulePresentation& m2) {
  ModulePresentation out;
  std::vector<BasisElement> elems = m1.basis.elements();
  for (auto e : m2.basis.elements()) {
    while (m1.basis.index_of(e.name) >= 0) e.name += "*";
    elems.push_back(e);
  }
  out.basis = GradedBasis(elems);
  const std::size_t n = a.dim(), d1 = m1.dim(), d = m1.dim() + m2.dim();
  const int off = static_cast<int>(d1);
  auto merge = [&](const std::optional<StructureConstants>& t1, const std::optional<StructureConstants>& t2,
                   bool module_left) -> std::optional<StructureConstants> {
    if (!t1 && !t2) return std::nullopt;
    StructureConstants t = module_left ? StructureConstants(d, n, d) : StructureConstants(n, d, d);
    auto copy = [&](const std::optional<StructureConstants>& src, int shift, std::size_t dm) {
      if (!src) return;
      for (int i = 0; i < static_cast<int>(module_left ? dm : n); ++i)
        for (int j = 0; j < static_cast<int>(module_left ? n : dm); ++j)
          for (const auto& term : (*src)(i, j)) {
            if (module_left)
              t.add(i + shift, j, term.index + shift, term.coeff);
            else
              t.add(i, j + shift, term.index + shift, term.coeff);
          }
    };
    copy(t1, 0, d1);
    copy(t2, off, m2.dim());
    return t;
  };
  out.left = merge(m1.left, m2.left, false);
  out.right = merge(m1.right ? m1.right : std::optional<StructureConstants>(effective_right_action(a, m1)),
                    m2.right ? m2.right : std::optional<StructureConstants>(effective_right_action(a, m2)), true);
  if (!a.product) out.right.reset();
  out.bracket_action = merge(m1.bracket_action, m2.bracket_action, false);
  return out;
}

}  // namespace envelope::catalog

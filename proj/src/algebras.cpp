#include "envelope/algebras.hpp"

#include <sstream>

#include "envelope/error.hpp"

namespace envelope {

const char* to_string(Kind k) {
  switch (k) {
    case Kind::associative: return "associative";
    case Kind::commutative: return "commutative";
    case Kind::lie: return "lie";
    case Kind::gerstenhaber: return "gerstenhaber";
  }
  return "?";
}

Kind parse_kind(const std::string& s) {
  if (s == "associative") return Kind::associative;
  if (s == "commutative") return Kind::commutative;
  if (s == "lie") return Kind::lie;
  if (s == "gerstenhaber") return Kind::gerstenhaber;
  throw Error(ErrorCode::ParseError, "unknown kind '" + s + "'");
}

StructureConstants::StructureConstants(std::size_t left_dim, std::size_t right_dim, std::size_t out_dim)
    : left_(left_dim), right_(right_dim), out_(out_dim), table_(left_dim * right_dim) {}

void StructureConstants::add(int i, int j, int k, const Scalar& c) {
  if (i < 0 || j < 0 || k < 0 || static_cast<std::size_t>(i) >= left_ || static_cast<std::size_t>(j) >= right_ ||
      static_cast<std::size_t>(k) >= out_)
    throw Error(ErrorCode::MalformedPresentation, "structure constant index out of range");
  if (c == 0) return;
  auto& cell = table_[static_cast<std::size_t>(i) * right_ + static_cast<std::size_t>(j)];
  for (auto it = cell.begin(); it != cell.end(); ++it) {
    if (it->index == k) {
      it->coeff += c;
      if (it->coeff == 0) cell.erase(it);
      return;
    }
  }
  cell.push_back({k, c});
}

const std::vector<Term>& StructureConstants::operator()(int i, int j) const {
  return table_.at(static_cast<std::size_t>(i) * right_ + static_cast<std::size_t>(j));
}

bool StructureConstants::is_zero() const {
  for (const auto& c : table_)
    if (!c.empty()) return false;
  return true;
}

LetterChain apply_table(const StructureConstants& t, int i, int j) {
  LetterChain out;
  for (const auto& term : t(i, j)) accumulate(out, term.index, term.coeff);
  return out;
}

std::string Violation::describe() const {
  std::ostringstream os;
  os << axiom << " @ (";
  for (std::size_t i = 0; i < elements.size(); ++i) os << (i ? "," : "") << elements[i];
  os << ")";
  return os.str();
}

namespace {

LetterChain apply_chain(const StructureConstants& t, const LetterChain& x, const LetterChain& y) {
  LetterChain out;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y)
      for (const auto& term : t(i, j)) accumulate(out, term.index, a * b * term.coeff);
  return out;
}

LetterChain unit_chain(int i) { return LetterChain{{i, Scalar(1)}}; }

// Which triples or pairs a check is restricted to: all of them, or exactly one
// element from a designated tail of the basis (the module part).
struct Scope {
  std::size_t split;  // indices >= split are module letters
  bool module_only;

  bool wanted(std::initializer_list<int> idx) const {
    if (!module_only) return true;
    int count = 0;
    for (int i : idx) count += static_cast<std::size_t>(i) >= split ? 1 : 0;
    return count == 1;
  }
};

class Checker {
 public:
  Checker(const AlgebraPresentation& a, Scope scope) : a_(a), scope_(scope), n_(static_cast<int>(a.dim())) {}

  std::vector<Violation> run() {
    const bool prod = a_.kind != Kind::lie;
    const bool brk = a_.kind == Kind::lie || a_.kind == Kind::gerstenhaber;
    if (prod && !a_.product) throw Error(ErrorCode::MalformedPresentation, std::string(to_string(a_.kind)) + " algebra needs a product");
    if (brk && !a_.bracket) throw Error(ErrorCode::MalformedPresentation, std::string(to_string(a_.kind)) + " algebra needs a bracket");
    if (a_.product) check_table(*a_.product, "product");
    if (a_.bracket) check_table(*a_.bracket, "bracket");
    if (prod) {
      degree(*a_.product, 0);
      if (a_.unit && !scope_.module_only) unit();
      associativity();
      if (a_.kind != Kind::associative) commutativity();
    }
    if (brk) {
      const int off = a_.kind == Kind::gerstenhaber ? -1 : 0;
      const int shift = a_.kind == Kind::gerstenhaber ? 1 : 0;
      degree(*a_.bracket, off);
      antisymmetry(shift);
      jacobi(shift);
    }
    if (a_.kind == Kind::gerstenhaber) leibniz();
    return std::move(out_);
  }

 private:
  const AlgebraPresentation& a_;
  Scope scope_;
  int n_;
  std::vector<Violation> out_;

  void check_table(const StructureConstants& t, const char* what) {
    if (t.left_dim() != a_.dim() || t.right_dim() != a_.dim() || t.out_dim() != a_.dim())
      throw Error(ErrorCode::MalformedPresentation, std::string(what) + " table has wrong shape");
  }

  void report(const char* axiom, std::initializer_list<int> idx) {
    Violation v;
    v.axiom = axiom;
    for (int i : idx) v.elements.push_back(a_.basis.name(static_cast<std::size_t>(i)));
    out_.push_back(std::move(v));
  }

  int deg(int i) const { return a_.degree(i); }

  LetterChain mul(const LetterChain& x, const LetterChain& y) const { return apply_chain(*a_.product, x, y); }
  LetterChain br(const LetterChain& x, const LetterChain& y) const { return apply_chain(*a_.bracket, x, y); }

  void degree(const StructureConstants& t, int offset) {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        if (!scope_.wanted({i, j})) continue;
        for (const auto& term : t(i, j))
          if (deg(term.index) != deg(i) + deg(j) + offset) {
            report("Degree", {i, j});
            break;
          }
      }
  }

  void unit() {
    int u = *a_.unit;
    if (u < 0 || u >= n_) throw Error(ErrorCode::MalformedPresentation, "unit index out of range");
    if (deg(u) != 0) report("Unit", {u});
    for (int i = 0; i < n_; ++i) {
      if (mul(unit_chain(u), unit_chain(i)) != unit_chain(i) || mul(unit_chain(i), unit_chain(u)) != unit_chain(i))
        report("Unit", {u, i});
    }
  }

  void associativity() {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        for (int k = 0; k < n_; ++k) {
          if (!scope_.wanted({i, j, k})) continue;
          LetterChain lhs = mul(unit_chain(i), mul(unit_chain(j), unit_chain(k)));
          accumulate(lhs, mul(mul(unit_chain(i), unit_chain(j)), unit_chain(k)), Scalar(-1));
          if (!lhs.empty()) report("Ass", {i, j, k});
        }
  }

  void commutativity() {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        if (!scope_.wanted({i, j})) continue;
        LetterChain c = mul(unit_chain(i), unit_chain(j));
        accumulate(c, mul(unit_chain(j), unit_chain(i)), Scalar(-sign_of(long(deg(i)) * deg(j))));
        if (!c.empty()) report("Com", {i, j});
      }
  }

  void antisymmetry(int shift) {
    for (int i = 0; i < n_; ++i)
      for (int j = i; j < n_; ++j) {
        if (!scope_.wanted({i, j})) continue;
        long e = long(deg(i) - shift) * (deg(j) - shift);
        LetterChain c = br(unit_chain(i), unit_chain(j));
        accumulate(c, br(unit_chain(j), unit_chain(i)), Scalar(sign_of(e)));
        if (!c.empty()) report("Antisym", {i, j});
      }
  }

  void jacobi(int shift) {
    auto d = [&](int i) { return long(deg(i) - shift); };
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        for (int k = 0; k < n_; ++k) {
          if (!scope_.wanted({i, j, k})) continue;
          LetterChain c;
          accumulate(c, br(br(unit_chain(i), unit_chain(j)), unit_chain(k)), Scalar(sign_of(d(i) * d(k))));
          accumulate(c, br(br(unit_chain(j), unit_chain(k)), unit_chain(i)), Scalar(sign_of(d(j) * d(i))));
          accumulate(c, br(br(unit_chain(k), unit_chain(i)), unit_chain(j)), Scalar(sign_of(d(k) * d(j))));
          if (!c.empty()) report("Jac", {i, j, k});
        }
  }

  void leibniz() {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        for (int k = 0; k < n_; ++k) {
          if (!scope_.wanted({i, j, k})) continue;
          LetterChain c = br(unit_chain(i), mul(unit_chain(j), unit_chain(k)));
          accumulate(c, mul(br(unit_chain(i), unit_chain(j)), unit_chain(k)), Scalar(-1));
          accumulate(c, mul(unit_chain(j), br(unit_chain(i), unit_chain(k))),
                     Scalar(-sign_of(long(deg(j)) * (deg(i) - 1))));
          if (!c.empty()) report("Leibn", {i, j, k});
        }
  }
};

bool module_is_unital(const AlgebraPresentation& a, const ModulePresentation& m, const StructureConstants& right) {
  if (!a.unit || !m.left) return false;
  int u = *a.unit;
  for (int v = 0; v < static_cast<int>(m.dim()); ++v) {
    if (apply_table(*m.left, u, v) != unit_chain(v)) return false;
    if (apply_table(right, v, u) != unit_chain(v)) return false;
  }
  return true;
}

void check_action_shape(const StructureConstants& t, std::size_t l, std::size_t r, std::size_t o, const char* what) {
  if (t.left_dim() != l || t.right_dim() != r || t.out_dim() != o)
    throw Error(ErrorCode::MalformedPresentation, std::string(what) + " table has wrong shape");
}

}  // namespace

std::vector<Violation> validate(const AlgebraPresentation& a) { return Checker(a, Scope{a.dim(), false}).run(); }

StructureConstants effective_right_action(const AlgebraPresentation& a, const ModulePresentation& m) {
  if (m.right) {
    check_action_shape(*m.right, m.dim(), a.dim(), m.dim(), "right action");
    return *m.right;
  }
  StructureConstants r(m.dim(), a.dim(), m.dim());
  if ((a.kind == Kind::commutative || a.kind == Kind::gerstenhaber) && m.left) {
    for (int i = 0; i < static_cast<int>(a.dim()); ++i)
      for (int v = 0; v < static_cast<int>(m.dim()); ++v)
        for (const auto& t : (*m.left)(i, v))
          r.add(v, i, t.index, t.coeff * sign_of(long(a.degree(i)) * m.basis.degree(static_cast<std::size_t>(v))));
  }
  return r;
}

AlgebraPresentation semidirect_unchecked(const AlgebraPresentation& a, const ModulePresentation& m) {
  const int na = static_cast<int>(a.dim()), nm = static_cast<int>(m.dim());
  const std::size_t n = a.dim() + m.dim();
  std::vector<BasisElement> elems = a.basis.elements();
  for (const auto& e : m.basis.elements()) {
    BasisElement b = e;
    while (a.basis.index_of(b.name) >= 0) b.name += "'";
    elems.push_back(b);
  }
  AlgebraPresentation s;
  s.kind = a.kind;
  s.basis = GradedBasis(elems);
  if (a.kind != Kind::lie) {
    if (!a.product) throw Error(ErrorCode::MalformedPresentation, "missing product");
    StructureConstants right = effective_right_action(a, m);
    StructureConstants p(n, n, n);
    for (int i = 0; i < na; ++i)
      for (int j = 0; j < na; ++j)
        for (const auto& t : (*a.product)(i, j)) p.add(i, j, t.index, t.coeff);
    if (m.left) {
      check_action_shape(*m.left, a.dim(), m.dim(), m.dim(), "left action");
      for (int i = 0; i < na; ++i)
        for (int v = 0; v < nm; ++v)
          for (const auto& t : (*m.left)(i, v)) p.add(i, na + v, na + t.index, t.coeff);
    }
    for (int v = 0; v < nm; ++v)
      for (int i = 0; i < na; ++i)
        for (const auto& t : right(v, i)) p.add(na + v, i, na + t.index, t.coeff);
    s.product = p;
    if (module_is_unital(a, m, right)) s.unit = a.unit;
  }
  if (a.kind == Kind::lie || a.kind == Kind::gerstenhaber) {
    if (!a.bracket) throw Error(ErrorCode::MalformedPresentation, "missing bracket");
    const int shift = a.kind == Kind::gerstenhaber ? 1 : 0;
    StructureConstants b(n, n, n);
    for (int i = 0; i < na; ++i)
      for (int j = 0; j < na; ++j)
        for (const auto& t : (*a.bracket)(i, j)) b.add(i, j, t.index, t.coeff);
    if (m.bracket_action) {
      check_action_shape(*m.bracket_action, a.dim(), m.dim(), m.dim(), "bracket action");
      for (int i = 0; i < na; ++i)
        for (int v = 0; v < nm; ++v)
          for (const auto& t : (*m.bracket_action)(i, v)) {
            b.add(i, na + v, na + t.index, t.coeff);
            long e = long(a.degree(i) - shift) * (m.basis.degree(static_cast<std::size_t>(v)) - shift);
            b.add(na + v, i, na + t.index, -t.coeff * sign_of(e));
          }
    }
    s.bracket = b;
  }
  return s;
}

std::vector<Violation> validate_module(const AlgebraPresentation& a, const ModulePresentation& m) {
  AlgebraPresentation s = semidirect_unchecked(a, m);
  return Checker(s, Scope{a.dim(), true}).run();
}

AlgebraPresentation semidirect(const AlgebraPresentation& a, const ModulePresentation& m) {
  auto va = validate(a);
  if (!va.empty()) throw Error(ErrorCode::InvalidInput, "algebra fails " + va.front().describe());
  auto vm = validate_module(a, m);
  if (!vm.empty()) throw Error(ErrorCode::InvalidInput, "module fails " + vm.front().describe());
  return semidirect_unchecked(a, m);
}

AlgebraPresentation forget_bracket(const AlgebraPresentation& g) {
  AlgebraPresentation c = g;
  c.kind = Kind::commutative;
  c.bracket.reset();
  return c;
}

AlgebraPresentation shifted_bracket_as_lie(const AlgebraPresentation& g) {
  std::vector<BasisElement> elems = g.basis.elements();
  for (auto& e : elems) e.degree -= 1;
  AlgebraPresentation l;
  l.kind = Kind::lie;
  l.basis = GradedBasis(elems);
  l.bracket = g.bracket;
  return l;
}

}  // namespace envelope

#include "envelope/linalg.hpp"

#include <algorithm>

#include "envelope/error.hpp"

namespace envelope {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::CompositeNotZero: return "CompositeNotZero";
    case ErrorCode::QuotientNotPreserved: return "QuotientNotPreserved";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::MalformedPresentation: return "MalformedPresentation";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NoUnit: return "NoUnit";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Error";
}

Scalar make_scalar(long num, long den) {
  if (den == 0) throw Error(ErrorCode::InvalidInput, "zero denominator");
  Scalar s(num, den);
  s.canonicalize();
  return s;
}

Scalar parse_scalar(const std::string& text) {
  std::string t;
  for (std::size_t i = 0; i < text.size(); ++i) {
    // U+2212 MINUS SIGN
    if (i + 2 < text.size() + 0 && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 && static_cast<unsigned char>(text[i + 2]) == 0x92) {
      t.push_back('-');
      i += 2;
    } else if (text[i] != ' ') {
      t.push_back(text[i]);
    }
  }
  if (t.empty()) throw Error(ErrorCode::ParseError, "empty coefficient");
  std::size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  bool slash = false;
  bool digits_before = false, digits_after = false;
  for (std::size_t i = start; i < t.size(); ++i) {
    char c = t[i];
    if (c == '/') {
      if (slash) throw Error(ErrorCode::ParseError, "bad coefficient '" + text + "'");
      slash = true;
    } else if (c >= '0' && c <= '9') {
      (slash ? digits_after : digits_before) = true;
    } else {
      throw Error(ErrorCode::ParseError, "bad coefficient '" + text + "'");
    }
  }
  if (!digits_before || (slash && !digits_after)) throw Error(ErrorCode::ParseError, "bad coefficient '" + text + "'");
  if (t[0] == '+') t.erase(0, 1);
  Scalar s;
  if (s.set_str(t, 10) != 0) throw Error(ErrorCode::ParseError, "bad coefficient '" + text + "'");
  if (s.get_den() == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
  s.canonicalize();
  return s;
}

std::string to_string(const Scalar& s) { return s.get_str(); }

SparseVector sparse_from_map(const std::map<std::size_t, Scalar>& m) {
  SparseVector v;
  v.reserve(m.size());
  for (const auto& [k, c] : m)
    if (c != 0) v.emplace_back(k, c);
  return v;
}

SparseVector sparse_from_dense(const std::vector<Scalar>& d) {
  SparseVector v;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0) v.emplace_back(i, d[i]);
  return v;
}

std::vector<Scalar> dense_from_sparse(const SparseVector& v, std::size_t dim) {
  std::vector<Scalar> d(dim);
  for (const auto& [k, c] : v) {
    if (k >= dim) throw Error(ErrorCode::DimensionMismatch, "index out of range");
    d[k] = c;
  }
  return d;
}

SparseVector axpy(const SparseVector& a, const Scalar& c, const SparseVector& b) {
  SparseVector out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, c * b[j].second);
      ++j;
    } else {
      Scalar s = a[i].second + c * b[j].second;
      if (s != 0) out.emplace_back(a[i].first, s);
      ++i;
      ++j;
    }
  }
  return out;
}

SparseMap::SparseMap(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

SparseMap SparseMap::identity(std::size_t n) {
  SparseMap m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace(i, Scalar(1));
  return m;
}

SparseMap SparseMap::from_entries(std::size_t rows, std::size_t cols, const std::vector<Entry>& entries) {
  SparseMap m(rows, cols);
  for (const auto& e : entries) m.add(e.row, e.col, e.value);
  return m;
}

void SparseMap::add(std::size_t r, std::size_t c, const Scalar& v) {
  if (r >= rows_ || c >= cols_) throw Error(ErrorCode::DimensionMismatch, "entry out of range");
  if (v == 0) return;
  auto& row = data_[r];
  auto it = row.find(c);
  if (it == row.end()) {
    row.emplace(c, v);
  } else {
    it->second += v;
    if (it->second == 0) row.erase(it);
  }
}

Scalar SparseMap::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw Error(ErrorCode::DimensionMismatch, "entry out of range");
  auto it = data_[r].find(c);
  return it == data_[r].end() ? Scalar(0) : it->second;
}

std::vector<Entry> SparseMap::entries() const {
  std::vector<Entry> out;
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) out.push_back({r, c, v});
  return out;
}

std::size_t SparseMap::nonzeros() const {
  std::size_t n = 0;
  for (const auto& row : data_) n += row.size();
  return n;
}

bool SparseMap::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const auto& r) { return r.empty(); });
}

SparseMap SparseMap::transpose() const {
  SparseMap t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) t.data_[c].emplace(r, v);
  return t;
}

SparseVector SparseMap::apply(const SparseVector& x) const {
  SparseVector out;
  for (std::size_t r = 0; r < rows_; ++r) {
    Scalar s = 0;
    const auto& row = data_[r];
    if (row.empty()) continue;
    for (const auto& [c, v] : x) {
      if (c >= cols_) throw Error(ErrorCode::DimensionMismatch, "vector longer than domain");
      auto it = row.find(c);
      if (it != row.end()) s += it->second * v;
    }
    if (s != 0) out.emplace_back(r, s);
  }
  return out;
}

SparseVector SparseMap::column(std::size_t c) const {
  SparseVector out;
  for (std::size_t r = 0; r < rows_; ++r) {
    auto it = data_[r].find(c);
    if (it != data_[r].end()) out.emplace_back(r, it->second);
  }
  return out;
}

SparseMap SparseMap::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  std::map<std::size_t, std::size_t> col_pos;
  for (std::size_t j = 0; j < cols.size(); ++j) col_pos[cols[j]] = j;
  SparseMap out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [c, v] : data_.at(rows[i])) {
      auto it = col_pos.find(c);
      if (it != col_pos.end()) out.data_[i].emplace(it->second, v);
    }
  return out;
}

SparseMap SparseMap::operator*(const SparseMap& rhs) const {
  if (cols_ != rhs.rows_) throw Error(ErrorCode::DimensionMismatch, "composition of incompatible maps");
  SparseMap out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& [k, a] : data_[i])
      for (const auto& [j, b] : rhs.data_[k]) out.add(i, j, a * b);
  return out;
}

SparseMap SparseMap::operator+(const SparseMap& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(ErrorCode::DimensionMismatch, "sum of incompatible maps");
  SparseMap out = *this;
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : rhs.data_[r]) out.add(r, c, v);
  return out;
}

SparseMap SparseMap::operator-(const SparseMap& rhs) const { return *this + rhs.scaled(-1); }

SparseMap SparseMap::scaled(const Scalar& k) const {
  SparseMap out(rows_, cols_);
  if (k == 0) return out;
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) out.data_[r].emplace(c, v * k);
  return out;
}

bool SparseMap::operator==(const SparseMap& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

namespace {

using IntRow = std::vector<std::pair<std::size_t, mpz_class>>;

// Clears denominators and divides by the content; leading coefficient positive.
IntRow primitive(const SparseVector& v) {
  mpz_class l = 1;
  for (const auto& e : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.second.get_den_mpz_t());
  IntRow row;
  row.reserve(v.size());
  mpz_class g = 0;
  for (const auto& [k, c] : v) {
    mpz_class n = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    row.emplace_back(k, std::move(n));
  }
  if (row.empty()) return row;
  if (row.front().second < 0) g = -g;
  for (auto& e : row) e.second /= g;
  return row;
}

void make_primitive(IntRow& row) {
  if (row.empty()) return;
  mpz_class g = 0;
  for (const auto& e : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
  if (row.front().second < 0) g = -g;
  if (g != 1)
    for (auto& e : row) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
}

// a*x - b*y with both rows sharing the same leading column, which cancels.
IntRow cross_eliminate(const IntRow& x, const IntRow& y) {
  const mpz_class a = y.front().second;
  const mpz_class b = x.front().second;
  IntRow out;
  out.reserve(x.size() + y.size());
  std::size_t i = 1, j = 1;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, -b * y[j].second);
      ++j;
    } else {
      mpz_class s = a * x[i].second - b * y[j].second;
      if (s != 0) out.emplace_back(x[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  make_primitive(out);
  return out;
}

// Fraction-free forward elimination over primitive integer rows.
class Echelon {
 public:
  bool insert(const SparseVector& v) {
    IntRow row = primitive(v);
    while (!row.empty()) {
      auto it = pivots_.find(row.front().first);
      if (it == pivots_.end()) break;
      row = cross_eliminate(row, it->second);
    }
    if (row.empty()) return false;
    pivots_.emplace(row.front().first, std::move(row));
    return true;
  }

  std::size_t size() const { return pivots_.size(); }

  // Back substitution and normalization to leading coefficient 1.
  std::vector<SparseVector> reduced_rows() const {
    std::map<std::size_t, SparseVector> done;
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      const mpz_class& lead = it->second.front().second;
      SparseVector r;
      r.reserve(it->second.size());
      for (const auto& [k, n] : it->second) r.emplace_back(k, Scalar(n, lead));
      for (auto& e : r) e.second.canonicalize();
      std::vector<std::size_t> hits;
      for (std::size_t i = 1; i < r.size(); ++i)
        if (done.count(r[i].first)) hits.push_back(r[i].first);
      for (std::size_t c : hits) {
        Scalar coeff = 0;
        for (const auto& e : r)
          if (e.first == c) coeff = e.second;
        if (coeff != 0) r = axpy(r, -coeff, done.at(c));
      }
      done.emplace(it->first, std::move(r));
    }
    std::vector<SparseVector> out;
    out.reserve(done.size());
    for (auto& [k, r] : done) out.push_back(std::move(r));
    return out;
  }

 private:
  std::map<std::size_t, IntRow> pivots_;
};

}  // namespace

std::size_t rank(const std::vector<SparseVector>& rows) {
  Echelon e;
  for (const auto& r : rows) e.insert(r);
  return e.size();
}

std::size_t rank(const SparseMap& m) {
  Echelon e;
  for (std::size_t r = 0; r < m.rows(); ++r) e.insert(sparse_from_map(m.row(r)));
  return e.size();
}

std::vector<SparseVector> kernel_basis(const SparseMap& m) {
  Echelon e;
  for (std::size_t r = 0; r < m.rows(); ++r) e.insert(sparse_from_map(m.row(r)));
  auto rows = e.reduced_rows();
  std::vector<bool> pivot(m.cols(), false);
  for (const auto& r : rows) pivot[r.front().first] = true;
  std::map<std::size_t, std::map<std::size_t, Scalar>> by_free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!pivot[c]) by_free[c][c] = 1;
  for (const auto& r : rows) {
    std::size_t lead = r.front().first;
    for (std::size_t i = 1; i < r.size(); ++i) by_free[r[i].first][lead] = -r[i].second;
  }
  std::vector<SparseVector> out;
  out.reserve(by_free.size());
  for (const auto& [c, v] : by_free) out.push_back(sparse_from_map(v));
  return out;
}

std::size_t homology_dim(const SparseMap& d_out, const SparseMap& d_in) {
  if (d_out.cols() != d_in.rows())
    throw Error(ErrorCode::DimensionMismatch,
                "boundary maps do not meet: " + std::to_string(d_out.cols()) + " vs " + std::to_string(d_in.rows()));
  if (!(d_out * d_in).is_zero()) throw Error(ErrorCode::CompositeNotZero, "d_out o d_in is not zero");
  std::size_t r_out = rank(d_out), r_in = rank(d_in);
  return d_out.cols() - r_out - r_in;
}

Subspace::Subspace(std::size_t ambient, const std::vector<SparseVector>& generators) : ambient_(ambient) {
  Echelon e;
  for (const auto& g : generators) {
    if (!g.empty() && g.back().first >= ambient)
      throw Error(ErrorCode::DimensionMismatch, "generator outside ambient space");
    e.insert(g);
  }
  rows_ = e.reduced_rows();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    pivots_.push_back(rows_[i].front().first);
    pivot_row_.emplace(rows_[i].front().first, i);
  }
}

SparseVector Subspace::reduce(const SparseVector& v) const {
  if (!v.empty() && v.back().first >= ambient_) throw Error(ErrorCode::DimensionMismatch, "vector outside ambient space");
  // Rows are fully reduced, so subtracting one never re-introduces another pivot.
  SparseVector out = v;
  std::vector<std::pair<std::size_t, Scalar>> hits;
  for (const auto& [k, c] : v)
    if (pivot_row_.count(k)) hits.emplace_back(k, c);
  for (const auto& [k, c] : hits) out = axpy(out, -c, rows_[pivot_row_.at(k)]);
  return out;
}

SparseVector quotient_reduce(const Subspace& s, const SparseVector& v) { return s.reduce(v); }

std::vector<Scalar> quotient_reduce(const Subspace& s, const std::vector<Scalar>& v) {
  if (v.size() != s.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "vector dimension differs from ambient");
  return dense_from_sparse(s.reduce(sparse_from_dense(v)), v.size());
}

}  // namespace envelope

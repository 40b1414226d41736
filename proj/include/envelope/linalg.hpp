#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace envelope {

// Exact rational; gmpxx keeps results canonical (lowest terms, positive denominator).
using Scalar = mpq_class;

Scalar make_scalar(long num, long den = 1);
// Accepts "p/q", "p" and a leading ASCII or Unicode minus.
Scalar parse_scalar(const std::string& text);
std::string to_string(const Scalar& s);

// Sorted by index, no zero entries.
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

SparseVector sparse_from_map(const std::map<std::size_t, Scalar>& m);
SparseVector sparse_from_dense(const std::vector<Scalar>& v);
std::vector<Scalar> dense_from_sparse(const SparseVector& v, std::size_t dim);
// a + c*b
SparseVector axpy(const SparseVector& a, const Scalar& c, const SparseVector& b);

struct Entry {
  std::size_t row;
  std::size_t col;
  Scalar value;
};

class SparseMap {
 public:
  SparseMap() = default;
  SparseMap(std::size_t rows, std::size_t cols);

  static SparseMap identity(std::size_t n);
  static SparseMap from_entries(std::size_t rows, std::size_t cols, const std::vector<Entry>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  // Accumulates; entries that cancel to zero are erased.
  void add(std::size_t r, std::size_t c, const Scalar& v);
  Scalar at(std::size_t r, std::size_t c) const;
  const std::map<std::size_t, Scalar>& row(std::size_t r) const { return data_[r]; }

  std::vector<Entry> entries() const;
  std::size_t nonzeros() const;
  bool is_zero() const;

  SparseMap transpose() const;
  SparseVector apply(const SparseVector& x) const;
  SparseVector column(std::size_t c) const;
  SparseMap submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

  SparseMap operator*(const SparseMap& rhs) const;
  SparseMap operator+(const SparseMap& rhs) const;
  SparseMap operator-(const SparseMap& rhs) const;
  SparseMap scaled(const Scalar& c) const;
  bool operator==(const SparseMap& rhs) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::map<std::size_t, Scalar>> data_;
};

std::size_t rank(const SparseMap& m);
std::size_t rank(const std::vector<SparseVector>& rows);
std::vector<SparseVector> kernel_basis(const SparseMap& m);

// dim ker(d_out) - rank(d_in); throws CompositeNotZero when d_out*d_in != 0.
std::size_t homology_dim(const SparseMap& d_out, const SparseMap& d_in);

class Subspace {
 public:
  Subspace() = default;
  Subspace(std::size_t ambient, const std::vector<SparseVector>& generators);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  // Reduced row-echelon rows, leading coefficient 1, pivots increasing.
  const std::vector<SparseVector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  bool is_pivot(std::size_t col) const { return pivot_row_.count(col) != 0; }

  SparseVector reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }

 private:
  std::size_t ambient_ = 0;
  std::vector<SparseVector> rows_;
  std::vector<std::size_t> pivots_;
  std::map<std::size_t, std::size_t> pivot_row_;
};

SparseVector quotient_reduce(const Subspace& s, const SparseVector& v);
std::vector<Scalar> quotient_reduce(const Subspace& s, const std::vector<Scalar>& v);

}  // namespace envelope

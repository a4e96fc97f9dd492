#ifndef LIEHOM_SPARSE_HPP
#define LIEHOM_SPARSE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "liehom/errors.hpp"
#include "liehom/rational.hpp"

namespace liehom {

using Index = std::int64_t;

/// Sparse exact vector: sorted (index, value) pairs, no stored zeros.
class SparseVector {
 public:
  SparseVector() = default;
  explicit SparseVector(Index dim) : dim_(dim) {}

  Index dim() const { return dim_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }

  const std::vector<std::pair<Index, Rational>>& entries() const {
    return entries_;
  }

  /// Accumulates into the entry at `index`; removes it if the sum is zero.
  void add(Index index, const Rational& value);

  Rational get(Index index) const;

  /// Standard basis vector.
  static SparseVector unit(Index dim, Index index);

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  Index dim_ = 0;
  std::vector<std::pair<Index, Rational>> entries_;
};

SparseVector operator*(const Rational& scalar, const SparseVector& v);
SparseVector operator+(const SparseVector& a, const SparseVector& b);
SparseVector operator-(const SparseVector& a, const SparseVector& b);

/// Sparse exact matrix, row-major: each row is a sorted (col, value) list
/// with no stored zeros.
class SparseMatrix {
 public:
  using Row = std::vector<std::pair<Index, Rational>>;

  SparseMatrix() = default;
  SparseMatrix(Index rows, Index cols);

  static SparseMatrix identity(Index n);
  static SparseMatrix from_columns(Index rows,
                                   const std::vector<SparseVector>& columns);

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  Index nnz() const;
  bool is_zero() const;

  const Row& row(Index r) const { return data_[static_cast<std::size_t>(r)]; }

  /// Accumulates into entry (r, c); removes it if the sum is zero.
  /// Linear in the row length; intended for construction and small matrices.
  void add(Index r, Index c, const Rational& value);

  Rational get(Index r, Index c) const;

  SparseVector column(Index c) const;
  std::vector<SparseVector> columns() const;

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  Index rows_ = 0;
  Index cols_ = 0;
  std::vector<Row> data_;

  friend SparseMatrix transpose(const SparseMatrix&);
};

SparseMatrix matmul(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix transpose(const SparseMatrix& m);
SparseVector apply(const SparseMatrix& m, const SparseVector& v);
SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);

/// Horizontal concatenation [a | b].
SparseMatrix hstack(const SparseMatrix& a, const SparseMatrix& b);

/// Kronecker product; index layout (ra*b.rows + rb, ca*b.cols + cb).
SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);

}  // namespace liehom

#endif

#include "liehom/sparse.hpp"

#include <algorithm>

namespace liehom {

namespace {

void check_index(Index i, Index bound, const char* what) {
  if (i < 0 || i >= bound) throw DimensionMismatch(what);
}

}  // namespace

void SparseVector::add(Index index, const Rational& value) {
  check_index(index, dim_, "SparseVector::add: index out of range");
  if (value == 0) return;
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), index,
      [](const auto& e, Index i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) {
    it->second += value;
    if (it->second == 0) entries_.erase(it);
  } else {
    entries_.insert(it, {index, value});
  }
}

Rational SparseVector::get(Index index) const {
  check_index(index, dim_, "SparseVector::get: index out of range");
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), index,
      [](const auto& e, Index i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) return it->second;
  return Rational(0);
}

SparseVector SparseVector::unit(Index dim, Index index) {
  SparseVector v(dim);
  v.add(index, Rational(1));
  return v;
}

SparseVector operator*(const Rational& scalar, const SparseVector& v) {
  SparseVector out(v.dim());
  if (scalar == 0) return out;
  for (const auto& [i, x] : v.entries()) out.add(i, scalar * x);
  return out;
}

namespace {

SparseVector merge(const SparseVector& a, const SparseVector& b, int sign) {
  if (a.dim() != b.dim())
    throw DimensionMismatch("SparseVector addition: dimension mismatch");
  SparseVector out(a.dim());
  for (const auto& [i, x] : a.entries()) out.add(i, x);
  for (const auto& [i, x] : b.entries()) out.add(i, sign > 0 ? x : Rational(-x));
  return out;
}

}  // namespace

SparseVector operator+(const SparseVector& a, const SparseVector& b) {
  return merge(a, b, +1);
}

SparseVector operator-(const SparseVector& a, const SparseVector& b) {
  return merge(a, b, -1);
}

SparseMatrix::SparseMatrix(Index rows, Index cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows)) {
  if (rows < 0 || cols < 0)
    throw DimensionMismatch("SparseMatrix: negative dimension");
}

SparseMatrix SparseMatrix::identity(Index n) {
  SparseMatrix m(n, n);
  for (Index i = 0; i < n; ++i)
    m.data_[static_cast<std::size_t>(i)].push_back({i, Rational(1)});
  return m;
}

SparseMatrix SparseMatrix::from_columns(
    Index rows, const std::vector<SparseVector>& columns) {
  SparseMatrix m(rows, static_cast<Index>(columns.size()));
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].dim() != rows)
      throw DimensionMismatch("from_columns: column dimension mismatch");
    for (const auto& [r, v] : columns[c].entries())
      m.data_[static_cast<std::size_t>(r)].push_back(
          {static_cast<Index>(c), v});
  }
  return m;
}

Index SparseMatrix::nnz() const {
  Index total = 0;
  for (const auto& row : data_) total += static_cast<Index>(row.size());
  return total;
}

bool SparseMatrix::is_zero() const {
  for (const auto& row : data_)
    if (!row.empty()) return false;
  return true;
}

void SparseMatrix::add(Index r, Index c, const Rational& value) {
  check_index(r, rows_, "SparseMatrix::add: row out of range");
  check_index(c, cols_, "SparseMatrix::add: col out of range");
  if (value == 0) return;
  auto& row = data_[static_cast<std::size_t>(r)];
  auto it = std::lower_bound(
      row.begin(), row.end(), c,
      [](const auto& e, Index i) { return e.first < i; });
  if (it != row.end() && it->first == c) {
    it->second += value;
    if (it->second == 0) row.erase(it);
  } else {
    row.insert(it, {c, value});
  }
}

Rational SparseMatrix::get(Index r, Index c) const {
  check_index(r, rows_, "SparseMatrix::get: row out of range");
  check_index(c, cols_, "SparseMatrix::get: col out of range");
  const auto& row = data_[static_cast<std::size_t>(r)];
  auto it = std::lower_bound(
      row.begin(), row.end(), c,
      [](const auto& e, Index i) { return e.first < i; });
  if (it != row.end() && it->first == c) return it->second;
  return Rational(0);
}

SparseVector SparseMatrix::column(Index c) const {
  check_index(c, cols_, "SparseMatrix::column: col out of range");
  SparseVector out(rows_);
  for (Index r = 0; r < rows_; ++r) {
    Rational v = get(r, c);
    if (v != 0) out.add(r, v);
  }
  return out;
}

std::vector<SparseVector> SparseMatrix::columns() const {
  std::vector<SparseVector> out(static_cast<std::size_t>(cols_),
                                SparseVector(rows_));
  for (Index r = 0; r < rows_; ++r)
    for (const auto& [c, v] : row(r))
      out[static_cast<std::size_t>(c)].add(r, v);
  return out;
}

SparseMatrix transpose(const SparseMatrix& m) {
  SparseMatrix t(m.cols(), m.rows());
  for (Index r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r))
      t.data_[static_cast<std::size_t>(c)].push_back({r, v});
  return t;
}

SparseMatrix matmul(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows())
    throw DimensionMismatch("matmul: inner dimensions differ");
  // c_{rk} = sum_j a_{rj} b_{jk}: accumulate each a-row against b-rows.
  SparseMatrix c(a.rows(), b.cols());
  std::vector<Rational> acc(static_cast<std::size_t>(b.cols()), Rational(0));
  std::vector<Index> touched;
  for (Index r = 0; r < a.rows(); ++r) {
    touched.clear();
    for (const auto& [j, av] : a.row(r)) {
      for (const auto& [k, bv] : b.row(j)) {
        auto& slot = acc[static_cast<std::size_t>(k)];
        if (slot == 0) touched.push_back(k);
        slot += av * bv;
      }
    }
    std::sort(touched.begin(), touched.end());
    for (Index k : touched) {
      auto& slot = acc[static_cast<std::size_t>(k)];
      if (slot != 0) c.add(r, k, slot);
      slot = 0;
    }
  }
  return c;
}

SparseVector apply(const SparseMatrix& m, const SparseVector& v) {
  if (v.dim() != m.cols())
    throw DimensionMismatch("apply: vector dimension != matrix cols");
  SparseVector out(m.rows());
  for (Index r = 0; r < m.rows(); ++r) {
    Rational sum(0);
    const auto& row = m.row(r);
    auto it = row.begin();
    for (const auto& [i, x] : v.entries()) {
      while (it != row.end() && it->first < i) ++it;
      if (it == row.end()) break;
      if (it->first == i) sum += it->second * x;
    }
    if (sum != 0) out.add(r, sum);
  }
  return out;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("matrix addition: shape mismatch");
  SparseMatrix out(a.rows(), a.cols());
  for (Index r = 0; r < a.rows(); ++r) {
    for (const auto& [c, v] : a.row(r)) out.add(r, c, v);
    for (const auto& [c, v] : b.row(r)) out.add(r, c, v);
  }
  return out;
}

SparseMatrix hstack(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("hstack: row mismatch");
  SparseMatrix out(a.rows(), a.cols() + b.cols());
  for (Index r = 0; r < a.rows(); ++r) {
    for (const auto& [c, v] : a.row(r)) out.add(r, c, v);
    for (const auto& [c, v] : b.row(r)) out.add(r, a.cols() + c, v);
  }
  return out;
}

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index ra = 0; ra < a.rows(); ++ra)
    for (const auto& [ca, va] : a.row(ra))
      for (Index rb = 0; rb < b.rows(); ++rb)
        for (const auto& [cb, vb] : b.row(rb))
          out.add(ra * b.rows() + rb, ca * b.cols() + cb, va * vb);
  return out;
}

}  // namespace liehom

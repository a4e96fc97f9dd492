#include "liehom/lie_algebra.hpp"

#include <algorithm>

#include "liehom/linalg.hpp"

namespace liehom {

LieAlgebra::LieAlgebra(int dim, std::vector<std::string> labels,
                       BracketTable brackets)
    : dim_(dim), labels_(std::move(labels)), brackets_(std::move(brackets)) {
  if (dim < 0) throw DimensionMismatch("LieAlgebra: negative dimension");
  if (static_cast<int>(labels_.size()) != dim)
    throw DimensionMismatch("LieAlgebra: label count != dim");
  for (const auto& [pair, coeffs] : brackets_) {
    const auto [i, j] = pair;
    if (i < 0 || j <= i || j >= dim)
      throw DimensionMismatch("LieAlgebra: bracket pair must have 0 <= i < j < dim");
    if (coeffs.dim() != dim)
      throw DimensionMismatch("LieAlgebra: bracket coefficient dimension != dim");
  }
}

SparseVector LieAlgebra::bracket_basis(int i, int j) const {
  if (i < 0 || i >= dim_ || j < 0 || j >= dim_)
    throw DimensionMismatch("bracket_basis: index out of range");
  if (i == j) return SparseVector(dim_);
  const bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = brackets_.find({i, j});
  if (it == brackets_.end()) return SparseVector(dim_);
  return flip ? Rational(-1) * it->second : it->second;
}

SparseVector LieAlgebra::bracket(const SparseVector& u,
                                 const SparseVector& v) const {
  if (u.dim() != dim_ || v.dim() != dim_)
    throw DimensionMismatch("bracket: vector dimension != dim");
  SparseVector out(dim_);
  for (const auto& [i, a] : u.entries())
    for (const auto& [j, b] : v.entries()) {
      if (i == j) continue;
      for (const auto& [k, c] : bracket_basis(static_cast<int>(i),
                                              static_cast<int>(j)).entries())
        out.add(k, a * b * c);
    }
  return out;
}

std::optional<JacobiViolation> validate_lie(const LieAlgebra& g) {
  const int n = g.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        // [[i,j],k] + [[j,k],i] + [[k,i],j]
        SparseVector acc(n);
        const int tri[3][2] = {{i, j}, {j, k}, {k, i}};
        const int outer[3] = {k, i, j};
        for (int t = 0; t < 3; ++t) {
          SparseVector inner = g.bracket_basis(tri[t][0], tri[t][1]);
          SparseVector unit = SparseVector::unit(n, outer[t]);
          acc = acc + g.bracket(inner, unit);
        }
        if (!acc.is_zero()) return JacobiViolation{i, j, k, acc};
      }
  return std::nullopt;
}

LieAlgebra standard_algebra(StandardName name, int n) {
  switch (name) {
    case StandardName::abelian: {
      std::vector<std::string> labels;
      for (int i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
      return LieAlgebra(n, std::move(labels), {});
    }
    case StandardName::sl2: {
      LieAlgebra::BracketTable br;
      SparseVector eh(3);
      eh.add(0, Rational(-2));  // [e,h] = -2e
      SparseVector ef(3);
      ef.add(1, Rational(1));   // [e,f] = h
      SparseVector hf(3);
      hf.add(2, Rational(-2));  // [h,f] = -2f
      br[{0, 1}] = eh;
      br[{0, 2}] = ef;
      br[{1, 2}] = hf;
      return LieAlgebra(3, {"e", "h", "f"}, std::move(br));
    }
    case StandardName::heisenberg: {
      LieAlgebra::BracketTable br;
      SparseVector xy(3);
      xy.add(2, Rational(1));  // [x,y] = z
      br[{0, 1}] = xy;
      return LieAlgebra(3, {"x", "y", "z"}, std::move(br));
    }
    case StandardName::two_dim_nonabelian: {
      LieAlgebra::BracketTable br;
      SparseVector ab(2);
      ab.add(1, Rational(1));  // [a,b] = b
      br[{0, 1}] = ab;
      return LieAlgebra(2, {"a", "b"}, std::move(br));
    }
  }
  throw std::invalid_argument("standard_algebra: unknown name");
}

namespace {

SparseMatrix ad_matrix(const LieAlgebra& g, int i) {
  SparseMatrix m(g.dim(), g.dim());
  for (int j = 0; j < g.dim(); ++j)
    for (const auto& [k, c] : g.bracket_basis(i, j).entries())
      m.add(k, j, c);
  return m;
}

}  // namespace

SparseMatrix killing_form(const LieAlgebra& g) {
  const int n = g.dim();
  std::vector<SparseMatrix> ad;
  ad.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ad.push_back(ad_matrix(g, i));
  SparseMatrix kappa(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      SparseMatrix prod = matmul(ad[static_cast<std::size_t>(i)],
                                 ad[static_cast<std::size_t>(j)]);
      Rational tr(0);
      for (Index d = 0; d < n; ++d) tr += prod.get(d, d);
      if (tr != 0) {
        kappa.add(i, j, tr);
        if (i != j) kappa.add(j, i, tr);
      }
    }
  return kappa;
}

std::vector<SparseVector> bracket_span(
    const LieAlgebra& g, const std::vector<SparseVector>& basis) {
  std::vector<SparseVector> products;
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      SparseVector w = g.bracket(basis[a], basis[b]);
      if (!w.is_zero()) products.push_back(std::move(w));
    }
  if (products.empty()) return {};
  return image_basis(SparseMatrix::from_columns(g.dim(), products));
}

std::vector<int> derived_series(const LieAlgebra& g) {
  std::vector<int> dims;
  std::vector<SparseVector> current;
  for (int i = 0; i < g.dim(); ++i)
    current.push_back(SparseVector::unit(g.dim(), i));
  dims.push_back(g.dim());
  while (true) {
    std::vector<SparseVector> next = bracket_span(g, current);
    const int d = static_cast<int>(next.size());
    if (d == dims.back()) break;
    dims.push_back(d);
    current = std::move(next);
    if (d == 0) break;
  }
  return dims;
}

bool is_solvable(const LieAlgebra& g) { return derived_series(g).back() == 0; }

bool is_perfect(const LieAlgebra& g) {
  std::vector<SparseVector> basis;
  for (int i = 0; i < g.dim(); ++i)
    basis.push_back(SparseVector::unit(g.dim(), i));
  return static_cast<int>(bracket_span(g, basis).size()) == g.dim();
}

std::vector<SparseVector> radical(const LieAlgebra& g) {
  std::vector<SparseVector> basis;
  for (int i = 0; i < g.dim(); ++i)
    basis.push_back(SparseVector::unit(g.dim(), i));
  const std::vector<SparseVector> derived = bracket_span(g, basis);
  const SparseMatrix kappa = killing_form(g);
  // rows: x |-> kappa(d_k, x) for a basis d_k of [g,g]
  SparseMatrix constraints(static_cast<Index>(derived.size()), g.dim());
  for (std::size_t k = 0; k < derived.size(); ++k) {
    SparseVector row = apply(kappa, derived[k]);  // kappa symmetric
    for (const auto& [c, v] : row.entries())
      constraints.add(static_cast<Index>(k), c, v);
  }
  return kernel_basis(constraints);
}

bool spans_ideal(const LieAlgebra& g, const std::vector<SparseVector>& basis) {
  if (basis.empty()) return true;
  SparseMatrix span = SparseMatrix::from_columns(g.dim(), basis);
  for (int i = 0; i < g.dim(); ++i) {
    SparseVector unit = SparseVector::unit(g.dim(), i);
    for (const auto& b : basis) {
      SparseVector w = g.bracket(unit, b);
      if (w.is_zero()) continue;
      if (!solve(span, w)) return false;
    }
  }
  return true;
}

std::optional<LieAlgebra> subalgebra_on(const LieAlgebra& g,
                                        const std::vector<SparseVector>& basis,
                                        std::vector<std::string> labels) {
  const int d = static_cast<int>(basis.size());
  SparseMatrix span = SparseMatrix::from_columns(g.dim(), basis);
  LieAlgebra::BracketTable table;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      SparseVector w = g.bracket(basis[static_cast<std::size_t>(i)],
                                 basis[static_cast<std::size_t>(j)]);
      if (w.is_zero()) continue;
      auto coords = solve(span, w);
      if (!coords) return std::nullopt;
      table[{i, j}] = *coords;
    }
  return LieAlgebra(d, std::move(labels), std::move(table));
}

}  // namespace liehom

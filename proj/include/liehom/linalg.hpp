#ifndef LIEHOM_LINALG_HPP
#define LIEHOM_LINALG_HPP

#include <optional>
#include <vector>

#include "liehom/sparse.hpp"

namespace liehom {

/// Rank strategy. `modular` computes the rank modulo three fixed large
/// primes and accepts the value when all agree; any bad reduction or
/// disagreement falls back to the exact elimination. Default everywhere
/// is `exact`.
enum class RankMode { exact, modular };

/// Rank over the rationals. Deterministic.
Index rank(const SparseMatrix& m, RankMode mode = RankMode::exact);

/// Linearly independent vectors spanning the null space;
/// size == cols - rank. Deterministic.
std::vector<SparseVector> kernel_basis(const SparseMatrix& m);

/// Columns of `m` forming an independent basis of the column space;
/// size == rank. Deterministic.
std::vector<SparseVector> image_basis(const SparseMatrix& m);

/// The column indices selected as pivots by the deterministic elimination,
/// ascending. The corresponding original columns are independent and span
/// the column space.
std::vector<Index> pivot_columns(const SparseMatrix& m);

/// Pivot columns selected in two phases: every column < `preferred` is
/// exhausted before any column >= `preferred` is considered. Used to extend
/// a known independent leading block to a basis of the column space.
std::vector<Index> pivot_columns_two_phase(const SparseMatrix& m,
                                           Index preferred);

/// Some x with m*x = b when b lies in the column space, else nullopt.
/// Which preimage is returned is unspecified but deterministic.
std::optional<SparseVector> solve(const SparseMatrix& m,
                                  const SparseVector& b);

}  // namespace liehom

#endif

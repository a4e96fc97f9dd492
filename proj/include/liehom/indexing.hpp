#ifndef LIEHOM_INDEXING_HPP
#define LIEHOM_INDEXING_HPP

#include <span>
#include <vector>

#include "liehom/sparse.hpp"

namespace liehom {

/// Exact binomial coefficient; throws std::overflow_error past 2^62.
Index binomial(int n, int k);

/// Bijection between words (i_1,...,i_n), 0 <= i_k < dim, and
/// 0..dim^n - 1 via big-endian base-dim positional encoding.
class TensorIndexer {
 public:
  TensorIndexer(int algebra_dim, int degree);

  int degree() const { return degree_; }
  Index size() const { return size_; }

  Index rank(std::span<const int> word) const;
  void unrank(Index index, std::span<int> word_out) const;

 private:
  int dim_;
  int degree_;
  Index size_;
};

/// Bijection between strictly increasing tuples i_1 < ... < i_n drawn from
/// 0..dim-1 and 0..C(dim,n) - 1 via the colexicographic rank
/// sum_k C(i_k, k).
class ExteriorIndexer {
 public:
  ExteriorIndexer(int algebra_dim, int degree);

  int degree() const { return degree_; }
  Index size() const { return size_; }

  Index rank(std::span<const int> tuple) const;
  void unrank(Index index, std::span<int> tuple_out) const;

 private:
  int dim_;
  int degree_;
  Index size_;
};

/// Sign of the permutation sorting `word` ascending, written to `sorted_out`
/// (same length); returns 0 when the word has a repeated letter.
int sort_with_sign(std::span<const int> word, std::span<int> sorted_out);

}  // namespace liehom

#endif

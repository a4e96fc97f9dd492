#include "liehom/indexing.hpp"

#include <algorithm>
#include <stdexcept>

namespace liehom {

namespace {

constexpr Index kIndexCap = Index(1) << 62;

Index checked_mul(Index a, Index b) {
  const __int128 p = static_cast<__int128>(a) * b;
  if (p > kIndexCap) throw std::overflow_error("index space exceeds 2^62");
  return static_cast<Index>(p);
}

}  // namespace

Index binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Index result = 1;
  for (int i = 1; i <= k; ++i) {
    const __int128 t = static_cast<__int128>(result) * (n - k + i) / i;
    if (t > kIndexCap) throw std::overflow_error("binomial exceeds 2^62");
    result = static_cast<Index>(t);
  }
  return result;
}

TensorIndexer::TensorIndexer(int algebra_dim, int degree)
    : dim_(algebra_dim), degree_(degree), size_(1) {
  if (algebra_dim < 0 || degree < 0)
    throw DimensionMismatch("TensorIndexer: negative parameter");
  for (int i = 0; i < degree; ++i) size_ = checked_mul(size_, dim_);
}

Index TensorIndexer::rank(std::span<const int> word) const {
  if (static_cast<int>(word.size()) != degree_)
    throw DimensionMismatch("TensorIndexer::rank: wrong word length");
  Index r = 0;
  for (int letter : word) {
    if (letter < 0 || letter >= dim_)
      throw DimensionMismatch("TensorIndexer::rank: letter out of range");
    r = r * dim_ + letter;
  }
  return r;
}

void TensorIndexer::unrank(Index index, std::span<int> word_out) const {
  if (static_cast<int>(word_out.size()) != degree_)
    throw DimensionMismatch("TensorIndexer::unrank: wrong buffer length");
  if (index < 0 || index >= size_)
    throw DimensionMismatch("TensorIndexer::unrank: index out of range");
  for (int k = degree_ - 1; k >= 0; --k) {
    word_out[static_cast<std::size_t>(k)] = static_cast<int>(index % dim_);
    index /= dim_;
  }
}

ExteriorIndexer::ExteriorIndexer(int algebra_dim, int degree)
    : dim_(algebra_dim), degree_(degree), size_(binomial(algebra_dim, degree)) {
  if (algebra_dim < 0 || degree < 0)
    throw DimensionMismatch("ExteriorIndexer: negative parameter");
}

Index ExteriorIndexer::rank(std::span<const int> tuple) const {
  if (static_cast<int>(tuple.size()) != degree_)
    throw DimensionMismatch("ExteriorIndexer::rank: wrong tuple length");
  Index r = 0;
  int prev = -1;
  for (int k = 0; k < degree_; ++k) {
    const int c = tuple[static_cast<std::size_t>(k)];
    if (c <= prev || c >= dim_)
      throw DimensionMismatch("ExteriorIndexer::rank: not strictly increasing");
    prev = c;
    r += binomial(c, k + 1);
  }
  return r;
}

void ExteriorIndexer::unrank(Index index, std::span<int> tuple_out) const {
  if (static_cast<int>(tuple_out.size()) != degree_)
    throw DimensionMismatch("ExteriorIndexer::unrank: wrong buffer length");
  if (index < 0 || index >= size_)
    throw DimensionMismatch("ExteriorIndexer::unrank: index out of range");
  for (int k = degree_; k >= 1; --k) {
    int c = k - 1;
    while (binomial(c + 1, k) <= index) ++c;
    tuple_out[static_cast<std::size_t>(k - 1)] = c;
    index -= binomial(c, k);
  }
}

int sort_with_sign(std::span<const int> word, std::span<int> sorted_out) {
  const std::size_t n = word.size();
  if (sorted_out.size() != n)
    throw DimensionMismatch("sort_with_sign: buffer length mismatch");
  std::copy(word.begin(), word.end(), sorted_out.begin());
  int sign = 1;
  for (std::size_t i = 1; i < n; ++i) {
    const int x = sorted_out[i];
    std::size_t j = i;
    while (j > 0 && sorted_out[j - 1] > x) {
      sorted_out[j] = sorted_out[j - 1];
      sign = -sign;
      --j;
    }
    sorted_out[j] = x;
  }
  for (std::size_t i = 1; i < n; ++i)
    if (sorted_out[i] == sorted_out[i - 1]) return 0;
  return sign;
}

}  // namespace liehom

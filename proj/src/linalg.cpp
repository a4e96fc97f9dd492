#include "liehom/linalg.hpp"

#include <algorithm>
#include <cstdint>

namespace liehom {

namespace {

using Entry = std::pair<Index, Rational>;
using RowVec = std::vector<Entry>;

/* Sparse fraction elimination with Markowitz pivoting.
 *
 * Pivot rule: minimize (row_nnz - 1) * (col_count - 1) over the entries of
 * active rows within the allowed column range; ties broken by (row, col)
 * scan order. A zero-count entry ends the search early (nothing can beat
 * it, and scan order makes the choice deterministic).
 */
class Eliminator {
 public:
  explicit Eliminator(const SparseMatrix& m)
      : nrows_(m.rows()),
        ncols_(m.cols()),
        rows_(static_cast<std::size_t>(m.rows())),
        col_count_(static_cast<std::size_t>(m.cols()), 0),
        active_(static_cast<std::size_t>(m.rows()), 1) {
    for (Index r = 0; r < nrows_; ++r) {
      rows_[static_cast<std::size_t>(r)] = m.row(r);
      for (const auto& [c, v] : m.row(r))
        ++col_count_[static_cast<std::size_t>(c)];
    }
  }

  // Row echelon over columns in [lo, hi).
  void eliminate(Index lo, Index hi) {
    Index pr;
    Index pc;
    while (find_pivot(lo, hi, pr, pc)) pivot_step(pr, pc);
  }

  // After elimination: clear every pivot column from the other pivot rows
  // and normalize pivots to 1. Pivot row k holds no pivot column except its
  // own once this completes (see loop invariant below).
  void jordan() {
    for (std::size_t k = pivots_.size(); k-- > 0;) {
      const auto [kr, kc] = pivots_[k];
      const Rational piv = row_value(kr, kc);
      for (std::size_t m = 0; m < k; ++m) {
        const Index mr = pivots_[m].first;
        Rational v = row_value(mr, kc);
        if (v != 0) row_axpy(mr, kr, v / piv, /*track_counts=*/false);
      }
    }
    for (const auto& [pr, pc] : pivots_) {
      Rational piv = row_value(pr, pc);
      if (piv != 1) {
        Rational inv = 1 / piv;
        for (auto& [c, v] : rows_[static_cast<std::size_t>(pr)]) v *= inv;
      }
    }
  }

  const std::vector<std::pair<Index, Index>>& pivots() const {
    return pivots_;
  }

  std::vector<Index> pivot_cols_sorted() const {
    std::vector<Index> out;
    out.reserve(pivots_.size());
    for (const auto& [r, c] : pivots_) out.push_back(c);
    std::sort(out.begin(), out.end());
    return out;
  }

  Rational row_value(Index r, Index c) const {
    const auto& row = rows_[static_cast<std::size_t>(r)];
    auto it = std::lower_bound(
        row.begin(), row.end(), c,
        [](const Entry& e, Index i) { return e.first < i; });
    if (it != row.end() && it->first == c) return it->second;
    return Rational(0);
  }

  bool row_has_entries(Index r) const {
    return !rows_[static_cast<std::size_t>(r)].empty();
  }

  bool is_active(Index r) const { return active_[static_cast<std::size_t>(r)] != 0; }

 private:
  bool find_pivot(Index lo, Index hi, Index& pr, Index& pc) const {
    bool found = false;
    Index best_count = 0;
    for (Index r = 0; r < nrows_; ++r) {
      if (!active_[static_cast<std::size_t>(r)]) continue;
      const auto& row = rows_[static_cast<std::size_t>(r)];
      if (row.empty()) continue;
      const Index rn = static_cast<Index>(row.size()) - 1;
      for (const auto& [c, v] : row) {
        if (c < lo || c >= hi) continue;
        const Index count =
            rn * (col_count_[static_cast<std::size_t>(c)] - 1);
        if (!found || count < best_count) {
          found = true;
          best_count = count;
          pr = r;
          pc = c;
          if (count == 0) return true;
        }
      }
      if (found && best_count == 0) return true;
    }
    return found;
  }

  void pivot_step(Index pr, Index pc) {
    pivots_.emplace_back(pr, pc);
    active_[static_cast<std::size_t>(pr)] = 0;
    for (const auto& [c, v] : rows_[static_cast<std::size_t>(pr)])
      --col_count_[static_cast<std::size_t>(c)];
    const Rational piv = row_value(pr, pc);
    if (col_count_[static_cast<std::size_t>(pc)] == 0) return;
    for (Index r = 0; r < nrows_; ++r) {
      if (!active_[static_cast<std::size_t>(r)]) continue;
      Rational v = row_value(r, pc);
      if (v != 0) row_axpy(r, pr, v / piv, /*track_counts=*/true);
    }
  }

  // rows_[dst] -= f * rows_[src]
  void row_axpy(Index dst, Index src, const Rational& f, bool track_counts) {
    const auto& a = rows_[static_cast<std::size_t>(dst)];
    const auto& b = rows_[static_cast<std::size_t>(src)];
    scratch_.clear();
    scratch_.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        scratch_.push_back(a[i]);
        ++i;
      } else if (i == a.size() || b[j].first < a[i].first) {
        Rational nv = -f * b[j].second;
        if (nv != 0) {
          if (track_counts) ++col_count_[static_cast<std::size_t>(b[j].first)];
          scratch_.emplace_back(b[j].first, std::move(nv));
        }
        ++j;
      } else {
        Rational nv = a[i].second - f * b[j].second;
        if (nv != 0) {
          scratch_.emplace_back(a[i].first, std::move(nv));
        } else if (track_counts) {
          --col_count_[static_cast<std::size_t>(a[i].first)];
        }
        ++i;
        ++j;
      }
    }
    rows_[static_cast<std::size_t>(dst)].swap(scratch_);
  }

  Index nrows_;
  Index ncols_;
  std::vector<RowVec> rows_;
  std::vector<Index> col_count_;
  std::vector<char> active_;
  std::vector<std::pair<Index, Index>> pivots_;
  RowVec scratch_;
};

// --- modular fast path -----------------------------------------------------

constexpr std::uint64_t kRankPrimes[] = {1000000007ULL, 998244353ULL,
                                         2305843009213693951ULL};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::optional<Index> rank_mod_p(const SparseMatrix& m, std::uint64_t p) {
  const Index nrows = m.rows();
  std::vector<std::vector<std::pair<Index, std::uint64_t>>> rows(
      static_cast<std::size_t>(nrows));
  for (Index r = 0; r < nrows; ++r) {
    for (const auto& [c, q] : m.row(r)) {
      const std::uint64_t den = mpz_fdiv_ui(mpq_denref(q.get_mpq_t()), p);
      if (den == 0) return std::nullopt;  // prime divides a denominator
      const std::uint64_t num = mpz_fdiv_ui(mpq_numref(q.get_mpq_t()), p);
      const std::uint64_t val = mulmod(num, powmod(den, p - 2, p), p);
      if (val != 0)
        rows[static_cast<std::size_t>(r)].emplace_back(c, val);
    }
  }
  // Streaming row echelon: reduce each row against stored pivot rows.
  std::vector<std::vector<std::pair<Index, std::uint64_t>>> pivot_rows;
  std::vector<Index> pivot_col_of;
  std::vector<Index> pivot_at(static_cast<std::size_t>(m.cols()), -1);
  std::vector<std::uint64_t> dense(static_cast<std::size_t>(m.cols()), 0);
  Index rank = 0;
  for (auto& row : rows) {
    std::vector<Index> touched;
    for (const auto& [c, v] : row) {
      dense[static_cast<std::size_t>(c)] = v;
      touched.push_back(c);
    }
    std::sort(touched.begin(), touched.end());
    for (std::size_t t = 0; t < touched.size(); ++t) {
      const Index c = touched[t];
      const std::uint64_t v = dense[static_cast<std::size_t>(c)];
      if (v == 0) continue;
      const Index pi = pivot_at[static_cast<std::size_t>(c)];
      if (pi < 0) continue;
      for (const auto& [pc, pv] : pivot_rows[static_cast<std::size_t>(pi)]) {
        auto& slot = dense[static_cast<std::size_t>(pc)];
        const std::uint64_t sub = mulmod(v, pv, p);
        const std::uint64_t old = slot;
        slot = (slot + p - sub) % p;
        if (old == 0 && slot != 0) {
          touched.insert(
              std::upper_bound(touched.begin() + static_cast<std::ptrdiff_t>(t) + 1,
                               touched.end(), pc),
              pc);
        }
      }
    }
    Index lead = -1;
    for (Index c : touched) {
      if (dense[static_cast<std::size_t>(c)] != 0) {
        lead = c;
        break;
      }
    }
    if (lead >= 0) {
      const std::uint64_t inv =
          powmod(dense[static_cast<std::size_t>(lead)], p - 2, p);
      std::vector<std::pair<Index, std::uint64_t>> prow;
      for (Index c : touched) {
        auto& slot = dense[static_cast<std::size_t>(c)];
        if (slot != 0) prow.emplace_back(c, mulmod(slot, inv, p));
      }
      pivot_at[static_cast<std::size_t>(lead)] =
          static_cast<Index>(pivot_rows.size());
      pivot_rows.push_back(std::move(prow));
      ++rank;
    }
    for (Index c : touched) dense[static_cast<std::size_t>(c)] = 0;
  }
  return rank;
}

}  // namespace

Index rank(const SparseMatrix& m, RankMode mode) {
  if (mode == RankMode::modular) {
    std::optional<Index> agreed;
    bool ok = true;
    for (std::uint64_t p : kRankPrimes) {
      auto r = rank_mod_p(m, p);
      if (!r || (agreed && *agreed != *r)) {
        ok = false;
        break;
      }
      agreed = r;
    }
    if (ok && agreed) return *agreed;
    // fall through: exact elimination settles it
  }
  Eliminator e(m);
  e.eliminate(0, m.cols());
  return static_cast<Index>(e.pivots().size());
}

std::vector<SparseVector> kernel_basis(const SparseMatrix& m) {
  Eliminator e(m);
  e.eliminate(0, m.cols());
  e.jordan();
  std::vector<char> is_pivot_col(static_cast<std::size_t>(m.cols()), 0);
  for (const auto& [r, c] : e.pivots())
    is_pivot_col[static_cast<std::size_t>(c)] = 1;
  std::vector<SparseVector> basis;
  basis.reserve(static_cast<std::size_t>(m.cols()) - e.pivots().size());
  for (Index j = 0; j < m.cols(); ++j) {
    if (is_pivot_col[static_cast<std::size_t>(j)]) continue;
    SparseVector v(m.cols());
    v.add(j, Rational(1));
    for (const auto& [pr, pc] : e.pivots()) {
      Rational val = e.row_value(pr, j);
      if (val != 0) v.add(pc, -val);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Index> pivot_columns(const SparseMatrix& m) {
  Eliminator e(m);
  e.eliminate(0, m.cols());
  return e.pivot_cols_sorted();
}

std::vector<Index> pivot_columns_two_phase(const SparseMatrix& m,
                                           Index preferred) {
  Eliminator e(m);
  e.eliminate(0, preferred);
  e.eliminate(preferred, m.cols());
  return e.pivot_cols_sorted();
}

std::vector<SparseVector> image_basis(const SparseMatrix& m) {
  std::vector<SparseVector> out;
  for (Index c : pivot_columns(m)) out.push_back(m.column(c));
  return out;
}

std::optional<SparseVector> solve(const SparseMatrix& m,
                                  const SparseVector& b) {
  if (b.dim() != m.rows())
    throw DimensionMismatch("solve: right-hand side dimension != rows");
  SparseMatrix aug(m.rows(), m.cols() + 1);
  for (Index r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) aug.add(r, c, v);
  for (const auto& [r, v] : b.entries()) aug.add(r, m.cols(), v);

  Eliminator e(aug);
  e.eliminate(0, m.cols());
  // Inconsistent iff some non-pivot row still carries a right-hand entry.
  for (Index r = 0; r < m.rows(); ++r) {
    if (e.is_active(r) && e.row_has_entries(r)) return std::nullopt;
  }
  e.jordan();
  SparseVector x(m.cols());
  for (const auto& [pr, pc] : e.pivots()) {
    Rational val = e.row_value(pr, m.cols());
    if (val != 0) x.add(pc, val);
  }
  return x;
}

}  // namespace liehom

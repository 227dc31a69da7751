#ifndef CHORDAL_LINALG_HPP
#define CHORDAL_LINALG_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chordal/error.hpp"

namespace chordal {

struct LinalgLimits {
  long long max_entries = 200'000'000;  // nonzero-entry high-water mark
};

// Row-major sparse matrix over an exact field; each row is sorted by column.
template <class F>
struct SparseMatrix {
  using Elem = typename F::Elem;
  using Row = std::vector<std::pair<int, Elem>>;
  int nrows = 0;
  int ncols = 0;
  std::vector<Row> rows;

  static SparseMatrix make(int r, int c) {
    SparseMatrix m;
    m.nrows = r;
    m.ncols = c;
    m.rows.resize(r);
    return m;
  }
  long long nnz() const {
    long long n = 0;
    for (const Row& r : rows) n += static_cast<long long>(r.size());
    return n;
  }
  std::string shape() const {
    return std::to_string(nrows) + "x" + std::to_string(ncols) + " (" +
           std::to_string(nnz()) + " nonzero)";
  }
};

namespace detail {

// r -= f * p (columns sorted). Returns the new row.
template <class F>
typename SparseMatrix<F>::Row row_axpy(const F& k, const typename SparseMatrix<F>::Row& r,
                                       const typename SparseMatrix<F>::Row& p,
                                       const typename F::Elem& f) {
  typename SparseMatrix<F>::Row out;
  out.reserve(r.size() + p.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < p.size()) {
    if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
      out.push_back(r[i++]);
    } else if (i == r.size() || p[j].first < r[i].first) {
      auto v = k.neg(k.mul(f, p[j].second));
      if (!k.is_zero(v)) out.emplace_back(p[j].first, v);
      ++j;
    } else {
      auto v = k.sub(r[i].second, k.mul(f, p[j].second));
      if (!k.is_zero(v)) out.emplace_back(r[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

template <class F>
const typename F::Elem* row_find(const typename SparseMatrix<F>::Row& r, int col) {
  int lo = 0, hi = static_cast<int>(r.size()) - 1;
  while (lo <= hi) {
    int mid = (lo + hi) / 2;
    if (r[mid].first == col) return &r[mid].second;
    if (r[mid].first < col)
      lo = mid + 1;
    else
      hi = mid - 1;
  }
  return nullptr;
}

}  // namespace detail

// Rank by sparse exact elimination. Pivot column: fewest nonzeros among the
// remaining columns (ties to the lowest index); pivot row: fewest nonzeros
// (ties to the lowest index). Fully deterministic.
template <class F>
long long sparse_rank(const F& k, SparseMatrix<F> A, const LinalgLimits& limits = {}) {
  std::vector<int> colcount(A.ncols, 0);
  for (const auto& r : A.rows)
    for (const auto& e : r) ++colcount[e.first];
  std::vector<bool> row_done(A.nrows, false);
  std::vector<bool> col_done(A.ncols, false);

  long long rank = 0;
  long long nnz = A.nnz();
  while (true) {
    int pc = -1;
    for (int c = 0; c < A.ncols; ++c)
      if (!col_done[c] && colcount[c] > 0 && (pc < 0 || colcount[c] < colcount[pc])) pc = c;
    if (pc < 0) break;
    int pr = -1;
    for (int r = 0; r < A.nrows; ++r) {
      if (row_done[r]) continue;
      if (!detail::row_find<F>(A.rows[r], pc)) continue;
      if (pr < 0 || A.rows[r].size() < A.rows[pr].size()) pr = r;
    }
    // pc has a nonzero in some active row by construction
    const auto pivot_val = *detail::row_find<F>(A.rows[pr], pc);
    auto pivot_inv = k.inv(pivot_val);
    for (int r = 0; r < A.nrows; ++r) {
      if (r == pr || row_done[r]) continue;
      const auto* v = detail::row_find<F>(A.rows[r], pc);
      if (!v) continue;
      auto f = k.mul(*v, pivot_inv);
      nnz -= static_cast<long long>(A.rows[r].size());
      for (const auto& e : A.rows[r]) --colcount[e.first];
      A.rows[r] = detail::row_axpy(k, A.rows[r], A.rows[pr], f);
      nnz += static_cast<long long>(A.rows[r].size());
      for (const auto& e : A.rows[r]) ++colcount[e.first];
      if (nnz > limits.max_entries)
        throw ResourceLimit("sparse elimination grew past the entry limit on a " + A.shape() +
                            " matrix");
    }
    for (const auto& e : A.rows[pr]) --colcount[e.first];
    row_done[pr] = true;
    col_done[pc] = true;
    ++rank;
  }
  return rank;
}

// Reduced row echelon form with leftmost-column pivoting; canonical, so the
// kernel basis below is canonical as well.
template <class F>
struct RrefResult {
  int rank = 0;
  std::vector<int> pivot_cols;                       // ascending
  std::vector<typename SparseMatrix<F>::Row> rows;   // rank reduced rows
};

template <class F>
RrefResult<F> rref(const F& k, const SparseMatrix<F>& A, const LinalgLimits& limits = {}) {
  std::vector<typename SparseMatrix<F>::Row> work;
  work.reserve(A.nrows);
  for (const auto& r : A.rows)
    if (!r.empty()) work.push_back(r);

  RrefResult<F> out;
  long long nnz = 0;
  for (const auto& r : work) nnz += static_cast<long long>(r.size());

  std::size_t done = 0;
  for (int col = 0; col < A.ncols; ++col) {
    int pr = -1;
    for (std::size_t r = done; r < work.size(); ++r)
      if (!work[r].empty() && work[r][0].first == col) {
        pr = static_cast<int>(r);
        break;
      }
    if (pr < 0) continue;
    std::swap(work[pr], work[done]);
    auto& pivot = work[done];
    auto inv = k.inv(pivot[0].second);
    if (!k.is_one(pivot[0].second))
      for (auto& e : pivot) e.second = k.mul(e.second, inv);
    for (std::size_t r = 0; r < work.size(); ++r) {
      if (r == done) continue;
      const auto* v = detail::row_find<F>(work[r], col);
      if (!v) continue;
      nnz -= static_cast<long long>(work[r].size());
      work[r] = detail::row_axpy(k, work[r], pivot, *v);
      nnz += static_cast<long long>(work[r].size());
      if (nnz > limits.max_entries)
        throw ResourceLimit("rref grew past the entry limit on a " + A.shape() + " matrix");
    }
    out.pivot_cols.push_back(col);
    ++done;
  }
  // rows are only final once every later pivot has swept them
  out.rank = static_cast<int>(done);
  out.rows.assign(work.begin(), work.begin() + done);
  return out;
}

// Incremental Gaussian elimination over dense coefficient vectors: add() rows
// one at a time; the return value says whether the row enlarged the span.
template <class F>
struct DenseReducer {
  const F& k;
  std::map<int, std::vector<typename F::Elem>> pivots;  // leading index -> monic row
  explicit DenseReducer(const F& field) : k(field) {}

  void reduce(std::vector<typename F::Elem>& v) const {
    for (const auto& [lead, row] : pivots) {
      if (k.is_zero(v[lead])) continue;
      const auto f = v[lead];
      for (std::size_t i = lead; i < v.size(); ++i)
        if (!k.is_zero(row[i])) v[i] = k.sub(v[i], k.mul(f, row[i]));
    }
  }

  bool add(std::vector<typename F::Elem> v) {
    reduce(v);
    int lead = -1;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!k.is_zero(v[i])) {
        lead = static_cast<int>(i);
        break;
      }
    if (lead < 0) return false;
    const auto inv = k.inv(v[lead]);
    for (auto& c : v) c = k.mul(c, inv);
    pivots.emplace(lead, std::move(v));
    return true;
  }

  int rank() const { return static_cast<int>(pivots.size()); }
};

// Canonical basis of the right kernel {v : A v = 0}, one dense vector per
// free column, ordered by free column index.
template <class F>
std::vector<std::vector<typename F::Elem>> kernel_basis(const F& k, const SparseMatrix<F>& A,
                                                        const LinalgLimits& limits = {}) {
  RrefResult<F> R = rref(k, A, limits);
  std::vector<bool> is_pivot(A.ncols, false);
  for (int c : R.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<typename F::Elem>> out;
  for (int f = 0; f < A.ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<typename F::Elem> v(A.ncols, k.zero());
    v[f] = k.one();
    for (int r = 0; r < R.rank; ++r) {
      const auto* e = detail::row_find<F>(R.rows[r], f);
      if (e) v[R.pivot_cols[r]] = k.neg(*e);
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace chordal

#endif

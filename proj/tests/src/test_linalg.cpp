#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "chordal/field.hpp"
#include "chordal/linalg.hpp"

using namespace chordal;

namespace {

using Fp = PrimeField;
using Mat = SparseMatrix<Fp>;

// Dense Gaussian elimination as an oracle.
int dense_rank(const Fp& k, std::vector<std::vector<Fp::Elem>> a) {
  int nr = static_cast<int>(a.size());
  if (nr == 0) return 0;
  int nc = static_cast<int>(a[0].size());
  int rank = 0;
  for (int c = 0; c < nc && rank < nr; ++c) {
    int pr = -1;
    for (int r = rank; r < nr; ++r)
      if (!k.is_zero(a[r][c])) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(a[pr], a[rank]);
    auto inv = k.inv(a[rank][c]);
    for (int j = c; j < nc; ++j) a[rank][j] = k.mul(a[rank][j], inv);
    for (int r = 0; r < nr; ++r) {
      if (r == rank || k.is_zero(a[r][c])) continue;
      auto f = a[r][c];
      for (int j = c; j < nc; ++j) a[r][j] = k.sub(a[r][j], k.mul(f, a[rank][j]));
    }
    ++rank;
  }
  return rank;
}

Mat from_dense(const Fp& k, const std::vector<std::vector<Fp::Elem>>& a) {
  Mat m = Mat::make(static_cast<int>(a.size()),
                    a.empty() ? 0 : static_cast<int>(a[0].size()));
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a[r].size(); ++c)
      if (!k.is_zero(a[r][c])) m.rows[r].emplace_back(static_cast<int>(c), a[r][c]);
  return m;
}

std::vector<std::vector<Fp::Elem>> random_dense(const Fp& k, std::mt19937_64& rng,
                                                int nr, int nc, int density_pct) {
  std::vector<std::vector<Fp::Elem>> a(nr, std::vector<Fp::Elem>(nc, k.zero()));
  for (int r = 0; r < nr; ++r)
    for (int c = 0; c < nc; ++c)
      if (static_cast<int>(rng() % 100) < density_pct)
        a[r][c] = k.from_int(static_cast<long long>(rng() % k.characteristic()));
  return a;
}

bool in_kernel(const Fp& k, const Mat& m, const std::vector<Fp::Elem>& v) {
  for (const auto& row : m.rows) {
    Fp::Elem s = k.zero();
    for (const auto& [c, e] : row) s = k.add(s, k.mul(e, v[c]));
    if (!k.is_zero(s)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("sparse rank matches dense oracle") {
  Fp k(32003);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    int nr = 1 + static_cast<int>(rng() % 12);
    int nc = 1 + static_cast<int>(rng() % 12);
    auto a = random_dense(k, rng, nr, nc, 35);
    CHECK(sparse_rank(k, from_dense(k, a)) == dense_rank(k, a));
  }
}

TEST_CASE("rank of structured matrices") {
  Fp k(101);
  // identity block plus duplicate rows
  Mat m = Mat::make(4, 3);
  m.rows[0] = {{0, k.one()}};
  m.rows[1] = {{1, k.one()}};
  m.rows[2] = {{0, k.one()}};
  m.rows[3] = {};
  CHECK(sparse_rank(k, m) == 2);
  CHECK(sparse_rank(k, Mat::make(5, 5)) == 0);
}

TEST_CASE("rref is canonical and idempotent") {
  Fp k(32003);
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    int nr = 2 + static_cast<int>(rng() % 8);
    int nc = 2 + static_cast<int>(rng() % 8);
    auto a = random_dense(k, rng, nr, nc, 40);
    auto m = from_dense(k, a);
    auto r1 = rref(k, m);
    CHECK(r1.rank == dense_rank(k, a));
    // pivot columns are strictly increasing and each pivot row starts at its
    // pivot with coefficient one, with zeros in every other pivot column
    for (std::size_t i = 0; i < r1.rows.size(); ++i) {
      REQUIRE_FALSE(r1.rows[i].empty());
      CHECK(r1.rows[i][0].first == r1.pivot_cols[i]);
      CHECK(k.is_one(r1.rows[i][0].second));
      for (std::size_t j = 0; j < r1.rows.size(); ++j) {
        if (i == j) continue;
        CHECK(detail::row_find<Fp>(r1.rows[i], r1.pivot_cols[j]) == nullptr);
      }
    }
    // shuffling the rows of the input cannot change the result
    std::shuffle(a.begin(), a.end(), rng);
    auto r2 = rref(k, from_dense(k, a));
    CHECK(r1.rank == r2.rank);
    CHECK(r1.pivot_cols == r2.pivot_cols);
    for (int i = 0; i < r1.rank; ++i) {
      REQUIRE(r1.rows[i].size() == r2.rows[i].size());
      for (std::size_t t = 0; t < r1.rows[i].size(); ++t) {
        CHECK(r1.rows[i][t].first == r2.rows[i][t].first);
        CHECK(r1.rows[i][t].second == r2.rows[i][t].second);
      }
    }
  }
}

TEST_CASE("kernel basis spans the right kernel") {
  Fp k(32003);

  // the stale-row regression: rows (1,1,0) and (0,1,1)
  {
    Mat m = Mat::make(2, 3);
    m.rows[0] = {{0, k.one()}, {1, k.one()}};
    m.rows[1] = {{1, k.one()}, {2, k.one()}};
    auto ker = kernel_basis(k, m);
    REQUIRE(ker.size() == 1);
    CHECK(in_kernel(k, m, ker[0]));
    CHECK(k.is_one(ker[0][2]));  // free column normalized to one
  }

  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 40; ++trial) {
    int nr = 1 + static_cast<int>(rng() % 9);
    int nc = 1 + static_cast<int>(rng() % 9);
    auto a = random_dense(k, rng, nr, nc, 45);
    auto m = from_dense(k, a);
    auto ker = kernel_basis(k, m);
    CHECK(static_cast<int>(ker.size()) == nc - dense_rank(k, a));
    for (const auto& v : ker) CHECK(in_kernel(k, m, v));
    // kernel vectors are linearly independent
    DenseReducer<Fp> red(k);
    for (const auto& v : ker) CHECK(red.add(v));
  }
}

TEST_CASE("dense reducer tracks span growth") {
  Fp k(101);
  DenseReducer<Fp> red(k);
  auto vec = [&](std::initializer_list<int> vals) {
    std::vector<Fp::Elem> v;
    for (int x : vals) v.push_back(k.from_int(x));
    return v;
  };
  CHECK(red.add(vec({1, 2, 3})));
  CHECK(red.add(vec({0, 1, 1})));
  CHECK_FALSE(red.add(vec({1, 3, 4})));   // sum of the first two
  CHECK_FALSE(red.add(vec({2, 4, 6})));   // scalar multiple
  CHECK(red.add(vec({0, 0, 5})));
  CHECK(red.rank() == 3);
  CHECK_FALSE(red.add(vec({7, 9, 2})));   // full space now
}

TEST_CASE("rank over the rationals") {
  RationalField q;
  SparseMatrix<RationalField> m = SparseMatrix<RationalField>::make(3, 3);
  m.rows[0] = {{0, mpq_class(1, 2)}, {1, mpq_class(1, 3)}};
  m.rows[1] = {{0, mpq_class(3, 2)}, {1, mpq_class(1)}};
  m.rows[2] = {{2, mpq_class(7)}};
  // row1 - 3 row0 = (0, 0, 0)? 1 - 3/3 = 0: rank 2
  CHECK(sparse_rank(q, m) == 2);
  auto ker = kernel_basis(q, m);
  REQUIRE(ker.size() == 1);
  for (const auto& row : m.rows) {
    mpq_class s = 0;
    for (auto& [c, e] : row) s += e * ker[0][c];
    CHECK(s == 0);
  }
}

TEST_CASE("entry limit aborts cleanly") {
  Fp k(32003);
  std::mt19937_64 rng(5);
  auto a = random_dense(k, rng, 30, 30, 80);
  LinalgLimits tight;
  tight.max_entries = 50;
  CHECK_THROWS_AS(sparse_rank(k, from_dense(k, a), tight), ResourceLimit);
}

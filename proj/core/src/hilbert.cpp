#include "chordal/hilbert.hpp"

#include <algorithm>

#include <gmpxx.h>

namespace chordal {

namespace {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw ResourceLimit("integer overflow");
  return r;
}
long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw ResourceLimit("integer overflow");
  return r;
}

using Series = std::vector<long long>;  // dense in T, constant term first

void trim(Series& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Series add(const Series& a, const Series& b) {
  Series r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = checked_add(r[i], b[i]);
  trim(r);
  return r;
}

Series shift(const Series& a, int k) {
  if (a.empty()) return a;
  Series r(a.size() + k, 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i + k] = a[i];
  return r;
}

// a *= (1 - T^d)
Series mul_one_minus(const Series& a, int d) {
  Series r(a.size() + d, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = checked_add(r[i], a[i]);
    r[i + d] = checked_add(r[i + d], -a[i]);
  }
  trim(r);
  return r;
}

long long eval_at_one(const Series& a) {
  long long s = 0;
  for (long long c : a) s = checked_add(s, c);
  return s;
}

// exact division by (1 - T); caller guarantees divisibility
Series div_one_minus_t(const Series& a) {
  if (a.empty()) return a;
  Series r(a.size() - 1, 0);
  long long carry = 0;
  // (1-T) * (r0 + r1 T + ...) : r_i = a_i + r_{i-1}
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    carry = checked_add(carry, a[i]);
    r[i] = carry;
  }
  trim(r);
  return r;
}

void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.deg() < b.deg();
  });
  std::vector<Monomial> out;
  for (const Monomial& g : gens) {
    bool redundant = false;
    for (const Monomial& m : out)
      if (m.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  gens = std::move(out);
}

Series numerator_rec(std::vector<Monomial> gens, int nvars, long long& budget) {
  if (--budget < 0)
    throw ResourceLimit("Hilbert numerator recursion exceeded its node budget");
  minimalize(gens);
  if (gens.empty()) return Series{1};
  if (gens[0].deg() == 0) return Series{};  // unit ideal, zero series

  // Frequency of each variable across the generators.
  std::vector<int> freq(nvars, 0);
  for (const Monomial& g : gens)
    for (int v = 0; v < nvars; ++v)
      if (g[v] > 0) ++freq[v];
  int pivot = -1;
  for (int v = 0; v < nvars; ++v)
    if (freq[v] >= 2 && (pivot < 0 || freq[v] > freq[pivot])) pivot = v;

  if (pivot < 0) {
    // Pairwise disjoint supports: the quotient is a tensor product.
    Series r{1};
    for (const Monomial& g : gens) r = mul_one_minus(r, g.deg());
    return r;
  }

  // 0 -> (S/(I:x_v))(-1) -> S/I -> S/(I + x_v) -> 0
  std::vector<Monomial> plus;
  for (const Monomial& g : gens)
    if (g[pivot] == 0) plus.push_back(g);
  plus.push_back(Monomial::var(nvars, pivot));

  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (Monomial g : gens) {
    if (g[pivot] > 0) g.set(pivot, g[pivot] - 1);
    colon.push_back(g);
  }

  return add(numerator_rec(std::move(plus), nvars, budget),
             shift(numerator_rec(std::move(colon), nvars, budget), 1));
}

// Solve for alpha in P(m) = sum_i alpha_i C(m+i-1, i) given exact values at
// consecutive integers m0..m0+D-1. Small dense rational solve.
std::vector<long long> fit_alpha(int D, long long m0,
                                 const std::vector<long long>& vals) {
  std::vector<std::vector<mpq_class>> A(D, std::vector<mpq_class>(D + 1));
  for (int r = 0; r < D; ++r) {
    long long m = m0 + r;
    for (int i = 0; i < D; ++i) {
      // C(m+i-1, i) as an exact rational (m can be any integer)
      mpq_class b = 1;
      for (int t = 0; t < i; ++t)
        b *= mpq_class(static_cast<long>(m + i - 1 - t), static_cast<long>(t + 1));
      b.canonicalize();
      A[r][i] = b;
    }
    A[r][D] = static_cast<long>(vals[r]);
  }
  for (int c = 0; c < D; ++c) {
    int piv = -1;
    for (int r = c; r < D; ++r)
      if (A[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw Error("Hilbert polynomial fit: singular system");
    std::swap(A[c], A[piv]);
    mpq_class inv = 1 / A[c][c];
    for (int j = c; j <= D; ++j) A[c][j] *= inv;
    for (int r = 0; r < D; ++r) {
      if (r == c || A[r][c] == 0) continue;
      mpq_class f = A[r][c];
      for (int j = c; j <= D; ++j) A[r][j] -= f * A[c][j];
    }
  }
  std::vector<long long> alpha(D);
  for (int i = 0; i < D; ++i) {
    if (A[i][D].get_den() != 1)
      throw Error("Hilbert polynomial fit: non-integer coefficient");
    mpz_class z = A[i][D].get_num();
    if (!z.fits_slong_p()) throw ResourceLimit("Hilbert coefficient overflow");
    alpha[i] = z.get_si();
  }
  return alpha;
}

}  // namespace

long long binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long t = 1; t <= k; ++t) {
    // exact at every step: r * (n-k+t) is divisible by t
    r = checked_mul(r, n - k + t) / t;
  }
  return r;
}

std::vector<long long> hilbert_numerator(std::vector<Monomial> gens, int nvars) {
  long long budget = 20'000'000;
  Series n = numerator_rec(std::move(gens), nvars, budget);
  return n;
}

long long hf_from_numerator(const std::vector<long long>& num, int nvars, int m) {
  if (m < 0) return 0;
  long long s = 0;
  for (std::size_t r = 0; r < num.size(); ++r) {
    if (static_cast<long long>(r) > m) break;
    if (num[r] == 0) continue;
    s = checked_add(s, checked_mul(num[r], binomial(m - r + nvars - 1, nvars - 1)));
  }
  return s;
}

long long HilbertData::poly_value(long long m) const {
  long long s = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    s = checked_add(s, checked_mul(alpha[i], binomial(m + i - 1, i)));
  return s;
}

HilbertData hilbert_data_from_numerator(std::vector<long long> num, int nvars,
                                        int record_upto) {
  HilbertData h;
  h.nvars = nvars;
  h.numerator = num;

  Series reduced = num;
  trim(reduced);
  int cancels = 0;
  while (!reduced.empty() && eval_at_one(reduced) == 0) {
    reduced = div_one_minus_t(reduced);
    ++cancels;
  }
  h.numerator_reduced = reduced;

  if (reduced.empty()) {
    // I = S: the zero ring.
    h.dim_affine = 0;
    h.degree = 0;
    h.stabilization = 0;
    int upto = record_upto >= 0 ? record_upto : 8;
    for (int m = 0; m <= upto; ++m) h.values[m] = 0;
    return h;
  }

  h.dim_affine = nvars - cancels;
  h.degree = eval_at_one(reduced);
  int D = h.dim_affine;
  int degN = static_cast<int>(reduced.size()) - 1;

  if (D == 0) {
    h.stabilization = degN + 1;
  } else {
    h.stabilization = std::max(1, degN - D + 1);
    std::vector<long long> vals;
    for (int r = 0; r < D; ++r)
      vals.push_back(hf_from_numerator(num, nvars, h.stabilization + r));
    h.alpha = fit_alpha(D, h.stabilization, vals);
  }

  int upto = record_upto >= 0 ? record_upto : std::max(h.stabilization + D + 2, 8);
  for (int m = 0; m <= upto; ++m) h.values[m] = hf_from_numerator(num, nvars, m);
  return h;
}

}  // namespace chordal

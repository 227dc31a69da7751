#ifndef CHORDAL_DETERMINANTAL_HPP
#define CHORDAL_DETERMINANTAL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chordal/betti.hpp"
#include "chordal/groebner.hpp"
#include "chordal/ideal.hpp"
#include "chordal/koszul.hpp"
#include "chordal/polynomial.hpp"

namespace chordal {

// Matrix whose entries are linear forms (or zero).
template <class F>
struct LinearFormMatrix {
  RingPtr<F> ring;
  int nrows = 0;
  int ncols = 0;
  std::vector<Polynomial<F>> entries;  // row-major

  const Polynomial<F>& at(int r, int c) const {
    return entries[static_cast<std::size_t>(r) * ncols + c];
  }
};

template <class F>
LinearFormMatrix<F> make_linear_matrix(RingPtr<F> ring, int nrows, int ncols,
                                       std::vector<Polynomial<F>> entries);

// Generic Hankel matrix for degree d: entry (i, j) = x_{i+j}, with the column
// count chosen so every variable x_0..x_d appears: rows x (d + 2 - rows).
template <class F>
LinearFormMatrix<F> hankel_matrix(const F& field, int d, int rows);

// Determinant of the submatrix on the given (ascending) row/column subsets.
template <class F>
Polynomial<F> minor_det(const LinearFormMatrix<F>& m, const std::vector<int>& rows,
                        const std::vector<int>& cols);

// Ideal of all size x size minors.
template <class F>
Ideal<F> minor_ideal(const LinearFormMatrix<F>& m, int size);

// 2x2 minors of the 2-row Hankel matrix: the degree-d rational normal curve.
template <class F>
Ideal<F> rnc_ideal(const F& field, int d);

// Betti table of the quotient by the maximal minors of a 1-generic a x b
// matrix of linear forms (a <= b), from the Eagon-Northcott complex:
// beta_i = C(b, a+i-1) * C(a+i-2, a-1) in degree a+i-1 for i = 1..b-a+1.
BettiTable en_betti(int a, int b);

// ===== explicit Koszul cycles from the matrix =====

// The chain gamma in Wedge^(s+t-2k-1) V (x) S_{k+1} built from the (k+1)-minors
// avoiding row `frame_row`, with the frame given by the entries of row
// `frame_row` and column `frame_col`. Rows/columns are swapped into leading
// position first, which only flips signs of minors.
template <class F>
KoszulChain<F> build_gamma(const LinearFormMatrix<F>& a, int k, int frame_row = 0,
                           int frame_col = 0);

struct CycleCertificate {
  int s = 0, t = 0, k = 0;           // matrix is (s+1) x (t+1)
  int position_i = 0;                // s + t - 2k - 1
  int position_j = 0;                // s + t - k
  bool hypotheses_ok = false;        // shape bounds, frame found, no low-degree elements
  bool frame_found = false;
  int frame_row = -1, frame_col = -1;
  bool repositioned = false;
  bool boundary_nonzero = false;
  bool coefficients_in_ideal = false;
  bool coefficients_are_minors = false;
  long long betti_value = -1;        // table entry at (position_i, position_j); -1 = skipped
  // The cycle facts alone, without the resolution cross-check.
  bool cycle_ok() const {
    return hypotheses_ok && boundary_nonzero && coefficients_in_ideal &&
           coefficients_are_minors;
  }
  bool ok() const { return cycle_ok() && betti_value > 0; }
};

struct CycleOptions {
  std::uint64_t seed = 1;
  bool compute_betti = true;
  BuchbergerOptions gb;
  LinalgLimits limits;
};

// Certifies that gamma is a nonzero Koszul cycle modulo the (k+2)-minor ideal:
// its boundary is nonzero, lands in the ideal, and consists of signed
// (k+2)-minors meeting the frame row or column; optionally cross-checks the
// Betti table entry at the predicted position.
template <class F>
CycleCertificate verify_cycle(const LinearFormMatrix<F>& a, int k,
                              const CycleOptions& opts = {});

std::string render_cycle_text(const CycleCertificate& c);

}  // namespace chordal

#endif

#ifndef CHORDAL_PREDICT_HPP
#define CHORDAL_PREDICT_HPP

#include <string>
#include <utility>
#include <vector>

#include "chordal/betti.hpp"
#include "chordal/hilbert.hpp"

namespace chordal {

// A smooth curve of genus g embedded by a complete linear system of degree d
// (so into P^n with n = d - g), together with the secant index k.
struct CurveParams {
  int g = 0;
  int d = 0;
  int k = 1;
  int n() const { return d - g; }
  void validate() const;
};

// ===== closed-form invariants of the secant variety (k = 1) =====

long long secant_degree(const CurveParams& p);           // C(d-1, 2) - g
long long secant_sectional_genus(const CurveParams& p);  // (d-2)(d+2g-3)/2
long long secant_alpha1(const CurveParams& p);
long long secant_alpha0(const CurveParams& p);
long long secant_hilbert_poly(const CurveParams& p, long long m);

long long beta13_proof(const CurveParams& p);    // C(n+1,3) - 3*deg + G - 1
long long beta13_display(const CurveParams& p);  // C(n+1,3) - (d-2)n - 3g + 1
long long beta24_from(const CurveParams& p, long long beta14);

// Last column of the table: beta_{n-2k-1, n+1} = C(g+k, k+1).
long long corner_betti(int g, int k);
std::pair<int, int> corner_position(const CurveParams& p, int k);

// Next-to-corner rows for k = 1, assuming the residual terms vanish:
// beta_{n-4, n} and beta_{n-4, n-1}.
long long tail_row_upper(const CurveParams& p);  // C(g,2) * (n-3)
long long tail_row_lower(const CurveParams& p);  // C(g+1,2)C(n,2) - C(g,2)(n-3)(n-1) - G

// d >= 2g + 2k + 1 + p forces beta_{p, k+1+p} != 0 (and linearity through p).
bool strand_easy_applies(const CurveParams& p, int step);
// Cycle position produced by an (s+1) x (t+1) matrix of linear forms.
std::pair<int, int> strand_position(int s, int t, int k);

// ===== verification report =====

enum class RowKind { Theorem, Conjecture, Informational };

struct PredictionRow {
  std::string name;
  RowKind kind = RowKind::Theorem;
  long long expected = 0;
  long long actual = 0;
  bool checked = false;  // an actual value was available
  bool match = false;
  std::string note;
};

struct PredictionReport {
  CurveParams params;
  std::vector<PredictionRow> rows;
  bool ok() const {
    for (const auto& r : rows)
      if (r.kind == RowKind::Theorem && r.checked && !r.match) return false;
    return true;
  }
};

// Checks every closed-form value against the computed secant data.
PredictionReport verify_all(const CurveParams& params, const BettiTable& sigma,
                            const HilbertData& sigma_hilbert);

// Predictor values only, nothing to compare against.
PredictionReport predictor_report(const CurveParams& params);

std::string render_report_text(const PredictionReport& r);

}  // namespace chordal

#endif

#include "chordal/predict.hpp"

#include <sstream>

#include "chordal/error.hpp"

namespace chordal {

void CurveParams::validate() const {
  if (g < 0) throw InvalidArgument("genus must be nonnegative");
  if (k < 1) throw InvalidArgument("secant index must be at least 1");
  if (d < 2 * g + 3) throw InvalidArgument("degree must be at least 2g + 3");
}

long long secant_degree(const CurveParams& p) { return binomial(p.d - 1, 2) - p.g; }

long long secant_sectional_genus(const CurveParams& p) {
  return static_cast<long long>(p.d - 2) * (p.d + 2 * p.g - 3) / 2;
}

long long secant_alpha1(const CurveParams& p) {
  const long long D = secant_degree(p);
  const long long G = secant_sectional_genus(p);
  return binomial(p.n() + 2, 2) - (p.n() + 1) - 3 * D - 2 * (1 - G);
}

long long secant_alpha0(const CurveParams& p) {
  const long long D = secant_degree(p);
  const long long G = secant_sectional_genus(p);
  return -binomial(p.n() + 2, 2) + 2 * (p.n() + 1) + 2 * D + 1 - G;
}

long long secant_hilbert_poly(const CurveParams& p, long long m) {
  const long long D = secant_degree(p);
  const long long G = secant_sectional_genus(p);
  return D * binomial(m + 2, 3) + (1 - G) * binomial(m + 1, 2) + secant_alpha1(p) * m +
         secant_alpha0(p);
}

long long beta13_proof(const CurveParams& p) {
  return binomial(p.n() + 1, 3) - 3 * secant_degree(p) + secant_sectional_genus(p) - 1;
}

long long beta13_display(const CurveParams& p) {
  return binomial(p.n() + 1, 3) - static_cast<long long>(p.d - 2) * p.n() - 3 * p.g + 1;
}

long long beta24_from(const CurveParams& p, long long beta14) {
  return beta14 + beta13_proof(p) * (p.n() + 1) - binomial(p.n() + 4, 4) +
         secant_hilbert_poly(p, 4);
}

long long corner_betti(int g, int k) { return binomial(g + k, k + 1); }

std::pair<int, int> corner_position(const CurveParams& p, int k) {
  return {p.n() - 2 * k - 1, p.n() + 1};
}

long long tail_row_upper(const CurveParams& p) {
  return binomial(p.g, 2) * (p.n() - 3);
}

long long tail_row_lower(const CurveParams& p) {
  return binomial(p.g + 1, 2) * binomial(p.n(), 2) -
         binomial(p.g, 2) * static_cast<long long>(p.n() - 3) * (p.n() - 1) -
         secant_sectional_genus(p);
}

bool strand_easy_applies(const CurveParams& p, int step) {
  return p.d >= 2 * p.g + 2 * p.k + 1 + step;
}

std::pair<int, int> strand_position(int s, int t, int k) {
  return {s + t - 2 * k - 1, s + t - k};
}

// ===== report assembly =====

namespace {

PredictionRow row(std::string name, RowKind kind, long long expected) {
  PredictionRow r;
  r.name = std::move(name);
  r.kind = kind;
  r.expected = expected;
  return r;
}

PredictionRow row(std::string name, RowKind kind, long long expected, long long actual,
                  std::string note = "") {
  PredictionRow r;
  r.name = std::move(name);
  r.kind = kind;
  r.expected = expected;
  r.actual = actual;
  r.checked = true;
  r.match = (expected == actual);
  r.note = std::move(note);
  return r;
}

}  // namespace

PredictionReport verify_all(const CurveParams& params, const BettiTable& sigma,
                            const HilbertData& hd) {
  params.validate();
  if (params.k != 1)
    throw InvalidArgument("full verification covers the first secant variety only");
  PredictionReport rep;
  rep.params = params;
  const int n = params.n();
  const long long G = secant_sectional_genus(params);

  rep.rows.push_back(row("dimension", RowKind::Theorem, 3, hd.dim_affine - 1));
  rep.rows.push_back(row("degree", RowKind::Theorem, secant_degree(params), hd.degree));
  // alpha = (a0, a1, a2, a3) in the binomial basis: a2 = 1 - G, a3 = degree
  if (hd.alpha.size() == 4) {
    rep.rows.push_back(row("sectional genus", RowKind::Theorem, G, 1 - hd.alpha[2]));
    rep.rows.push_back(
        row("hilbert alpha_1", RowKind::Theorem, secant_alpha1(params), hd.alpha[1]));
    rep.rows.push_back(
        row("hilbert alpha_0", RowKind::Theorem, secant_alpha0(params), hd.alpha[0]));
  } else {
    rep.rows.push_back(row("sectional genus", RowKind::Theorem, G));
  }
  for (int m : {1, 2, 4}) {
    auto it = hd.values.find(m);
    if (it != hd.values.end())
      rep.rows.push_back(row("hilbert value at " + std::to_string(m), RowKind::Theorem,
                             secant_hilbert_poly(params, m), it->second));
  }

  rep.rows.push_back(
      row("beta(1,3)", RowKind::Theorem, beta13_proof(params), sigma.at(1, 3)));
  rep.rows.push_back(row("beta(1,3) display form", RowKind::Informational,
                         beta13_display(params), sigma.at(1, 3),
                         "differs from the proof form for small degree"));
  rep.rows.push_back(row("beta(2,4)", RowKind::Theorem,
                         beta24_from(params, sigma.at(1, 4)), sigma.at(2, 4)));

  const auto [ci, cj] = corner_position(params, 1);
  rep.rows.push_back(row("corner beta(" + std::to_string(ci) + "," + std::to_string(cj) + ")",
                         RowKind::Theorem, corner_betti(params.g, 1), sigma.at(ci, cj)));

  rep.rows.push_back(row("tail beta(" + std::to_string(n - 4) + "," + std::to_string(n) + ")",
                         RowKind::Theorem, tail_row_upper(params), sigma.at(n - 4, n),
                         "residual term expected to vanish"));
  rep.rows.push_back(
      row("tail beta(" + std::to_string(n - 4) + "," + std::to_string(n - 1) + ")",
          RowKind::Theorem, tail_row_lower(params), sigma.at(n - 4, n - 1),
          "residual terms expected to vanish"));

  rep.rows.push_back(row("regularity of the quotient", RowKind::Theorem, 4,
                         regularity_quotient(sigma)));
  rep.rows.push_back(
      row("regularity of the ideal", RowKind::Theorem, 5, regularity_ideal(sigma)));
  rep.rows.push_back(row("arithmetically Cohen-Macaulay", RowKind::Theorem, 1,
                         acm_status(sigma) == Tristate::True ? 1 : 0));

  for (int p = 1; p <= 3; ++p) {
    const bool applies = strand_easy_applies(params, p);
    const bool holds = linearity_through(sigma, params.k + 2, p);
    if (applies) {
      rep.rows.push_back(row("linearity through step " + std::to_string(p),
                             RowKind::Theorem, 1, holds ? 1 : 0));
      rep.rows.push_back(row("strand nonvanishing at step " + std::to_string(p),
                             RowKind::Theorem, 1,
                             sigma.at(p, params.k + 1 + p) != 0 ? 1 : 0));
    } else {
      rep.rows.push_back(row("linearity through step " + std::to_string(p),
                             RowKind::Informational, 0, holds ? 1 : 0,
                             "degree below the hypothesis bound; no prediction"));
    }
  }
  return rep;
}

PredictionReport predictor_report(const CurveParams& params) {
  params.validate();
  PredictionReport rep;
  rep.params = params;
  rep.rows.push_back(row("degree", RowKind::Theorem, secant_degree(params)));
  rep.rows.push_back(
      row("sectional genus", RowKind::Theorem, secant_sectional_genus(params)));
  for (int m : {1, 2, 4})
    rep.rows.push_back(row("hilbert value at " + std::to_string(m), RowKind::Theorem,
                           secant_hilbert_poly(params, m)));
  rep.rows.push_back(row("beta(1,3)", RowKind::Theorem, beta13_proof(params)));
  rep.rows.push_back(row("beta(1,3) display form", RowKind::Informational,
                         beta13_display(params)));
  rep.rows.push_back(row("beta(2,4) assuming beta(1,4) = 0", RowKind::Theorem,
                         beta24_from(params, 0)));
  for (int k = 1; 2 * k + 1 < params.n(); ++k) {
    const auto [ci, cj] = corner_position(params, k);
    rep.rows.push_back(row("corner beta(" + std::to_string(ci) + "," + std::to_string(cj) +
                               ") for secant index " + std::to_string(k),
                           k == 1 ? RowKind::Theorem : RowKind::Conjecture,
                           corner_betti(params.g, k)));
  }
  return rep;
}

std::string render_report_text(const PredictionReport& r) {
  std::ostringstream os;
  os << "curve: genus " << r.params.g << ", degree " << r.params.d << ", ambient P^"
     << r.params.n() << ", secant index " << r.params.k << "\n";
  for (const auto& row : r.rows) {
    const char* kind = row.kind == RowKind::Theorem
                           ? "theorem      "
                           : (row.kind == RowKind::Conjecture ? "conjecture   "
                                                              : "informational");
    os << "[" << kind << "] " << row.name << ": expected " << row.expected;
    if (row.checked) {
      os << ", computed " << row.actual << " -> ";
      if (row.match)
        os << "ok";
      else
        os << (row.kind == RowKind::Theorem ? "MISMATCH" : "differs");
    }
    if (!row.note.empty()) os << " (" << row.note << ")";
    os << "\n";
  }
  os << (r.ok() ? "verification passed" : "verification FAILED") << "\n";
  return os.str();
}

}  // namespace chordal

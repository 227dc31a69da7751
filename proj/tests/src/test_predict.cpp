#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chordal/predict.hpp"

using namespace chordal;

TEST_CASE("curve parameters") {
  CurveParams p{2, 9};
  CHECK(p.n() == 7);
  CHECK_NOTHROW(p.validate());
  CHECK_THROWS_AS((CurveParams{2, 6}.validate()), InvalidArgument);   // d < 2g + 3
  CHECK_THROWS_AS((CurveParams{-1, 9}.validate()), InvalidArgument);
  CHECK_THROWS_AS((CurveParams{2, 9, 0}.validate()), InvalidArgument);
}

TEST_CASE("genus 2 degree 9 numbers") {
  CurveParams p{2, 9};
  CHECK(secant_degree(p) == 26);
  CHECK(secant_sectional_genus(p) == 35);
  CHECK(secant_alpha1(p) == 18);
  CHECK(secant_alpha0(p) == -2);
  CHECK(secant_hilbert_poly(p, 1) == 8);
  CHECK(secant_hilbert_poly(p, 2) == 36);
  CHECK(secant_hilbert_poly(p, 4) == 250);
  CHECK(beta13_proof(p) == 12);
  CHECK(beta13_display(p) == 2);
  CHECK(beta24_from(p, 0) == 16);
  CHECK(corner_betti(2, 1) == 3);
  CHECK(corner_position(p, 1) == std::make_pair(4, 8));
  CHECK(tail_row_upper(p) == 4);   // C(2,2) * (7-3)
  CHECK(tail_row_lower(p) == 4);   // 63 - 24 - 35
}

TEST_CASE("genus 2 degree 12 numbers") {
  CurveParams p{2, 12};
  CHECK(p.n() == 10);
  CHECK(secant_degree(p) == 53);
  CHECK(secant_sectional_genus(p) == 65);
  CHECK(secant_alpha1(p) == 24);
  CHECK(secant_alpha0(p) == -2);
  CHECK(secant_hilbert_poly(p, 4) == 514);
  CHECK(beta13_proof(p) == 70);
  CHECK(beta13_display(p) == 60);
  CHECK(beta24_from(p, 0) == 283);
  CHECK(corner_betti(2, 1) == 3);
  CHECK(corner_betti(2, 2) == 4);
  CHECK(corner_position(p, 1) == std::make_pair(7, 11));
}

TEST_CASE("rational quartic numbers") {
  CurveParams p{0, 4};
  CHECK(secant_degree(p) == 3);
  CHECK(secant_sectional_genus(p) == 1);
  CHECK(beta13_proof(p) == 1);
  CHECK(beta24_from(p, 0) == 0);
  CHECK(corner_betti(0, 1) == 0);
}

TEST_CASE("strand helpers") {
  CurveParams p{2, 9};
  CHECK(strand_easy_applies(p, 1));
  CHECK(strand_easy_applies(p, 2));
  CHECK_FALSE(strand_easy_applies(p, 3));  // 9 < 2*2 + 2 + 1 + 3
  CHECK(strand_position(3, 4, 1) == std::make_pair(4, 6));
  CHECK(strand_position(2, 3, 1) == std::make_pair(2, 4));
}

TEST_CASE("predictor report for large degree") {
  PredictionReport rep = predictor_report(CurveParams{2, 12});
  CHECK(rep.ok());  // nothing computed, nothing to mismatch
  bool saw_corner_theorem = false;
  bool saw_corner_conjecture = false;
  for (const auto& row : rep.rows) {
    if (row.name.find("corner") == std::string::npos) continue;
    if (row.kind == RowKind::Theorem) saw_corner_theorem = true;
    if (row.kind == RowKind::Conjecture) saw_corner_conjecture = true;
    CHECK_FALSE(row.checked);
  }
  CHECK(saw_corner_theorem);
  CHECK(saw_corner_conjecture);
  auto text = render_report_text(rep);
  CHECK(text.find("beta(1,3)") != std::string::npos);
  CHECK(text.find("expected 70") != std::string::npos);
  CHECK(text.find("verification passed") != std::string::npos);
}

TEST_CASE("verify_all flags mismatches") {
  CurveParams p{2, 9};
  // a fabricated table with the wrong beta(1,3)
  BettiTable sigma;
  sigma.complete = true;
  sigma.entries[{0, 0}] = 1;
  sigma.entries[{1, 3}] = 11;  // should be 12
  sigma.pd = 1;
  sigma.reg = 2;
  sigma.codim = 4;
  HilbertData hd;
  hd.nvars = 8;
  hd.dim_affine = 4;
  hd.degree = 26;
  hd.alpha = {-2, 18, -34, 26};
  hd.values[1] = 8;
  hd.values[2] = 36;
  hd.values[4] = 250;
  PredictionReport rep = verify_all(p, sigma, hd);
  CHECK_FALSE(rep.ok());
  bool found = false;
  for (const auto& row : rep.rows)
    if (row.name == "beta(1,3)") {
      CHECK(row.checked);
      CHECK_FALSE(row.match);
      CHECK(row.expected == 12);
      CHECK(row.actual == 11);
      found = true;
    }
  CHECK(found);
  auto text = render_report_text(rep);
  CHECK(text.find("MISMATCH") != std::string::npos);
  CHECK(text.find("verification FAILED") != std::string::npos);
}

TEST_CASE("verify_all only handles the first secant") {
  BettiTable sigma;
  HilbertData hd;
  CHECK_THROWS_AS(verify_all(CurveParams{2, 9, 2}, sigma, hd), InvalidArgument);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chordal/betti.hpp"
#include "chordal/determinantal.hpp"
#include "chordal/io.hpp"

using namespace chordal;

namespace {
using Fp = PrimeField;
}

TEST_CASE("hankel shapes and entries") {
  Fp k(32003);
  auto H = hankel_matrix(k, 5, 3);
  CHECK(H.nrows == 3);
  CHECK(H.ncols == 4);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j) {
      auto expect = Polynomial<Fp>::variable(H.ring, i + j);
      CHECK(H.at(i, j) == expect);
    }
  CHECK_THROWS_AS(hankel_matrix(k, 1, 3), InvalidArgument);
  CHECK_THROWS_AS(hankel_matrix(k, 30, 2), InvalidArgument);
}

TEST_CASE("minor determinants by hand") {
  Fp k(32003);
  auto H = hankel_matrix(k, 4, 3);
  auto r = H.ring;
  // 2x2 in the corner: x0 x2 - x1^2
  CHECK(minor_det(H, {0, 1}, {0, 1}) == parse_polynomial(r, "x0*x2 - x1^2"));
  // full 3x3
  auto det = minor_det(H, {0, 1, 2}, {0, 1, 2});
  CHECK(det == parse_polynomial(r, "x0*x2*x4 - x0*x3^2 - x1^2*x4 + 2*x1*x2*x3 - x2^3"));
  CHECK_THROWS_AS(minor_det(H, {0, 1}, {0, 1, 2}), InvalidArgument);
  CHECK_THROWS_AS(minor_det(H, {0, 3}, {0, 1}), InvalidArgument);
}

TEST_CASE("minor ideals") {
  Fp k(32003);
  auto H = hankel_matrix(k, 4, 2);
  auto I = minor_ideal(H, 2);
  CHECK(I.gens.size() == binomial(2, 2) * binomial(4, 2));
  CHECK_THROWS_AS(minor_ideal(H, 3), InvalidArgument);
  CHECK_THROWS_AS(minor_ideal(H, 0), InvalidArgument);

  auto rnc = rnc_ideal(k, 4);
  CHECK(rnc.gens.size() == 6);
  CHECK_THROWS_AS(rnc_ideal(k, 1), InvalidArgument);
}

TEST_CASE("eagon northcott betti numbers") {
  auto t23 = en_betti(2, 3);
  CHECK(t23.at(0, 0) == 1);
  CHECK(t23.at(1, 2) == 3);
  CHECK(t23.at(2, 3) == 2);
  CHECK(t23.pd == 2);
  CHECK(t23.reg == 1);
  CHECK(t23.degree == 3);

  auto t24 = en_betti(2, 4);
  CHECK(t24.at(1, 2) == 6);
  CHECK(t24.at(2, 3) == 8);
  CHECK(t24.at(3, 4) == 3);
  CHECK(t24.degree == 4);

  auto t34 = en_betti(3, 4);
  CHECK(t34.at(1, 3) == 4);
  CHECK(t34.at(2, 4) == 3);
  CHECK(t34.pd == 2);
  CHECK(t34.reg == 2);
  CHECK(t34.degree == 6);

  auto t35 = en_betti(3, 5);
  CHECK(t35.degree == 10);
  CHECK(t35.codim == 3);

  CHECK_THROWS_AS(en_betti(1, 3), InvalidArgument);
  CHECK_THROWS_AS(en_betti(4, 3), InvalidArgument);
  CHECK(euler_matches_numerator(t24));
  CHECK(euler_matches_numerator(t34));
}

TEST_CASE("gamma boundary recovers the determinant for small sizes") {
  Fp k(32003);

  // 2x2 with k = 0: d(gamma) = +- det in the e-basis component of size 1
  {
    auto H = hankel_matrix(k, 2, 2);
    auto g = build_gamma(H, 0, 0, 0);
    CHECK(g.wedge_size == 1);
    auto d = koszul_boundary(g);
    REQUIRE(d.comps.size() == 1);
    auto det = minor_det(H, {0, 1}, {0, 1});
    auto val = d.comps.begin()->second;
    CHECK(((val - det).is_zero() || (val + det).is_zero()));
  }

  // 3x3 with k = 1
  {
    auto H = hankel_matrix(k, 4, 3);
    auto g = build_gamma(H, 1, 0, 0);
    CHECK(g.wedge_size == 1);
    auto d = koszul_boundary(g);
    REQUIRE(d.comps.size() == 1);
    auto det = minor_det(H, {0, 1, 2}, {0, 1, 2});
    auto val = d.comps.begin()->second;
    CHECK(((val - det).is_zero() || (val + det).is_zero()));
  }
}

TEST_CASE("gamma is a cycle modulo the smaller minors") {
  Fp k(32003);
  auto H = hankel_matrix(k, 5, 3);
  auto g = build_gamma(H, 1, 0, 3);
  auto d = koszul_boundary(g);
  auto gb = buchberger(minor_ideal(H, 3));
  for (const auto& [s, c] : d.comps) CHECK(contains(gb, c));
  CHECK_THROWS_AS(build_gamma(H, 2, 0, 0), InvalidArgument);  // k+2 > min dim
  CHECK_THROWS_AS(build_gamma(H, -1, 0, 0), InvalidArgument);
  CHECK_THROWS_AS(build_gamma(H, 1, 3, 0), InvalidArgument);  // bad frame row
}

TEST_CASE("cycle certificates for the acceptance hankels") {
  Fp k(32003);
  struct Row {
    int deg, rows, position_i, position_j;
    long long beta;
  };
  const Row expect[] = {{4, 3, 1, 3, 1}, {5, 3, 2, 4, 3}, {6, 3, 3, 5, 6}};
  for (const auto& e : expect) {
    CAPTURE(e.deg);
    auto H = hankel_matrix(k, e.deg, e.rows);
    auto cert = verify_cycle(H, 1);
    CHECK(cert.ok());
    CHECK(cert.position_i == e.position_i);
    CHECK(cert.position_j == e.position_j);
    CHECK(cert.betti_value == e.beta);
    CHECK(cert.hypotheses_ok);
    CHECK(cert.frame_found);
    CHECK(cert.boundary_nonzero);
    CHECK(cert.coefficients_in_ideal);
    CHECK(cert.coefficients_are_minors);
    CHECK(cert.repositioned);  // literal hankels repeat entries across row 0 and column 0
  }
}

TEST_CASE("cycle options") {
  Fp k(32003);
  auto H = hankel_matrix(k, 5, 3);
  CycleOptions o;
  o.compute_betti = false;
  auto cert = verify_cycle(H, 1, o);
  CHECK(cert.betti_value == -1);
  CHECK(cert.cycle_ok());
  CHECK_FALSE(cert.ok());  // the resolution cross-check was skipped
  CHECK(cert.boundary_nonzero);
  CHECK(cert.coefficients_in_ideal);

  CHECK_THROWS_AS(verify_cycle(H, 2), InvalidArgument);   // k+2 exceeds the rows
  CHECK_THROWS_AS(verify_cycle(H, -1), InvalidArgument);
}

TEST_CASE("generic two by two matrix carries the classical cycle") {
  Fp k(32003);
  auto r = make_ring(k, standard_names("x", 4));
  std::vector<Polynomial<Fp>> ent;
  for (int v = 0; v < 4; ++v) ent.push_back(Polynomial<Fp>::variable(r, v));
  auto M = make_linear_matrix(r, 2, 2, std::move(ent));
  auto cert = verify_cycle(M, 0);
  CHECK(cert.ok());
  CHECK(cert.position_i == 1);
  CHECK(cert.position_j == 2);
  CHECK(cert.betti_value == 1);  // hypersurface: one quadric generator
  CHECK_FALSE(cert.repositioned);
}

TEST_CASE("degenerate matrix finds no frame") {
  Fp k(32003);
  // duplicated rows: every 2x2 minor vanishes and no frame is independent
  auto r = make_ring(k, standard_names("x", 2));
  std::vector<Polynomial<Fp>> ent = {
      Polynomial<Fp>::variable(r, 0), Polynomial<Fp>::variable(r, 1),
      Polynomial<Fp>::variable(r, 0), Polynomial<Fp>::variable(r, 1)};
  auto M = make_linear_matrix(r, 2, 2, std::move(ent));
  auto cert = verify_cycle(M, 0);
  CHECK_FALSE(cert.frame_found);
  CHECK_FALSE(cert.hypotheses_ok);
  CHECK_FALSE(cert.ok());
}

TEST_CASE("render cycle text") {
  Fp k(32003);
  auto cert = verify_cycle(hankel_matrix(k, 4, 3), 1);
  auto text = render_cycle_text(cert);
  CHECK(text.find("certificate: OK") != std::string::npos);
  CHECK(text.find("position: (1, 3)") != std::string::npos);
}

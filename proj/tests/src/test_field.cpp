#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "chordal/field.hpp"
#include "chordal/io.hpp"
#include "chordal/monomial.hpp"
#include "chordal/polynomial.hpp"
#include "chordal/ring.hpp"

using namespace chordal;

// ===== fields =====

TEST_CASE("prime validation") {
  CHECK(is_prime_u32(2));
  CHECK(is_prime_u32(32003));
  CHECK(is_prime_u32(31013));
  CHECK_FALSE(is_prime_u32(1));
  CHECK_FALSE(is_prime_u32(32001));
  CHECK_NOTHROW(FieldSpec{32003}.validate());
  CHECK_NOTHROW(FieldSpec{0}.validate());
  CHECK_THROWS_AS(FieldSpec{4}.validate(), InvalidArgument);
  CHECK_THROWS_AS(FieldSpec{2}.validate(), InvalidArgument);
}

TEST_CASE("prime field arithmetic") {
  PrimeField k(32003);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    auto a = k.from_int(static_cast<long long>(rng() % 32003));
    if (k.is_zero(a)) continue;
    CHECK(k.mul(a, k.inv(a)) == k.one());
  }
  CHECK(k.from_int(-1) == 32002u);
  PrimeField k7(7);
  CHECK(k7.to_signed(k7.from_int(5)) == -2);
  CHECK(k7.to_signed(k7.from_int(3)) == 3);
  CHECK(k7.to_string(k7.from_int(5)) == "-2");
  CHECK_THROWS_AS(k7.inv(k7.zero()), InvalidArgument);
}

TEST_CASE("rational field arithmetic") {
  RationalField q;
  auto a = q.from_int(3);
  auto b = q.from_int(-7);
  CHECK(q.mul(a, q.inv(a)) == q.one());
  CHECK(q.add(a, b) == q.from_int(-4));
  CHECK(q.characteristic() == 0);
  CHECK_THROWS_AS(q.inv(q.zero()), InvalidArgument);
}

// ===== monomials and orders =====

namespace {
Monomial mono(std::initializer_list<int> es) {
  return Monomial::from_exponents(std::vector<int>(es));
}
}  // namespace

TEST_CASE("grevlex tie break") {
  MonomialOrder o = MonomialOrder::grevlex();
  // x1^2 beats x0*x2: same degree, smaller exponent on the last variable
  CHECK(o.compare(mono({0, 2, 0}), mono({1, 0, 1})) > 0);
  CHECK(o.compare(mono({1, 0, 1}), mono({0, 2, 0})) < 0);
  CHECK(o.compare(mono({1, 1, 0}), mono({1, 0, 1})) > 0);
  CHECK(o.compare(mono({3, 0, 0}), mono({0, 0, 1})) > 0);  // degree first
}

TEST_CASE("lex ignores degree") {
  MonomialOrder o = MonomialOrder::lex();
  CHECK(o.compare(mono({1, 0, 0}), mono({0, 2, 0})) > 0);
  CHECK(o.compare(mono({1, 1, 0}), mono({1, 0, 2})) > 0);
}

TEST_CASE("orders are multiplicative total orders") {
  std::vector<Monomial> mons;
  for (int d = 0; d <= 3; ++d)
    for (const Monomial& m : monomials_of_degree(3, d, MonomialOrder::grevlex()))
      mons.push_back(m);
  for (MonomialOrder o : {MonomialOrder::grevlex(), MonomialOrder::lex(),
                          MonomialOrder::elim(1)}) {
    for (const Monomial& a : mons)
      for (const Monomial& b : mons) {
        const int ab = o.compare(a, b);
        CHECK(ab == -o.compare(b, a));
        if (a == b) CHECK(ab == 0);
        if (ab == 0) CHECK(a == b);
        for (const Monomial& c : mons) {
          if (c.deg() + a.deg() > 6) continue;
          // multiplying by c preserves the comparison
          CHECK(o.compare(a.times(c), b.times(c)) == ab);
          if (ab > 0 && o.compare(b, c) > 0) CHECK(o.compare(a, c) > 0);
        }
      }
  }
}

TEST_CASE("monomial enumeration") {
  auto v = monomials_of_degree(3, 4, MonomialOrder::grevlex());
  CHECK(v.size() == 15);
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    CHECK(MonomialOrder::grevlex().compare(v[i], v[i + 1]) > 0);
  CHECK(monomials_of_degree(4, 2, MonomialOrder::lex()).size() == 10);
}

TEST_CASE("monomial divisibility") {
  Monomial a = mono({1, 2, 0});
  Monomial b = mono({2, 2, 1});
  CHECK(a.divides(b));
  CHECK_FALSE(b.divides(a));
  CHECK(a.divide_into(b) == mono({1, 0, 1}));
  CHECK(a.lcm_with(mono({0, 3, 1})) == mono({1, 3, 1}));
  CHECK(a.gcd_with(mono({0, 3, 1})) == mono({0, 2, 0}));
  CHECK(mono({1, 0, 0}).coprime_with(mono({0, 1, 1})));
}

// ===== polynomials =====

namespace {

template <class F>
Polynomial<F> random_poly(const RingPtr<F>& r, std::mt19937_64& rng) {
  std::vector<typename Polynomial<F>::Term> terms;
  const int nt = static_cast<int>(rng() % 5);
  for (int t = 0; t < nt; ++t) {
    std::vector<int> e(r->nvars);
    for (int& x : e) x = static_cast<int>(rng() % 3);
    long long c = static_cast<long long>(rng() % 19) - 9;
    terms.push_back({Monomial::from_exponents(e), r->field.from_int(c)});
  }
  return Polynomial<F>::from_terms(r, std::move(terms));
}

template <class F>
void ring_axioms(const F& field) {
  auto r = make_ring(field, standard_names("x", 3));
  std::mt19937_64 rng(42);
  for (int i = 0; i < 1000; ++i) {
    auto a = random_poly(r, rng);
    auto b = random_poly(r, rng);
    auto c = random_poly(r, rng);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a - a == Polynomial<F>::zero(r));
    CHECK(a + b == b + a);
  }
}

}  // namespace

TEST_CASE("polynomial ring axioms over a prime field") { ring_axioms(PrimeField(32003)); }
TEST_CASE("polynomial ring axioms over the rationals") { ring_axioms(RationalField{}); }

TEST_CASE("polynomial basics") {
  PrimeField k(101);
  auto r = make_ring(k, standard_names("x", 3));
  auto x0 = Polynomial<PrimeField>::variable(r, 0);
  auto x1 = Polynomial<PrimeField>::variable(r, 1);
  auto p = (x0 + x1) * (x0 + x1);
  CHECK(p.num_terms() == 3);
  CHECK(p.degree() == 2);
  CHECK(p.is_homogeneous());
  CHECK(p.leading_monomial() == mono({2, 0, 0}));
  auto d = p.derivative(1);
  CHECK(d == x0.scaled(k.from_int(2)) + x1.scaled(k.from_int(2)));
  CHECK(p.evaluate({k.from_int(2), k.from_int(3), k.zero()}) == k.from_int(25));
}

TEST_CASE("substitution") {
  PrimeField k(101);
  auto r = make_ring(k, standard_names("x", 2));
  auto s = make_ring(k, standard_names("y", 2));
  auto x0 = Polynomial<PrimeField>::variable(r, 0);
  auto x1 = Polynomial<PrimeField>::variable(r, 1);
  auto y0 = Polynomial<PrimeField>::variable(s, 0);
  auto y1 = Polynomial<PrimeField>::variable(s, 1);
  auto p = x0 * x0 - x1 * x1;
  auto q = p.substitute({y0 + y1, y0 - y1});
  // (y0+y1)^2 - (y0-y1)^2 = 4 y0 y1
  CHECK(q == (y0 * y1).scaled(k.from_int(4)));
}

// ===== parsing and printing =====

TEST_CASE("parser round trip") {
  PrimeField k(32003);
  auto r = make_ring(k, {"x0", "x1", "x2"});
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    auto p = random_poly(r, rng);
    auto q = parse_polynomial(r, print_polynomial(p));
    CHECK(p == q);
  }
  auto p = parse_polynomial(r, "x0^2*x1 - 3*x2^3 + 1");
  CHECK(p.num_terms() == 3);
  CHECK(p.degree() == 3);
}

TEST_CASE("parser errors carry positions") {
  PrimeField k(101);
  auto r = make_ring(k, {"x0", "x1"});
  try {
    parse_polynomial(r, "x0 + y1");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("unknown variable") != std::string::npos);
  }
  try {
    parse_polynomial(r, "2x0");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("missing '*'") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_polynomial(r, "x0 +* x1"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(r, "x0^"), ParseError);
  try {
    parse_polynomial(r, "x0 + y1");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.column == 6);
  }
}

TEST_CASE("ideal file round trip") {
  PrimeField k(32003);
  auto r = make_ring(k, {"x0", "x1", "x2", "x3"});
  auto gens = std::vector<Polynomial<PrimeField>>{
      parse_polynomial(r, "x0*x2 - x1^2"),
      parse_polynomial(r, "x0*x3 - x1*x2"),
      parse_polynomial(r, "x1*x3 - x2^2"),
  };
  auto ideal = make_ideal(r, gens);
  std::ostringstream os;
  write_ideal(os, ideal);
  std::istringstream is(os.str());
  IdealVariant v = read_ideal(is);
  auto& back = std::get<Ideal<PrimeField>>(v);
  REQUIRE(back.gens.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(print_polynomial(back.gens[i]) == print_polynomial(gens[i]));
}

TEST_CASE("rational ideal file round trip") {
  RationalField q;
  auto r = make_ring(q, {"x", "y"});
  auto ideal = make_ideal(r, {parse_polynomial(r, "x^2 - 2*y^2 + 7")});
  std::ostringstream os;
  write_ideal(os, ideal);
  std::istringstream is(os.str());
  IdealVariant v = read_ideal(is);
  CHECK(std::get<Ideal<RationalField>>(v).gens.size() == 1);
}

TEST_CASE("matrix file round trip") {
  PrimeField k(101);
  auto r = make_ring(k, standard_names("x", 4));
  PolyMatrix<PrimeField> m;
  m.ring = r;
  m.rows = 2;
  m.cols = 3;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j)
      m.entries.push_back(Polynomial<PrimeField>::variable(r, i + j));
  std::ostringstream os;
  write_matrix(os, m);
  std::istringstream is(os.str());
  MatrixVariant v = read_matrix(is);
  auto& back = std::get<PolyMatrix<PrimeField>>(v);
  CHECK(back.rows == 2);
  CHECK(back.cols == 3);
  CHECK(back.at(1, 2) == Polynomial<PrimeField>::variable(back.ring, 3));
}

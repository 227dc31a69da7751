#ifndef CHORDAL_IO_HPP
#define CHORDAL_IO_HPP

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "chordal/ideal.hpp"

namespace chordal {

// ===== polynomial text grammar =====
//
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := INT | NAME ['^' INT]
//
// Whitespace is insignificant, '#' starts a comment running to end of line,
// juxtaposition is not multiplication (write x0*x1, never x0x1).

namespace detail {

struct Token {
  enum Kind { Int, Name, Plus, Minus, Star, Caret, End } kind;
  std::string text;
  mpz_class value;  // for Int
  int line = 1;
  int column = 1;
};

std::vector<Token> tokenize(const std::string& text, int line_offset = 0);

}  // namespace detail

template <class F>
Polynomial<F> parse_polynomial(const RingPtr<F>& ring, const std::string& text,
                               int line_offset = 0) {
  using P = Polynomial<F>;
  using Term = typename P::Term;
  std::vector<detail::Token> toks = detail::tokenize(text, line_offset);
  std::size_t pos = 0;
  auto cur = [&]() -> const detail::Token& { return toks[pos]; };
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError(msg, cur().line, cur().column);
  };

  std::vector<Term> terms;
  if (cur().kind == detail::Token::End) return P::zero(ring);

  bool first = true;
  while (true) {
    bool negate = false;
    if (cur().kind == detail::Token::Plus || cur().kind == detail::Token::Minus) {
      negate = cur().kind == detail::Token::Minus;
      ++pos;
    } else if (!first) {
      throw fail("expected '+' or '-' between terms");
    }
    first = false;

    // One term: factors joined by '*'.
    mpz_class coef = 1;
    Monomial mono = Monomial::one(ring->nvars);
    bool expect_factor = true;
    while (expect_factor) {
      if (cur().kind == detail::Token::Int) {
        coef *= cur().value;
        ++pos;
      } else if (cur().kind == detail::Token::Name) {
        int v = ring->var_index(cur().text);
        if (v < 0) throw fail("unknown variable '" + cur().text + "'");
        int e = 1;
        ++pos;
        if (cur().kind == detail::Token::Caret) {
          ++pos;
          if (cur().kind != detail::Token::Int) throw fail("expected integer exponent after '^'");
          if (cur().value < 0 || cur().value > 255) throw fail("exponent out of range");
          e = static_cast<int>(cur().value.get_si());
          ++pos;
        }
        mono.set(v, mono[v] + e);
      } else {
        throw fail("expected a coefficient or a variable");
      }
      if (cur().kind == detail::Token::Star) {
        ++pos;
        continue;
      }
      if (cur().kind == detail::Token::Int || cur().kind == detail::Token::Name)
        throw fail("missing '*' between factors");
      expect_factor = false;
    }

    if (negate) coef = -coef;
    typename F::Elem c = ring->field.from_mpz(coef);
    terms.push_back({mono, c});

    if (cur().kind == detail::Token::End) break;
  }
  return P::from_terms(ring, std::move(terms));
}

template <class F>
std::string print_monomial(const Ring<F>& ring, const Monomial& m) {
  std::string out;
  for (int i = 0; i < ring.nvars; ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += ring.names[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

template <class F>
std::string print_polynomial(const Polynomial<F>& p) {
  if (p.is_zero()) return "0";
  const Ring<F>& ring = *p.ring();
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    std::string c = ring.field.to_string(t.coef);
    bool neg = !c.empty() && c[0] == '-';
    if (neg) c = c.substr(1);
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::string m = print_monomial(ring, t.mono);
    if (m.empty()) {
      out += c;
    } else if (c == "1") {
      out += m;
    } else {
      out += c + "*" + m;
    }
  }
  return out;
}

template <class F>
std::ostream& operator<<(std::ostream& os, const Polynomial<F>& p) {
  return os << print_polynomial(p);
}

// ===== ideal files =====
//
//   ring <characteristic> <nvars>
//   <nvars variable names>
//   one polynomial per following non-blank line

using IdealVariant = std::variant<Ideal<PrimeField>, Ideal<RationalField>>;

IdealVariant read_ideal(std::istream& in,
                        MonomialOrder order = MonomialOrder::grevlex());
IdealVariant read_ideal_file(const std::string& path,
                             MonomialOrder order = MonomialOrder::grevlex());

template <class F>
void write_ideal(std::ostream& out, const Ideal<F>& ideal) {
  const Ring<F>& r = *ideal.ring;
  out << "ring " << r.field.characteristic() << " " << r.nvars << "\n";
  for (int i = 0; i < r.nvars; ++i) out << (i ? " " : "") << r.names[i];
  out << "\n";
  for (const auto& g : ideal.gens) out << print_polynomial(g) << "\n";
}

// ===== matrix files =====
//
//   ring <characteristic> <nvars>
//   <nvars variable names>
//   matrix <rows> <cols>
//   rows*cols polynomials, row-major, one per line

template <class F>
struct PolyMatrix {
  RingPtr<F> ring;
  int rows = 0;
  int cols = 0;
  std::vector<Polynomial<F>> entries;  // row-major

  const Polynomial<F>& at(int i, int j) const { return entries[i * cols + j]; }
};

using MatrixVariant = std::variant<PolyMatrix<PrimeField>, PolyMatrix<RationalField>>;

MatrixVariant read_matrix(std::istream& in,
                          MonomialOrder order = MonomialOrder::grevlex());
MatrixVariant read_matrix_file(const std::string& path,
                               MonomialOrder order = MonomialOrder::grevlex());

template <class F>
void write_matrix(std::ostream& out, const PolyMatrix<F>& m) {
  const Ring<F>& r = *m.ring;
  out << "ring " << r.field.characteristic() << " " << r.nvars << "\n";
  for (int i = 0; i < r.nvars; ++i) out << (i ? " " : "") << r.names[i];
  out << "\n";
  out << "matrix " << m.rows << " " << m.cols << "\n";
  for (const auto& e : m.entries) out << print_polynomial(e) << "\n";
}

}  // namespace chordal

#endif

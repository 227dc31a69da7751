#include "chordal/monomial.hpp"

#include <algorithm>

namespace chordal {

namespace {

int cmp_grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
  int da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  // Equal degree: the monomial with the smaller exponent on the last
  // differing variable is the larger one.
  for (int i = hi - 1; i >= lo; --i) {
    int d = a[i] - b[i];
    if (d != 0) return d > 0 ? -1 : 1;
  }
  return 0;
}

int cmp_lex(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < a.nvars(); ++i) {
    int d = a[i] - b[i];
    if (d != 0) return d > 0 ? 1 : -1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind) {
    case OrderKind::GrevLex:
      return cmp_grevlex_range(a, b, 0, a.nvars());
    case OrderKind::Lex:
      return cmp_lex(a, b);
    case OrderKind::Elim: {
      int c = cmp_grevlex_range(a, b, 0, block);
      if (c != 0) return c;
      return cmp_grevlex_range(a, b, block, a.nvars());
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind) {
    case OrderKind::GrevLex:
      return "grevlex";
    case OrderKind::Lex:
      return "lex";
    case OrderKind::Elim:
      return "elim(" + std::to_string(block) + ")";
  }
  return "?";
}

namespace {

void enumerate(int nvars, int var, int rem, std::vector<int>& exps,
               std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    exps[var] = rem;
    out.push_back(Monomial::from_exponents(exps));
    return;
  }
  for (int e = rem; e >= 0; --e) {
    exps[var] = e;
    enumerate(nvars, var + 1, rem - e, exps, out);
  }
  exps[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int m,
                                          const MonomialOrder& order) {
  std::vector<Monomial> out;
  if (m < 0) return out;
  if (nvars == 0) {
    if (m == 0) out.push_back(Monomial::one(0));
    return out;
  }
  std::vector<int> exps(nvars, 0);
  enumerate(nvars, 0, m, exps, out);
  std::sort(out.begin(), out.end(), [&](const Monomial& x, const Monomial& y) {
    return order.compare(x, y) > 0;
  });
  return out;
}

}  // namespace chordal

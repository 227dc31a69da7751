#ifndef CHORDAL_GROEBNER_HPP
#define CHORDAL_GROEBNER_HPP

#include <cstdint>
#include <set>
#include <unordered_set>

#include "chordal/ideal.hpp"

namespace chordal {

// A reduced Groebner basis: monic elements, no leading monomial divides
// another, tails fully reduced, sorted ascending by leading monomial.
// complete_through == -1 means a full basis; otherwise the basis is valid for
// all computations in degrees <= complete_through (homogeneous input).
template <class F>
struct GroebnerBasis {
  RingPtr<F> ring;
  std::vector<Polynomial<F>> elems;
  int complete_through = -1;

  bool is_complete() const { return complete_through < 0; }
  int min_generator_degree() const {
    int d = -1;
    for (const auto& g : elems) {
      int e = g.leading_monomial().deg();
      if (d < 0 || e < d) d = e;
    }
    return d;
  }
};

struct BuchbergerOptions {
  int degree_cap = 12;
  // When true, stop quietly at the cap and mark the basis as truncated; when
  // false, exceeding the cap is a hard error.
  bool truncate = false;
};

template <class F>
std::vector<Monomial> leading_monomials(const GroebnerBasis<F>& gb) {
  std::vector<Monomial> out;
  out.reserve(gb.elems.size());
  for (const auto& g : gb.elems) out.push_back(g.leading_monomial());
  return out;
}

namespace detail {

template <class F, class Chooser>
Polynomial<F> reduce_full(const RingPtr<F>& ring,
                          const std::vector<Polynomial<F>>& reducers,
                          Polynomial<F> h, Chooser&& choose) {
  using P = Polynomial<F>;
  const F& k = ring->field;
  std::vector<typename P::Term> remainder;
  std::vector<std::size_t> candidates;
  while (!h.is_zero()) {
    const Monomial& lm = h.leading_monomial();
    candidates.clear();
    for (std::size_t i = 0; i < reducers.size(); ++i)
      if (reducers[i].leading_monomial().divides(lm)) candidates.push_back(i);
    if (candidates.empty()) {
      remainder.push_back({lm, h.leading_coeff()});
      h = h.drop_leading();
    } else {
      const P& g = reducers[choose(candidates)];
      Monomial q = g.leading_monomial().divide_into(lm);
      typename F::Elem c = k.div(h.leading_coeff(), g.leading_coeff());
      h = h.sub_scaled(g, c, q);
    }
  }
  return P::from_terms(ring, std::move(remainder));
}

template <class F>
Polynomial<F> reduce_full(const RingPtr<F>& ring,
                          const std::vector<Polynomial<F>>& reducers,
                          Polynomial<F> h) {
  return reduce_full(ring, reducers, std::move(h),
                     [](const std::vector<std::size_t>& c) { return c[0]; });
}

}  // namespace detail

// Reduction to normal form. The chooser picks which of the eligible reducers
// to apply: chooser(candidates) -> index into candidates. Every choice yields
// the same normal form; tests exercise this confluence.
template <class F, class Chooser>
Polynomial<F> normal_form(const GroebnerBasis<F>& gb, const Polynomial<F>& f,
                          Chooser&& choose) {
  Polynomial<F> h = same_ring(f.ring(), gb.ring) ? f : f.convert(gb.ring);
  if (!gb.is_complete() && h.degree() > gb.complete_through)
    throw InvalidArgument("normal form beyond the truncation degree of this basis");
  return detail::reduce_full(gb.ring, gb.elems, std::move(h),
                             std::forward<Chooser>(choose));
}

template <class F>
Polynomial<F> normal_form(const GroebnerBasis<F>& gb, const Polynomial<F>& f) {
  return normal_form(gb, f, [](const std::vector<std::size_t>& c) { return c[0]; });
}

template <class F>
bool contains(const GroebnerBasis<F>& gb, const Polynomial<F>& f) {
  return normal_form(gb, f).is_zero();
}

template <class F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g) {
  if (!same_ring(f.ring(), g.ring()))
    throw RingMismatch("s_polynomial: different rings");
  const F& k = f.ring()->field;
  Monomial L = f.leading_monomial().lcm_with(g.leading_monomial());
  Polynomial<F> a = f.mul_term(f.leading_monomial().divide_into(L), k.inv(f.leading_coeff()));
  Polynomial<F> b = g.mul_term(g.leading_monomial().divide_into(L), k.inv(g.leading_coeff()));
  return a - b;
}

namespace detail {

inline std::uint64_t pair_key(int i, int j) {
  return (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint32_t>(j);
}

}  // namespace detail

template <class F>
GroebnerBasis<F> buchberger(const Ideal<F>& ideal, MonomialOrder order,
                            BuchbergerOptions opts = {}) {
  using P = Polynomial<F>;
  RingPtr<F> ring = with_order(ideal.ring, order);

  GroebnerBasis<F> gb;
  gb.ring = ring;

  std::vector<P> basis;
  auto reduce_vs_basis = [&](P h) {
    return detail::reduce_full(ring, basis, std::move(h));
  };

  struct Pair {
    Monomial lcm;
    int i, j;
  };
  auto pair_less = [ring](const Pair& a, const Pair& b) {
    if (a.lcm.deg() != b.lcm.deg()) return a.lcm.deg() < b.lcm.deg();
    int c = MonomialOrder::lex().compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::set<Pair, decltype(pair_less)> queue(pair_less);
  std::unordered_set<std::uint64_t> pending;

  auto add_pairs = [&](int n) {
    const Monomial& lmn = basis[n].leading_monomial();
    for (int i = 0; i < n; ++i) {
      const Monomial& lmi = basis[i].leading_monomial();
      if (lmi.coprime_with(lmn)) continue;  // product criterion
      Pair p{lmi.lcm_with(lmn), i, n};
      queue.insert(p);
      pending.insert(detail::pair_key(i, n));
    }
  };

  for (const P& g : ideal.gens) {
    P h = same_ring(g.ring(), ring) ? g : g.convert(ring);
    h = reduce_vs_basis(h);
    if (h.is_zero()) continue;
    basis.push_back(h.monic());
    add_pairs(static_cast<int>(basis.size()) - 1);
  }

  while (!queue.empty()) {
    Pair p = *queue.begin();
    if (p.lcm.deg() > opts.degree_cap) {
      if (opts.truncate) {
        gb.complete_through = opts.degree_cap;
        break;
      }
      throw DegreeCapExceeded(opts.degree_cap);
    }
    queue.erase(queue.begin());
    pending.erase(detail::pair_key(p.i, p.j));

    // Chain criterion: skip when some other basis element divides the lcm and
    // both companion pairs have already been considered.
    bool skip = false;
    for (int t = 0; t < static_cast<int>(basis.size()) && !skip; ++t) {
      if (t == p.i || t == p.j) continue;
      if (!basis[t].leading_monomial().divides(p.lcm)) continue;
      if (!pending.count(detail::pair_key(std::min(p.i, t), std::max(p.i, t))) &&
          !pending.count(detail::pair_key(std::min(p.j, t), std::max(p.j, t))))
        skip = true;
    }
    if (skip) continue;

    P s = s_polynomial(basis[p.i], basis[p.j]);
    P h = reduce_vs_basis(s);
    if (h.is_zero()) continue;
    basis.push_back(h.monic());
    add_pairs(static_cast<int>(basis.size()) - 1);
  }

  // Interreduce: minimalize by leading monomials, then tail-reduce.
  std::vector<P> minimal;
  {
    std::vector<std::size_t> idx(basis.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      int c = ring->order.compare(basis[a].leading_monomial(), basis[b].leading_monomial());
      if (c != 0) return c < 0;
      return a < b;
    });
    for (std::size_t t : idx) {
      bool redundant = false;
      for (const P& m : minimal)
        if (m.leading_monomial().divides(basis[t].leading_monomial())) {
          redundant = true;
          break;
        }
      if (!redundant) minimal.push_back(basis[t]);
    }
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<P> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    minimal[i] = detail::reduce_full(ring, others, minimal[i]).monic();
  }
  std::sort(minimal.begin(), minimal.end(), [&](const P& a, const P& b) {
    return ring->order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  gb.elems = std::move(minimal);
  return gb;
}

template <class F>
GroebnerBasis<F> buchberger(const Ideal<F>& ideal, BuchbergerOptions opts = {}) {
  return buchberger(ideal, ideal.ring->order, opts);
}

// Monomials of degree m outside the leading-term ideal, descending under the
// basis order. These represent a basis of (S/I)_m.
template <class F>
std::vector<Monomial> standard_monomials(const GroebnerBasis<F>& gb, int m) {
  if (!gb.is_complete() && m > gb.complete_through)
    throw InvalidArgument("standard monomials beyond the truncation degree");
  std::vector<Monomial> lms = leading_monomials(gb);
  std::vector<Monomial> out;
  for (const Monomial& mono : monomials_of_degree(gb.ring->nvars, m, gb.ring->order)) {
    bool reducible = false;
    for (const Monomial& lm : lms)
      if (lm.divides(mono)) {
        reducible = true;
        break;
      }
    if (!reducible) out.push_back(mono);
  }
  return out;
}

// Generators of I ∩ K[kept variables], returned in that smaller ring
// (grevlex). Uses a block order ranking the dropped variables first.
template <class F>
Ideal<F> eliminate(const Ideal<F>& ideal, const std::vector<int>& keep,
                   int degree_cap = 12) {
  const Ring<F>& R = *ideal.ring;
  std::vector<bool> kept(R.nvars, false);
  for (int v : keep) {
    if (v < 0 || v >= R.nvars) throw InvalidArgument("eliminate: bad variable index");
    if (kept[v]) throw InvalidArgument("eliminate: repeated variable index");
    kept[v] = true;
  }
  std::vector<int> dropped;
  std::vector<int> kept_sorted;
  for (int v = 0; v < R.nvars; ++v) (kept[v] ? kept_sorted : dropped).push_back(v);
  if (kept_sorted.empty()) throw InvalidArgument("eliminate: must keep at least one variable");

  RingPtr<F> target = make_ring(R.field, [&] {
    std::vector<std::string> names;
    for (int v : kept_sorted) names.push_back(R.names[v]);
    return names;
  }());
  if (dropped.empty()) {
    std::vector<Polynomial<F>> gens;
    for (const auto& g : ideal.gens) gens.push_back(g.convert(target));
    return make_ideal(target, std::move(gens));
  }

  // Permuted ring: dropped block first.
  std::vector<std::string> perm_names;
  std::vector<int> where(R.nvars);
  {
    int pos = 0;
    for (int v : dropped) {
      perm_names.push_back(R.names[v]);
      where[v] = pos++;
    }
    for (int v : kept_sorted) {
      perm_names.push_back(R.names[v]);
      where[v] = pos++;
    }
  }
  RingPtr<F> perm = make_ring(R.field, perm_names,
                              MonomialOrder::elim(static_cast<int>(dropped.size())));
  std::vector<Polynomial<F>> perm_gens;
  for (const auto& g : ideal.gens) perm_gens.push_back(map_variables(g, perm, where));
  GroebnerBasis<F> gb =
      buchberger(make_ideal(perm, std::move(perm_gens)), BuchbergerOptions{degree_cap, false});

  int block = static_cast<int>(dropped.size());
  std::vector<int> down(perm->nvars, -1);
  for (int t = block; t < perm->nvars; ++t) down[t] = t - block;
  std::vector<Polynomial<F>> out;
  for (const auto& g : gb.elems) {
    const Monomial& lm = g.leading_monomial();
    bool free_of_block = true;
    for (int v = 0; v < block; ++v)
      if (lm[v] > 0) free_of_block = false;
    if (free_of_block) out.push_back(map_variables(g, target, down));
  }
  return make_ideal(target, std::move(out));
}

}  // namespace chordal

#endif

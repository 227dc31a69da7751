#include "chordal/genus2.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

#include "chordal/linalg.hpp"
#include "chordal/monomial.hpp"
#include "chordal/polynomial.hpp"

namespace chordal {

namespace {

using Fp = PrimeField;
using Elem = Fp::Elem;
using Poly = Polynomial<Fp>;

Elem rnd(const Fp& k, std::mt19937_64& rng) {
  return k.from_int(static_cast<long long>(rng() % k.characteristic()));
}

// ===== dense univariate arithmetic over F_p (for root extraction) =====

using UPoly = std::vector<Elem>;  // coefficients, low degree first

void utrim(UPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

UPoly umod(const Fp& k, UPoly a, const UPoly& b) {
  utrim(a);
  const Elem lead_inv = k.inv(b.back());
  while (a.size() >= b.size()) {
    const Elem f = k.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = k.sub(a[shift + i], k.mul(f, b[i]));
    utrim(a);
  }
  return a;
}

UPoly umulmod(const Fp& k, const UPoly& a, const UPoly& b, const UPoly& m) {
  if (a.empty() || b.empty()) return {};
  UPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = k.add(c[i + j], k.mul(a[i], b[j]));
  return umod(k, std::move(c), m);
}

UPoly upowmod(const Fp& k, UPoly base, std::uint64_t e, const UPoly& m) {
  UPoly r{1};
  base = umod(k, std::move(base), m);
  while (e) {
    if (e & 1) r = umulmod(k, r, base, m);
    base = umulmod(k, base, base, m);
    e >>= 1;
  }
  return r;
}

UPoly ugcd(const Fp& k, UPoly a, UPoly b) {
  utrim(a);
  utrim(b);
  while (!b.empty()) {
    UPoly r = umod(k, std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {
    const Elem inv = k.inv(a.back());
    for (Elem& c : a) c = k.mul(c, inv);
  }
  return a;
}

// Roots in F_p: strip to the squarefree split part with gcd(f, z^p - z),
// then separate linear factors by equal-degree splitting.
void uroots(const Fp& k, const UPoly& f, std::mt19937_64& rng, std::vector<Elem>& out) {
  UPoly g = f;
  utrim(g);
  if (g.empty()) return;  // identically zero: caller filters
  if (g.size() == 1) return;
  // z^p mod g, minus z
  UPoly xp = upowmod(k, UPoly{0, 1}, k.characteristic(), g);
  if (xp.size() < 2) xp.resize(2, 0);
  xp[1] = k.sub(xp[1], 1);
  UPoly split = ugcd(k, g, xp);
  if (split.empty() || split.size() == 1) return;

  std::vector<UPoly> stack{split};
  while (!stack.empty()) {
    UPoly h = std::move(stack.back());
    stack.pop_back();
    if (h.size() == 2) {  // monic linear: z + h[0]
      out.push_back(k.neg(h[0]));
      continue;
    }
    // (z + a)^((p-1)/2) - 1 separates roots by quadratic character
    while (true) {
      const Elem a = rnd(k, rng);
      UPoly w = upowmod(k, UPoly{a, 1}, (k.characteristic() - 1) / 2, h);
      if (w.empty())
        w = UPoly{k.neg(1)};
      else
        w[0] = k.sub(w[0], 1);
      UPoly d = ugcd(k, h, w);
      if (!d.empty() && d.size() > 1 && d.size() < h.size()) {
        UPoly q = h;
        // h / d via repeated subtraction is overkill; use mod-based division
        // h = d * q exactly, recover q by synthetic division
        UPoly quot(h.size() - d.size() + 1, 0);
        UPoly rem = h;
        const Elem lead_inv = k.inv(d.back());
        while (rem.size() >= d.size()) {
          const Elem f2 = k.mul(rem.back(), lead_inv);
          const std::size_t shift = rem.size() - d.size();
          quot[shift] = f2;
          for (std::size_t i = 0; i < d.size(); ++i)
            rem[shift + i] = k.sub(rem[shift + i], k.mul(f2, d[i]));
          utrim(rem);
        }
        stack.push_back(std::move(d));
        stack.push_back(std::move(quot));
        break;
      }
    }
  }
}

// ===== small dense helpers =====

Elem eval_monomial(const Fp& k, const Monomial& m, const std::vector<Elem>& point) {
  Elem r = 1;
  for (int v = 0; v < m.nvars(); ++v)
    for (int e = 0; e < m[v]; ++e) r = k.mul(r, point[v]);
  return r;
}

// Canonical kernel of the evaluation matrix rows(points) x cols(monomials).
std::vector<Poly> interpolate(const Fp& k, const RingPtr<Fp>& ring,
                              const std::vector<std::vector<Elem>>& points, int degree) {
  std::vector<Monomial> mons = monomials_of_degree(ring->nvars, degree, ring->order);
  SparseMatrix<Fp> m =
      SparseMatrix<Fp>::make(static_cast<int>(points.size()), static_cast<int>(mons.size()));
  for (std::size_t r = 0; r < points.size(); ++r)
    for (std::size_t c = 0; c < mons.size(); ++c) {
      const Elem v = eval_monomial(k, mons[c], points[r]);
      if (v != 0) m.rows[r].emplace_back(static_cast<int>(c), v);
    }
  std::vector<Poly> out;
  for (const auto& vec : kernel_basis(k, m)) {
    std::vector<Poly::Term> terms;
    for (std::size_t c = 0; c < vec.size(); ++c)
      if (vec[c] != 0) terms.push_back({mons[c], vec[c]});
    out.push_back(Poly::from_terms(ring, std::move(terms)));
  }
  return out;
}

struct Attempt {
  bool ok = false;
  Genus2Fixture fix;
};

Attempt build_once(const Fp& k, std::uint64_t seed, const Genus2Options& opts) {
  Attempt res;
  std::mt19937_64 rng(seed);
  const int p_count = opts.points;

  // Four general points: a random invertible map applied to the frame.
  std::vector<std::vector<Elem>> pts;
  {
    Elem m[3][3];
    while (true) {
      for (auto& row : m)
        for (Elem& e : row) e = rnd(k, rng);
      // 3x3 determinant
      Elem det = k.sub(
          k.add(k.mul(m[0][0], k.sub(k.mul(m[1][1], m[2][2]), k.mul(m[1][2], m[2][1]))),
                k.mul(m[0][2], k.sub(k.mul(m[1][0], m[2][1]), k.mul(m[1][1], m[2][0])))),
          k.mul(m[0][1], k.sub(k.mul(m[1][0], m[2][2]), k.mul(m[1][2], m[2][0]))));
      if (det != 0) break;
    }
    for (int j = 0; j < 3; ++j) pts.push_back({m[0][j], m[1][j], m[2][j]});
    pts.push_back({k.add(k.add(m[0][0], m[0][1]), m[0][2]),
                   k.add(k.add(m[1][0], m[1][1]), m[1][2]),
                   k.add(k.add(m[2][0], m[2][1]), m[2][2])});
  }

  RingPtr<Fp> plane = make_ring(k, standard_names("u", 3));
  std::vector<Monomial> quintics = monomials_of_degree(3, 5, plane->order);

  // Quintics double at all four points: one row per partial derivative.
  SparseMatrix<Fp> cond = SparseMatrix<Fp>::make(12, static_cast<int>(quintics.size()));
  for (int q = 0; q < 4; ++q)
    for (int j = 0; j < 3; ++j) {
      auto& row = cond.rows[q * 3 + j];
      for (std::size_t c = 0; c < quintics.size(); ++c) {
        const int e = quintics[c][j];
        if (e == 0) continue;
        Monomial d = quintics[c];
        d.set(j, e - 1);
        const Elem v = k.mul(k.from_int(e), eval_monomial(k, d, pts[q]));
        if (v != 0) row.emplace_back(static_cast<int>(c), v);
      }
    }
  std::vector<std::vector<Elem>> w = kernel_basis(k, cond);
  res.fix.system_dim = static_cast<long long>(w.size());
  if (w.size() != 9) return res;

  // Random member with ordinary nodes.
  std::vector<Elem> f_vec(quintics.size(), 0);
  for (const auto& basis_vec : w) {
    const Elem c = rnd(k, rng);
    for (std::size_t i = 0; i < basis_vec.size(); ++i)
      f_vec[i] = k.add(f_vec[i], k.mul(c, basis_vec[i]));
  }
  std::vector<Poly::Term> f_terms;
  for (std::size_t i = 0; i < quintics.size(); ++i)
    if (f_vec[i] != 0) f_terms.push_back({quintics[i], f_vec[i]});
  if (f_terms.empty()) return res;
  Poly f = Poly::from_terms(plane, std::move(f_terms));

  std::vector<Poly> grad{f.derivative(0), f.derivative(1), f.derivative(2)};
  for (const auto& q : pts) {
    int kappa = 0;
    while (q[kappa] == 0) ++kappa;
    int a = -1, b = -1;
    for (int j = 0; j < 3; ++j)
      if (j != kappa) (a < 0 ? a : b) = j;
    const Elem faa = grad[a].derivative(a).evaluate(q);
    const Elem fab = grad[a].derivative(b).evaluate(q);
    const Elem fbb = grad[b].derivative(b).evaluate(q);
    if (k.sub(k.mul(faa, fbb), k.mul(fab, fab)) == 0) return res;  // not an ordinary node
  }

  // Basis of the embedding system: canonical complement of f inside the space.
  std::vector<std::vector<Elem>> gsys;
  {
    SparseMatrix<Fp> wm = SparseMatrix<Fp>::make(9, static_cast<int>(quintics.size()));
    for (int r = 0; r < 9; ++r)
      for (std::size_t c = 0; c < quintics.size(); ++c)
        if (w[r][c] != 0) wm.rows[r].emplace_back(static_cast<int>(c), w[r][c]);
    RrefResult<Fp> rr = rref(k, wm);
    // coordinates of f in the reduced basis can be read off at the pivots
    int skip = -1;
    for (int r = 0; r < rr.rank && skip < 0; ++r)
      if (f_vec[rr.pivot_cols[r]] != 0) skip = r;
    if (skip < 0) return res;
    for (int r = 0; r < rr.rank; ++r) {
      if (r == skip) continue;
      std::vector<Elem> dense(quintics.size(), 0);
      for (const auto& [c, v] : rr.rows[r]) dense[c] = v;
      gsys.push_back(std::move(dense));
    }
  }
  if (gsys.size() != 8) return res;

  // Smooth rational points on the quintic in the chart u_0 = 1.
  std::vector<std::vector<Elem>> samples;  // plane points
  for (Elem t = 0; t < k.characteristic() && static_cast<int>(samples.size()) < p_count;
       ++t) {
    // univariate in z: f(1, t, z)
    UPoly uni(6, 0);
    for (const auto& term : f.terms()) {
      Elem c = term.coef;
      for (int e = 0; e < term.mono[1]; ++e) c = k.mul(c, t);
      uni[term.mono[2]] = k.add(uni[term.mono[2]], c);
    }
    std::vector<Elem> roots;
    uroots(k, uni, rng, roots);
    std::sort(roots.begin(), roots.end());
    for (const Elem z : roots) {
      if (static_cast<int>(samples.size()) >= p_count) break;
      std::vector<Elem> q{1, t, z};
      bool is_node = false;
      for (const auto& nd : pts) {
        // projective equality via cross products
        if (k.sub(k.mul(q[0], nd[1]), k.mul(q[1], nd[0])) == 0 &&
            k.sub(k.mul(q[0], nd[2]), k.mul(q[2], nd[0])) == 0 &&
            k.sub(k.mul(q[1], nd[2]), k.mul(q[2], nd[1])) == 0)
          is_node = true;
      }
      if (is_node) continue;
      if (grad[0].evaluate(q) == 0 && grad[1].evaluate(q) == 0 && grad[2].evaluate(q) == 0)
        continue;  // singular point: not usable
      samples.push_back(std::move(q));
    }
  }
  if (static_cast<int>(samples.size()) < p_count) return res;

  // Images in P^7 under the embedding system.
  std::vector<std::vector<Elem>> images;
  images.reserve(samples.size());
  for (const auto& q : samples) {
    std::vector<Elem> img(8, 0);
    bool nonzero = false;
    for (int g = 0; g < 8; ++g) {
      Elem v = 0;
      for (std::size_t c = 0; c < quintics.size(); ++c)
        if (gsys[g][c] != 0) v = k.add(v, k.mul(gsys[g][c], eval_monomial(k, quintics[c], q)));
      img[g] = v;
      nonzero = nonzero || v != 0;
    }
    if (!nonzero) return res;  // base point slipped through
    images.push_back(std::move(img));
  }

  RingPtr<Fp> amb = make_ring(k, standard_names("x", 8));
  const long long expect[3] = {19, 94, 295};
  std::vector<std::vector<Poly>> pieces;
  for (int d = 2; d <= 4; ++d) {
    std::vector<Poly> piece = interpolate(k, amb, images, d);
    res.fix.kernel_dims.push_back(static_cast<long long>(piece.size()));
    pieces.push_back(std::move(piece));
  }
  for (int i = 0; i < 3; ++i)
    if (res.fix.kernel_dims[i] != expect[i]) return res;

  // The quadrics generate through degree 4: multiply up and compare spans.
  res.fix.span_consistent = true;
  for (int d = 3; d <= 4; ++d) {
    std::vector<Monomial> mons = monomials_of_degree(8, d, amb->order);
    std::unordered_map<Monomial, int, MonomialHash> index;
    for (std::size_t c = 0; c < mons.size(); ++c) index.emplace(mons[c], static_cast<int>(c));
    DenseReducer<Fp> rrd(k);
    long long rank = 0;
    for (const Poly& g : pieces[d - 3])
      for (int v = 0; v < 8; ++v) {
        Poly h = g.mul_term(Monomial::var(8, v), k.one());
        std::vector<Elem> vec(mons.size(), 0);
        for (const auto& t : h.terms()) vec[index.at(t.mono)] = t.coef;
        if (rrd.add(std::move(vec))) ++rank;
      }
    if (rank != static_cast<long long>(pieces[d - 2].size())) res.fix.span_consistent = false;
  }
  if (!res.fix.span_consistent) return res;

  res.fix.curve = make_ideal(amb, pieces[0]);
  res.ok = true;
  return res;
}

}  // namespace

Genus2Fixture genus2_fixture(const Genus2Options& opts) {
  if (opts.p < 101) throw InvalidArgument("fixture needs a prime of at least 101");
  FieldSpec spec{opts.p};
  spec.validate();
  Fp k(opts.p);
  for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
    Attempt a = build_once(k, opts.seed + 0x9e3779b97f4a7c15ULL * attempt, opts);
    if (a.ok) {
      a.fix.p = opts.p;
      a.fix.seed = opts.seed;
      a.fix.attempts = attempt + 1;
      return a.fix;
    }
  }
  throw Error("could not build a smooth genus-2 fixture; try another seed");
}

}  // namespace chordal

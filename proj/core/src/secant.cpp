#include "chordal/secant.hpp"

#include <algorithm>
#include <unordered_map>

#include "chordal/field.hpp"
#include "chordal/hilbert.hpp"

namespace chordal {

namespace {

const char* kGroupPrefixes[] = {"y", "z", "w", "u", "v", "a", "b", "c", "e", "f", "g", "h"};

template <class F>
std::vector<typename F::Elem> coeff_vector(
    const Polynomial<F>& p,
    const std::unordered_map<Monomial, int, MonomialHash>& index, int ncols, const F& k) {
  std::vector<typename F::Elem> v(ncols, k.zero());
  for (const auto& t : p.terms()) v[index.at(t.mono)] = t.coef;
  return v;
}

}  // namespace

template <class F>
SecantResult<F> secant_ideal(const Ideal<F>& curve, int k, const SecantOptions& opts) {
  require_homogeneous(curve, "secant_ideal");
  if (k < 0) throw InvalidArgument("secant index must be nonnegative");
  const RingPtr<F>& small = curve.ring;
  const F& fld = small->field;
  const int n1 = small->nvars;
  const int groups = k + 1;
  if (groups > static_cast<int>(sizeof(kGroupPrefixes) / sizeof(*kGroupPrefixes)))
    throw InvalidArgument("secant index too large");
  if (groups * n1 > kMaxVars)
    throw ResourceLimit("secant construction needs " + std::to_string(groups * n1) +
                        " variables; the limit is " + std::to_string(kMaxVars));

  const int m_max = opts.max_degree >= 0 ? opts.max_degree : k + 3;

  GroebnerBasis<F> gb = buchberger(curve, opts.gb);
  if (!gb.is_complete())
    throw DegreeCapExceeded("secant_ideal needs a complete basis", opts.gb.degree_cap);
  HilbertData hd = hilbert_data(gb, m_max);

  SecantResult<F> out;
  out.k = k;
  out.max_degree = m_max;

  // Hilbert function of the join quotient: (k+1)-fold convolution.
  {
    std::vector<long long> hf(m_max + 1, 0);
    for (int m = 0; m <= m_max; ++m) hf[m] = hd.values.at(m);
    std::vector<long long> conv(hf);
    for (int g = 1; g < groups; ++g) {
      std::vector<long long> next(m_max + 1, 0);
      for (int a = 0; a <= m_max; ++a)
        for (int b = 0; a + b <= m_max; ++b) next[a + b] += conv[a] * hf[b];
      conv = std::move(next);
    }
    for (int m = 0; m <= m_max; ++m) out.quotient_dims[m] = conv[m];
  }

  // Join ring with one variable group per copy and the union basis.
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(groups) * n1);
  for (int g = 0; g < groups; ++g)
    for (int i = 0; i < n1; ++i)
      names.push_back(std::string(kGroupPrefixes[g]) + std::to_string(i));
  RingPtr<F> big = make_ring(fld, names, MonomialOrder::grevlex());

  GroebnerBasis<F> join_gb;
  join_gb.ring = big;
  for (int g = 0; g < groups; ++g) {
    std::vector<int> where(n1);
    for (int i = 0; i < n1; ++i) where[i] = g * n1 + i;
    for (const Polynomial<F>& e : gb.elems)
      join_gb.elems.push_back(map_variables(e, big, where));
  }
  std::sort(join_gb.elems.begin(), join_gb.elems.end(),
            [&](const Polynomial<F>& x, const Polynomial<F>& y) {
              return big->order.compare(x.leading_monomial(), y.leading_monomial()) < 0;
            });

  // linsum[v] = sum of the copies of variable v.
  std::vector<Polynomial<F>> linsum;
  linsum.reserve(n1);
  for (int v = 0; v < n1; ++v) {
    Polynomial<F> s = Polynomial<F>::zero(big);
    for (int g = 0; g < groups; ++g) s = s + Polynomial<F>::variable(big, g * n1 + v);
    linsum.push_back(std::move(s));
  }

  // Degree-by-degree walk: nf[alpha] = NF(x^alpha with each x_v replaced by
  // linsum[v]); alpha is extended one variable at a time.
  std::unordered_map<Monomial, Polynomial<F>, MonomialHash> prev;
  prev.emplace(Monomial::one(n1), Polynomial<F>::constant(big, fld.one()));

  std::vector<Polynomial<F>> prev_piece;  // basis of the previous graded piece
  std::vector<Polynomial<F>> gens;

  for (int m = 1; m <= m_max; ++m) {
    std::vector<Monomial> alphas = monomials_of_degree(n1, m, small->order);
    std::unordered_map<Monomial, Polynomial<F>, MonomialHash> cur;
    cur.reserve(alphas.size());

    std::unordered_map<Monomial, int, MonomialHash> support;
    for (const Monomial& a : alphas) {
      int v = 0;
      while (a[v] == 0) ++v;
      Monomial b = a;
      b.set(v, a[v] - 1);
      Polynomial<F> nf = normal_form(join_gb, prev.at(b) * linsum[v]);
      for (const auto& t : nf.terms()) support.emplace(t.mono, 0);
      cur.emplace(a, std::move(nf));
    }
    int nrows = 0;
    for (auto& [mon, id] : support) id = nrows++;

    SparseMatrix<F> mat = SparseMatrix<F>::make(nrows, static_cast<int>(alphas.size()));
    for (int col = 0; col < static_cast<int>(alphas.size()); ++col)
      for (const auto& t : cur.at(alphas[col]).terms())
        mat.rows[support.at(t.mono)].emplace_back(col, t.coef);
    for (auto& row : mat.rows)
      std::sort(row.begin(), row.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });

    std::vector<std::vector<typename F::Elem>> kernel = kernel_basis(fld, mat, opts.limits);
    out.piece_dims[m] = static_cast<long long>(kernel.size());

    std::vector<Polynomial<F>> piece;
    piece.reserve(kernel.size());
    for (const auto& vec : kernel) {
      std::vector<typename Polynomial<F>::Term> terms;
      for (std::size_t c = 0; c < vec.size(); ++c)
        if (!fld.is_zero(vec[c])) terms.push_back({alphas[c], vec[c]});
      piece.push_back(Polynomial<F>::from_terms(small, std::move(terms)));
    }

    // Generators beyond S_1 * (previous piece).
    std::unordered_map<Monomial, int, MonomialHash> index;
    index.reserve(alphas.size());
    for (int c = 0; c < static_cast<int>(alphas.size()); ++c) index.emplace(alphas[c], c);
    DenseReducer<F> old_space(fld);
    for (const Polynomial<F>& g : prev_piece)
      for (int v = 0; v < n1; ++v)
        old_space.add(coeff_vector(g.mul_term(Monomial::var(n1, v), fld.one()), index,
                                   static_cast<int>(alphas.size()), fld));
    long long fresh = 0;
    for (const Polynomial<F>& g : piece)
      if (old_space.add(coeff_vector(g, index, static_cast<int>(alphas.size()), fld))) {
        ++fresh;
        gens.push_back(g);
      }
    out.new_generators[m] = fresh;

    prev = std::move(cur);
    prev_piece = std::move(piece);
  }

  out.ideal = make_ideal(small, std::move(gens));
  return out;
}

template <class F>
Ideal<F> secant_by_elimination(const Ideal<F>& curve, int k, int degree_cap) {
  require_homogeneous(curve, "secant_by_elimination");
  if (k < 0) throw InvalidArgument("secant index must be nonnegative");
  const RingPtr<F>& small = curve.ring;
  const F& fld = small->field;
  const int n1 = small->nvars;
  const int groups = k + 1;
  if ((groups + 1) * n1 > kMaxVars)
    throw ResourceLimit("elimination ring needs " + std::to_string((groups + 1) * n1) +
                        " variables; the limit is " + std::to_string(kMaxVars));

  std::vector<std::string> names = small->names;
  for (int g = 0; g < groups; ++g)
    for (int i = 0; i < n1; ++i)
      names.push_back(std::string(kGroupPrefixes[g]) + std::to_string(i));
  RingPtr<F> big = make_ring(fld, names, MonomialOrder::grevlex());

  std::vector<Polynomial<F>> gens;
  for (int g = 0; g < groups; ++g) {
    std::vector<int> where(n1);
    for (int i = 0; i < n1; ++i) where[i] = (g + 1) * n1 + i;
    for (const Polynomial<F>& e : curve.gens) gens.push_back(map_variables(e, big, where));
  }
  for (int i = 0; i < n1; ++i) {
    Polynomial<F> rel = Polynomial<F>::variable(big, i);
    for (int g = 0; g < groups; ++g)
      rel = rel - Polynomial<F>::variable(big, (g + 1) * n1 + i);
    gens.push_back(std::move(rel));
  }

  std::vector<int> keep(n1);
  for (int i = 0; i < n1; ++i) keep[i] = i;
  Ideal<F> elim = eliminate(make_ideal(big, std::move(gens)), keep, degree_cap);

  // Move into the original ring object.
  std::vector<int> where(n1);
  for (int i = 0; i < n1; ++i) where[i] = i;
  std::vector<Polynomial<F>> out;
  for (const Polynomial<F>& e : elim.gens) out.push_back(map_variables(e, small, where));
  return make_ideal(small, std::move(out));
}

template SecantResult<PrimeField> secant_ideal(const Ideal<PrimeField>&, int,
                                               const SecantOptions&);
template SecantResult<RationalField> secant_ideal(const Ideal<RationalField>&, int,
                                                  const SecantOptions&);
template Ideal<PrimeField> secant_by_elimination(const Ideal<PrimeField>&, int, int);
template Ideal<RationalField> secant_by_elimination(const Ideal<RationalField>&, int, int);

}  // namespace chordal

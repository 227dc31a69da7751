#include "chordal/betti.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <sstream>
#include <type_traits>
#include <unordered_map>

#include "chordal/field.hpp"
#include "chordal/koszul.hpp"

namespace chordal {

namespace {

template <class F>
typename F::Elem random_scalar(const F& k, std::mt19937_64& rng) {
  if constexpr (std::is_same_v<F, RationalField>) {
    (void)k;
    return mpq_class(static_cast<long>(rng() % 201) - 100);
  } else {
    return k.from_int(static_cast<long long>(rng() % k.characteristic()));
  }
}

// One hyperplane section x_{n-1} = -(c_0 x_0 + ... + c_{n-2} x_{n-2}).
// The substitution is a nonzerodivisor on the quotient iff the Hilbert
// series numerator is unchanged, which we check exactly.
template <class F>
std::optional<GroebnerBasis<F>> try_section(const GroebnerBasis<F>& gb,
                                            const std::vector<long long>& num_before,
                                            std::mt19937_64& rng,
                                            const BuchbergerOptions& gb_opts) {
  const RingPtr<F>& ring = gb.ring;
  const F& k = ring->field;
  const int n = ring->nvars;
  if (n <= 1) return std::nullopt;

  std::vector<std::string> names(ring->names.begin(), ring->names.end() - 1);
  RingPtr<F> small = make_ring(ring->field, names, MonomialOrder::grevlex());

  std::vector<Polynomial<F>> images;
  images.reserve(n);
  for (int i = 0; i + 1 < n; ++i) images.push_back(Polynomial<F>::variable(small, i));
  Polynomial<F> last = Polynomial<F>::zero(small);
  for (int i = 0; i + 1 < n; ++i) {
    auto c = random_scalar(k, rng);
    if (k.is_zero(c)) continue;
    last = last + Polynomial<F>::variable(small, i).scaled(k.neg(c));
  }
  images.push_back(last);

  std::vector<Polynomial<F>> gens;
  gens.reserve(gb.elems.size());
  for (const Polynomial<F>& g : gb.elems) {
    Polynomial<F> h = g.substitute(images);
    if (!h.is_zero()) gens.push_back(std::move(h));
  }

  GroebnerBasis<F> cut = buchberger(make_ideal(small, gens), gb_opts);
  if (!cut.is_complete()) return std::nullopt;
  std::vector<long long> num_after = hilbert_numerator(leading_monomials(cut), n - 1);
  if (num_after != num_before) return std::nullopt;
  return cut;
}

// Standard monomials of one degree with positional lookup.
template <class F>
struct DegBasis {
  std::vector<Monomial> mons;
  std::unordered_map<Monomial, int, MonomialHash> index;
};

template <class F>
DegBasis<F> degree_basis(const GroebnerBasis<F>& gb, int d) {
  DegBasis<F> b;
  b.mons = standard_monomials(gb, d);
  b.index.reserve(b.mons.size());
  for (int i = 0; i < static_cast<int>(b.mons.size()); ++i) b.index.emplace(b.mons[i], i);
  return b;
}

// Column v of the multiplication-by-x_v map A_d -> A_{d+1} for each standard
// monomial, as (row, coeff) pairs in the degree-(d+1) basis.
template <class F>
using MultColumn = std::vector<std::pair<int, typename F::Elem>>;

template <class F>
std::vector<MultColumn<F>> mult_table(const GroebnerBasis<F>& gb, const DegBasis<F>& from,
                                      const DegBasis<F>& to, int v) {
  std::vector<MultColumn<F>> cols(from.mons.size());
  for (std::size_t b = 0; b < from.mons.size(); ++b) {
    Monomial m = from.mons[b].times(Monomial::var(gb.ring->nvars, v));
    Polynomial<F> nf =
        normal_form(gb, Polynomial<F>::term(gb.ring, m, gb.ring->field.one()));
    MultColumn<F>& col = cols[b];
    for (const auto& t : nf.terms()) {
      auto it = to.index.find(t.mono);
      if (it == to.index.end())
        throw Error("multiplication table hit a non-standard monomial");
      col.emplace_back(it->second, t.coef);
    }
  }
  return cols;
}

template <class F>
struct KoszulData {
  GroebnerBasis<F> gb;
  std::vector<DegBasis<F>> bases;                     // degree -> basis of A_d
  std::vector<std::vector<std::vector<MultColumn<F>>>> mult;  // [d][v] -> columns
  std::map<int, std::vector<std::vector<int>>> subsets;       // i -> subsets of vars

  const std::vector<std::vector<int>>& subs(int i) {
    auto it = subsets.find(i);
    if (it == subsets.end())
      it = subsets.emplace(i, subsets_of_size(gb.ring->nvars, i)).first;
    return it->second;
  }
};

// Rank of d_i : Wedge^i V (x) A_{j-i} -> Wedge^{i-1} V (x) A_{j-i+1}.
template <class F>
long long block_rank(KoszulData<F>& kd, int i, int j, const LinalgLimits& limits) {
  const int n = kd.gb.ring->nvars;
  const int d = j - i;
  if (i < 1 || i > n || d < 0) return 0;
  const auto& src = kd.bases[d];
  const auto& dst = kd.bases[d + 1];
  if (src.mons.empty() || dst.mons.empty()) return 0;

  const auto& srcsubs = kd.subs(i);
  const long long dst_block = static_cast<long long>(dst.mons.size());

  SparseMatrix<F> A = SparseMatrix<F>::make(
      static_cast<int>(srcsubs.size() * src.mons.size()),
      static_cast<int>(binomial(n, i - 1) * dst_block));
  const F& k = kd.gb.ring->field;

  int row = 0;
  for (const auto& S : srcsubs) {
    for (std::size_t b = 0; b < src.mons.size(); ++b, ++row) {
      auto& out = A.rows[row];
      for (std::size_t pos = 0; pos < S.size(); ++pos) {
        const int v = S[pos];
        std::vector<int> T;
        T.reserve(S.size() - 1);
        for (std::size_t q = 0; q < S.size(); ++q)
          if (q != pos) T.push_back(S[q]);
        const long long base = subset_rank(T, n) * dst_block;
        const bool negate = (pos % 2 == 1);
        for (const auto& [r, c] : kd.mult[d][v][b])
          out.emplace_back(static_cast<int>(base + r), negate ? k.neg(c) : c);
      }
      std::sort(out.begin(), out.end(),
                [](const auto& a, const auto& b2) { return a.first < b2.first; });
    }
  }
  return sparse_rank(k, std::move(A), limits);
}

}  // namespace

template <class F>
BettiTable betti_table(const Ideal<F>& ideal, const BettiOptions& opts) {
  require_homogeneous(ideal, "betti_table");
  BettiTable out;
  out.nvars = ideal.ring->nvars;

  GroebnerBasis<F> gb = buchberger(ideal, opts.gb);
  if (!gb.is_complete())
    throw DegreeCapExceeded("betti_table needs a complete basis", opts.gb.degree_cap);
  HilbertData hd = hilbert_data(gb);
  out.dim_affine = hd.dim_affine;
  out.codim = out.nvars - hd.dim_affine;
  out.degree = hd.degree;
  out.numerator = hd.numerator;

  // S/I = 0: empty resolution.
  if (!gb.elems.empty() && gb.elems.front().degree() == 0) {
    out.complete = true;
    return out;
  }

  // Certified hyperplane sections, one per dimension.
  std::mt19937_64 rng(opts.seed ^ 0x9e3779b97f4a7c15ULL);
  GroebnerBasis<F> cur = gb;
  std::vector<long long> num = hd.numerator;
  for (int step = 0; step < hd.dim_affine; ++step) {
    std::optional<GroebnerBasis<F>> next;
    for (int attempt = 0; attempt < 40 && !next; ++attempt)
      next = try_section(cur, num, rng, opts.gb);
    if (!next) break;
    cur = std::move(*next);
    ++out.reduction_steps;
  }
  const bool artinian = (out.reduction_steps == hd.dim_affine);

  // Row range and the degrees of the quotient we need.
  int top_row;
  if (artinian) {
    HilbertData hred = hilbert_data_from_numerator(num, cur.ring->nvars,
                                                   static_cast<int>(num.size()) + 2);
    int natural_top = 0;
    for (const auto& [m, v] : hred.values)
      if (v > 0) natural_top = std::max(natural_top, m);
    out.complete = (opts.max_row < 0 || opts.max_row >= natural_top);
    top_row = opts.max_row >= 0 ? std::min(natural_top, opts.max_row) : natural_top;
  } else {
    top_row = opts.max_row >= 0 ? opts.max_row : 5;
    out.complete = false;
  }

  KoszulData<F> kd{std::move(cur), {}, {}, {}};
  const int n = kd.gb.ring->nvars;
  const int i_max = opts.max_i >= 0 ? std::min(opts.max_i, n) : n;
  if (opts.max_i >= 0 && opts.max_i < n) out.complete = false;

  kd.bases.reserve(top_row + 2);
  for (int d = 0; d <= top_row + 1; ++d) kd.bases.push_back(degree_basis<F>(kd.gb, d));
  kd.mult.resize(top_row + 1);
  for (int d = 0; d <= top_row; ++d) {
    kd.mult[d].resize(n);
    for (int v = 0; v < n; ++v)
      kd.mult[d][v] = mult_table<F>(kd.gb, kd.bases[d], kd.bases[d + 1], v);
  }

  std::map<std::pair<int, int>, long long> rank_memo;
  auto rank_at = [&](int i, int j) -> long long {
    if (i < 1 || i > n) return 0;
    int d = j - i;
    if (d < 0 || d > top_row) return 0;
    if (kd.bases[d].mons.empty()) return 0;
    auto it = rank_memo.find({i, j});
    if (it != rank_memo.end()) return it->second;
    long long r = block_rank(kd, i, j, opts.limits);
    rank_memo.emplace(std::make_pair(i, j), r);
    return r;
  };

  for (int i = 0; i <= i_max; ++i) {
    for (int r = 0; r <= top_row; ++r) {
      const int j = i + r;
      const long long dim =
          binomial(n, i) * static_cast<long long>(kd.bases[r].mons.size());
      if (dim == 0) continue;
      long long beta = dim - rank_at(i, j) - rank_at(i + 1, j);
      if (beta < 0) throw Error("negative Betti number; rank computation is inconsistent");
      if (beta > 0) {
        out.entries[{i, j}] = beta;
        out.pd = std::max(out.pd, i);
        out.reg = std::max(out.reg, r);
      }
    }
  }
  return out;
}

template BettiTable betti_table<PrimeField>(const Ideal<PrimeField>&, const BettiOptions&);
template BettiTable betti_table<RationalField>(const Ideal<RationalField>&,
                                               const BettiOptions&);

// ===== table rendering and checks =====

std::string render_betti_text(const BettiTable& t) {
  const int cols = t.pd + 1;
  const int rows = t.reg + 1;
  std::vector<long long> totals(cols, 0);
  for (const auto& [ij, b] : t.entries) totals[ij.first] += b;

  auto cell = [](long long v) { return v == 0 ? std::string("-") : std::to_string(v); };

  std::vector<std::string> labels;
  labels.push_back("");
  labels.push_back("total:");
  for (int r = 0; r < rows; ++r) labels.push_back(std::to_string(r) + ":");
  std::size_t lw = 0;
  for (const auto& s : labels) lw = std::max(lw, s.size());

  std::vector<std::size_t> width(cols, 1);
  for (int i = 0; i < cols; ++i) {
    width[i] = std::max(width[i], std::to_string(i).size());
    width[i] = std::max(width[i], cell(totals[i]).size());
    for (int r = 0; r < rows; ++r)
      width[i] = std::max(width[i], cell(t.at(i, i + r)).size());
  }

  std::ostringstream os;
  auto pad = [&os](const std::string& s, std::size_t w) {
    for (std::size_t q = s.size(); q < w; ++q) os << ' ';
    os << s;
  };
  pad(labels[0], lw);
  for (int i = 0; i < cols; ++i) {
    os << ' ';
    pad(std::to_string(i), width[i]);
  }
  os << '\n';
  pad(labels[1], lw);
  for (int i = 0; i < cols; ++i) {
    os << ' ';
    pad(cell(totals[i]), width[i]);
  }
  os << '\n';
  for (int r = 0; r < rows; ++r) {
    pad(labels[2 + r], lw);
    for (int i = 0; i < cols; ++i) {
      os << ' ';
      pad(cell(t.at(i, i + r)), width[i]);
    }
    os << '\n';
  }
  if (!t.complete) os << "(rows above " << t.reg << " not computed)\n";
  return os.str();
}

bool euler_matches_numerator(const BettiTable& t) {
  if (!t.complete) return true;  // only meaningful for full tables
  std::map<int, long long> sums;
  for (const auto& [ij, b] : t.entries)
    sums[ij.second] += (ij.first % 2 == 0 ? b : -b);
  for (std::size_t j = 0; j < t.numerator.size(); ++j)
    if (t.numerator[j] != (sums.count(static_cast<int>(j)) ? sums[static_cast<int>(j)] : 0))
      return false;
  for (const auto& [j, s] : sums)
    if ((j >= static_cast<int>(t.numerator.size()) || j < 0) && s != 0) return false;
  return true;
}

bool linearity_through(const BettiTable& t, int gen_degree, int p) {
  for (const auto& [ij, b] : t.entries) {
    const auto [i, j] = ij;
    if (i >= 1 && i <= p && b != 0 && j != i + gen_degree - 1) return false;
  }
  return true;
}

Tristate acm_status(const BettiTable& t) {
  if (!t.complete) return t.pd > t.codim ? Tristate::False : Tristate::Unknown;
  return t.pd == t.codim ? Tristate::True : Tristate::False;
}

}  // namespace chordal

#include "chordal/determinantal.hpp"

#include <algorithm>
#include <sstream>

#include "chordal/field.hpp"
#include "chordal/linalg.hpp"

namespace chordal {

namespace {

template <class F>
LinearFormMatrix<F> swap_to_front(const LinearFormMatrix<F>& a, int r, int c) {
  LinearFormMatrix<F> b = a;
  if (r != 0)
    for (int j = 0; j < a.ncols; ++j)
      std::swap(b.entries[static_cast<std::size_t>(0) * a.ncols + j],
                b.entries[static_cast<std::size_t>(r) * a.ncols + j]);
  if (c != 0)
    for (int i = 0; i < a.nrows; ++i)
      std::swap(b.entries[static_cast<std::size_t>(i) * a.ncols + 0],
                b.entries[static_cast<std::size_t>(i) * a.ncols + c]);
  return b;
}

// Frame of s + t + 1 linear forms: row 0 then column 0 below the corner.
template <class F>
std::vector<Polynomial<F>> frame_forms(const LinearFormMatrix<F>& b) {
  std::vector<Polynomial<F>> out;
  out.reserve(b.nrows + b.ncols - 1);
  for (int j = 0; j < b.ncols; ++j) out.push_back(b.at(0, j));
  for (int i = 1; i < b.nrows; ++i) out.push_back(b.at(i, 0));
  return out;
}

template <class F>
bool forms_independent(const std::vector<Polynomial<F>>& forms) {
  if (forms.empty()) return true;
  const RingPtr<F>& ring = forms.front().ring();
  const F& k = ring->field;
  SparseMatrix<F> m = SparseMatrix<F>::make(static_cast<int>(forms.size()), ring->nvars);
  for (std::size_t r = 0; r < forms.size(); ++r) {
    for (const auto& t : forms[r].terms()) {
      for (int v = 0; v < ring->nvars; ++v)
        if (t.mono[v] == 1) m.rows[r].emplace_back(v, t.coef);
    }
    std::sort(m.rows[r].begin(), m.rows[r].end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
  }
  return sparse_rank(k, std::move(m)) == static_cast<long long>(forms.size());
}

}  // namespace

template <class F>
LinearFormMatrix<F> make_linear_matrix(RingPtr<F> ring, int nrows, int ncols,
                                       std::vector<Polynomial<F>> entries) {
  if (nrows < 1 || ncols < 1) throw InvalidArgument("matrix needs positive dimensions");
  if (entries.size() != static_cast<std::size_t>(nrows) * ncols)
    throw InvalidArgument("matrix entry count does not match its shape");
  for (const Polynomial<F>& e : entries) {
    if (!same_variables(*e.ring(), *ring)) throw RingMismatch("matrix entry in a foreign ring");
    if (!e.is_zero() && !(e.is_homogeneous() && e.degree() == 1))
      throw InvalidArgument("matrix entries must be linear forms");
  }
  LinearFormMatrix<F> m;
  m.ring = std::move(ring);
  m.nrows = nrows;
  m.ncols = ncols;
  for (Polynomial<F>& e : entries) m.entries.push_back(e.convert(m.ring));
  return m;
}

template <class F>
LinearFormMatrix<F> hankel_matrix(const F& field, int d, int rows) {
  if (d < 1 || d + 1 > kMaxVars) throw InvalidArgument("hankel degree out of range");
  if (rows < 1 || rows > d + 1) throw InvalidArgument("hankel row count out of range");
  const int cols = d + 2 - rows;
  RingPtr<F> ring = make_ring(field, standard_names("x", d + 1));
  std::vector<Polynomial<F>> entries;
  entries.reserve(static_cast<std::size_t>(rows) * cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) entries.push_back(Polynomial<F>::variable(ring, i + j));
  return make_linear_matrix(std::move(ring), rows, cols, std::move(entries));
}

template <class F>
Polynomial<F> minor_det(const LinearFormMatrix<F>& m, const std::vector<int>& rows,
                        const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw InvalidArgument("minor needs square shape");
  for (int r : rows)
    if (r < 0 || r >= m.nrows) throw InvalidArgument("minor row index out of range");
  for (int c : cols)
    if (c < 0 || c >= m.ncols) throw InvalidArgument("minor column index out of range");
  std::map<std::pair<std::vector<int>, std::vector<int>>, Polynomial<F>> memo;
  const F& k = m.ring->field;

  auto rec = [&](auto&& self, const std::vector<int>& r,
                 const std::vector<int>& c) -> Polynomial<F> {
    if (r.empty()) return Polynomial<F>::constant(m.ring, k.one());
    if (r.size() == 1) return m.at(r[0], c[0]);
    auto key = std::make_pair(r, c);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Polynomial<F> det = Polynomial<F>::zero(m.ring);
    std::vector<int> rrest(r.begin() + 1, r.end());
    for (std::size_t p = 0; p < c.size(); ++p) {
      const Polynomial<F>& e = m.at(r[0], c[p]);
      if (e.is_zero()) continue;
      std::vector<int> crest;
      crest.reserve(c.size() - 1);
      for (std::size_t q = 0; q < c.size(); ++q)
        if (q != p) crest.push_back(c[q]);
      Polynomial<F> sub = e * self(self, rrest, crest);
      det = (p % 2 == 0) ? det + sub : det - sub;
    }
    memo.emplace(std::move(key), det);
    return det;
  };
  return rec(rec, rows, cols);
}

template <class F>
Ideal<F> minor_ideal(const LinearFormMatrix<F>& m, int size) {
  if (size < 1 || size > std::min(m.nrows, m.ncols))
    throw InvalidArgument("minor size must be between 1 and the smaller matrix dimension");
  std::vector<Polynomial<F>> gens;
  for (const auto& rows : subsets_of_size(m.nrows, size))
    for (const auto& cols : subsets_of_size(m.ncols, size)) {
      Polynomial<F> det = minor_det(m, rows, cols);
      if (!det.is_zero()) gens.push_back(std::move(det));
    }
  return make_ideal(m.ring, std::move(gens));
}

template <class F>
Ideal<F> rnc_ideal(const F& field, int d) {
  if (d < 2) throw InvalidArgument("rational normal curve needs degree at least 2");
  return minor_ideal(hankel_matrix(field, d, 2), 2);
}

BettiTable en_betti(int a, int b) {
  if (a < 2 || b < a) throw InvalidArgument("en_betti needs 2 <= rows <= cols");
  BettiTable t;
  t.entries[{0, 0}] = 1;
  for (int i = 1; i <= b - a + 1; ++i) {
    const int j = a + i - 1;
    t.entries[{i, j}] = binomial(b, j) * binomial(j - 1, a - 1);
    t.pd = i;
    t.reg = std::max(t.reg, j - i);
  }
  t.codim = b - a + 1;
  t.degree = binomial(b, a - 1);
  t.complete = true;
  t.numerator.assign(b + 1, 0);
  for (const auto& [ij, beta] : t.entries)
    t.numerator[ij.second] += (ij.first % 2 == 0 ? beta : -beta);
  while (!t.numerator.empty() && t.numerator.back() == 0) t.numerator.pop_back();
  return t;
}

// ===== Koszul cycles =====

template <class F>
KoszulChain<F> build_gamma(const LinearFormMatrix<F>& a, int k, int frame_row, int frame_col) {
  const int s = a.nrows - 1;
  const int t = a.ncols - 1;
  if (k < 0 || k + 1 > s || k + 1 > t + 1)
    throw InvalidArgument("cycle parameter k out of range for this matrix shape");
  if (frame_row < 0 || frame_row > s || frame_col < 0 || frame_col > t)
    throw InvalidArgument("frame position out of range");

  LinearFormMatrix<F> b = swap_to_front(a, frame_row, frame_col);
  const F& fld = a.ring->field;

  KoszulChain<F> gamma;
  gamma.ring = a.ring;
  gamma.wedge_size = s + t - 2 * k - 1;
  gamma.frame = frame_forms(b);

  const int base_parity = (t * (k + 1)) % 2;
  for (auto& sigma0 : subsets_of_size(s, k + 1)) {
    std::vector<int> sigma(sigma0);
    for (int& v : sigma) ++v;  // rows 1..s
    for (const auto& tau : subsets_of_size(t + 1, k + 1)) {
      Polynomial<F> det = minor_det(b, sigma, tau);
      if (det.is_zero()) continue;
      int parity = base_parity;
      for (int v : sigma) parity += v;
      for (int v : tau) parity += v;
      if (parity % 2 == 1) det = det.scaled(fld.neg(fld.one()));

      std::vector<bool> removed(s + t + 1, false);
      for (int v : tau) removed[v] = true;
      for (int v : sigma) removed[t + v] = true;
      std::vector<int> wedge;
      wedge.reserve(s + t - 2 * k - 1);
      for (int v = 0; v <= s + t; ++v)
        if (!removed[v]) wedge.push_back(v);
      gamma.add_term(wedge, det);
    }
  }
  return gamma;
}

template <class F>
CycleCertificate verify_cycle(const LinearFormMatrix<F>& a, int k, const CycleOptions& opts) {
  CycleCertificate cert;
  cert.s = a.nrows - 1;
  cert.t = a.ncols - 1;
  cert.k = k;
  cert.position_i = cert.s + cert.t - 2 * k - 1;
  cert.position_j = cert.s + cert.t - k;

  if (k < 0 || k + 2 > std::min(a.nrows, a.ncols) || cert.position_i < 1)
    throw InvalidArgument("no cycle of this index exists for this matrix shape");
  for (int r = 0; r <= cert.s && !cert.frame_found; ++r)
    for (int c = 0; c <= cert.t && !cert.frame_found; ++c)
      if (forms_independent(frame_forms(swap_to_front(a, r, c)))) {
        cert.frame_found = true;
        cert.frame_row = r;
        cert.frame_col = c;
        cert.repositioned = (r != 0 || c != 0);
      }
  if (!cert.frame_found) return cert;

  Ideal<F> ideal = minor_ideal(a, k + 2);
  GroebnerBasis<F> gb = buchberger(ideal, opts.gb);
  cert.hypotheses_ok = !gb.elems.empty() && gb.min_generator_degree() > k + 1;

  KoszulChain<F> gamma = build_gamma(a, k, cert.frame_row, cert.frame_col);
  KoszulChain<F> bd = koszul_boundary(gamma);
  cert.boundary_nonzero = !bd.is_zero();

  cert.coefficients_in_ideal = true;
  for (const auto& [w, c] : bd.comps)
    if (!normal_form(gb, c).is_zero()) cert.coefficients_in_ideal = false;

  // Every boundary coefficient is a signed (k+2)-minor meeting the frame
  // row or column of the repositioned matrix.
  LinearFormMatrix<F> b = swap_to_front(a, cert.frame_row, cert.frame_col);
  std::vector<Polynomial<F>> minors;
  for (const auto& rows : subsets_of_size(a.nrows, k + 2))
    for (const auto& cols : subsets_of_size(a.ncols, k + 2)) {
      if (rows[0] != 0 && cols[0] != 0) continue;
      Polynomial<F> det = minor_det(b, rows, cols);
      if (!det.is_zero()) minors.push_back(std::move(det));
    }
  cert.coefficients_are_minors = cert.boundary_nonzero;
  for (const auto& [w, c] : bd.comps) {
    bool hit = false;
    for (const Polynomial<F>& m : minors)
      if ((c - m).is_zero() || (c + m).is_zero()) {
        hit = true;
        break;
      }
    if (!hit) cert.coefficients_are_minors = false;
  }

  if (opts.compute_betti) {
    BettiOptions bo;
    bo.seed = opts.seed;
    bo.gb = opts.gb;
    bo.limits = opts.limits;
    BettiTable bt = betti_table(ideal, bo);
    cert.betti_value = bt.at(cert.position_i, cert.position_j);
  }
  return cert;
}

std::string render_cycle_text(const CycleCertificate& c) {
  std::ostringstream os;
  os << "matrix: " << (c.s + 1) << " x " << (c.t + 1) << ", k = " << c.k << "\n";
  os << "position: (" << c.position_i << ", " << c.position_j << ")\n";
  if (c.frame_found) {
    os << "frame: row " << c.frame_row << ", column " << c.frame_col
       << (c.repositioned ? " (repositioned)" : "") << "\n";
  } else {
    os << "frame: none found\n";
  }
  auto yn = [](bool v) { return v ? "yes" : "no"; };
  os << "hypotheses: " << yn(c.hypotheses_ok) << "\n";
  os << "boundary nonzero: " << yn(c.boundary_nonzero) << "\n";
  os << "boundary coefficients in ideal: " << yn(c.coefficients_in_ideal) << "\n";
  os << "boundary coefficients are signed minors: " << yn(c.coefficients_are_minors) << "\n";
  if (c.betti_value >= 0) {
    os << "betti entry at position: " << c.betti_value << "\n";
    os << "certificate: " << (c.ok() ? "OK" : "FAILED") << "\n";
  } else {
    os << "certificate: " << (c.cycle_ok() ? "OK (cycle checks only)" : "FAILED") << "\n";
  }
  return os.str();
}

// ===== instantiations =====

template struct LinearFormMatrix<PrimeField>;
template struct LinearFormMatrix<RationalField>;
template LinearFormMatrix<PrimeField> make_linear_matrix(RingPtr<PrimeField>, int, int,
                                                         std::vector<Polynomial<PrimeField>>);
template LinearFormMatrix<RationalField> make_linear_matrix(
    RingPtr<RationalField>, int, int, std::vector<Polynomial<RationalField>>);
template LinearFormMatrix<PrimeField> hankel_matrix(const PrimeField&, int, int);
template LinearFormMatrix<RationalField> hankel_matrix(const RationalField&, int, int);
template Polynomial<PrimeField> minor_det(const LinearFormMatrix<PrimeField>&,
                                          const std::vector<int>&, const std::vector<int>&);
template Polynomial<RationalField> minor_det(const LinearFormMatrix<RationalField>&,
                                             const std::vector<int>&, const std::vector<int>&);
template Ideal<PrimeField> minor_ideal(const LinearFormMatrix<PrimeField>&, int);
template Ideal<RationalField> minor_ideal(const LinearFormMatrix<RationalField>&, int);
template Ideal<PrimeField> rnc_ideal(const PrimeField&, int);
template Ideal<RationalField> rnc_ideal(const RationalField&, int);
template KoszulChain<PrimeField> build_gamma(const LinearFormMatrix<PrimeField>&, int, int, int);
template KoszulChain<RationalField> build_gamma(const LinearFormMatrix<RationalField>&, int, int,
                                                int);
template CycleCertificate verify_cycle(const LinearFormMatrix<PrimeField>&, int,
                                       const CycleOptions&);
template CycleCertificate verify_cycle(const LinearFormMatrix<RationalField>&, int,
                                       const CycleOptions&);

}  // namespace chordal

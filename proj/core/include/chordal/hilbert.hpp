#ifndef CHORDAL_HILBERT_HPP
#define CHORDAL_HILBERT_HPP

#include <map>

#include "chordal/groebner.hpp"

namespace chordal {

// Exact binomial coefficient in int64, throws ResourceLimit on overflow.
long long binomial(long long n, long long k);

// Numerator N(T) of the Hilbert series N(T)/(1-T)^nvars of S/I for a monomial
// ideal I, as a dense coefficient vector. Standard pivot-variable recursion.
std::vector<long long> hilbert_numerator(std::vector<Monomial> gens, int nvars);

// Coefficient extraction: HF(S/I, m) from the numerator.
long long hf_from_numerator(const std::vector<long long>& num, int nvars, int m);

// Hilbert data of a graded quotient S/I:
//   values[m]        Hilbert function values
//   dim_affine       Krull dimension of S/I (pole order of the series at T=1)
//   degree           degree of Proj(S/I) (reduced numerator at T=1)
//   alpha            Hilbert polynomial P(m) = sum_i alpha[i] * C(m+i-1, i),
//                    one coefficient per i in [0, dim_affine); empty when the
//                    quotient is Artinian (P = 0)
//   stabilization    HF(m) == P(m) for every m >= stabilization
struct HilbertData {
  std::map<int, long long> values;
  int nvars = 0;
  int dim_affine = 0;
  long long degree = 0;
  std::vector<long long> alpha;
  int stabilization = 1;
  std::vector<long long> numerator;
  std::vector<long long> numerator_reduced;

  long long poly_value(long long m) const;
};

HilbertData hilbert_data_from_numerator(std::vector<long long> num, int nvars,
                                        int record_upto);

template <class F>
HilbertData hilbert_data(const GroebnerBasis<F>& gb, int record_upto = -1) {
  if (!gb.is_complete())
    throw InvalidArgument("hilbert data requires a complete Groebner basis");
  return hilbert_data_from_numerator(
      hilbert_numerator(leading_monomials(gb), gb.ring->nvars), gb.ring->nvars,
      record_upto);
}

template <class F>
long long hilbert_function(const GroebnerBasis<F>& gb, int m) {
  if (!gb.is_complete() && m > gb.complete_through)
    throw InvalidArgument("Hilbert function beyond the truncation degree");
  return hf_from_numerator(hilbert_numerator(leading_monomials(gb), gb.ring->nvars),
                           gb.ring->nvars, m);
}

}  // namespace chordal

#endif

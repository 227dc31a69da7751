#include "chordal/groebner.hpp"

// Force-instantiate the templated machinery for both coefficient fields so
// template errors surface when building the library itself.
namespace chordal {

template GroebnerBasis<PrimeField> buchberger(const Ideal<PrimeField>&, MonomialOrder,
                                              BuchbergerOptions);
template GroebnerBasis<RationalField> buchberger(const Ideal<RationalField>&, MonomialOrder,
                                                 BuchbergerOptions);
template Polynomial<PrimeField> normal_form(const GroebnerBasis<PrimeField>&,
                                            const Polynomial<PrimeField>&);
template Polynomial<RationalField> normal_form(const GroebnerBasis<RationalField>&,
                                               const Polynomial<RationalField>&);
template Ideal<PrimeField> eliminate(const Ideal<PrimeField>&, const std::vector<int>&, int);
template Ideal<RationalField> eliminate(const Ideal<RationalField>&, const std::vector<int>&,
                                        int);
template std::vector<Monomial> standard_monomials(const GroebnerBasis<PrimeField>&, int);
template std::vector<Monomial> standard_monomials(const GroebnerBasis<RationalField>&, int);

}  // namespace chordal

#ifndef CHORDAL_SECANT_HPP
#define CHORDAL_SECANT_HPP

#include <map>
#include <vector>

#include "chordal/groebner.hpp"
#include "chordal/ideal.hpp"
#include "chordal/linalg.hpp"

namespace chordal {

struct SecantOptions {
  int max_degree = -1;  // -1: k + 3
  BuchbergerOptions gb;
  LinalgLimits limits;
};

template <class F>
struct SecantResult {
  Ideal<F> ideal;  // minimal generators found through max_degree
  int k = 0;
  int max_degree = 0;
  std::map<int, long long> piece_dims;      // m -> dim of the degree-m piece
  std::map<int, long long> new_generators;  // m -> generators not in S_1 * piece_{m-1}
  std::map<int, long long> quotient_dims;   // m -> Hilbert function of the join quotient
};

// Ideal of the k-th secant variety of V(curve), computed degree by degree:
// a form F lies in the degree-m piece iff F(y + z + ...) reduces to zero
// modulo the copies of the ideal in k + 1 disjoint variable groups. The
// union of the per-group bases is already a Groebner basis of their sum.
template <class F>
SecantResult<F> secant_ideal(const Ideal<F>& curve, int k, const SecantOptions& opts = {});

// Same ideal by eliminating the parameter groups from
// (copies of the ideal) + (x_i - sum of group variables); small cases only.
template <class F>
Ideal<F> secant_by_elimination(const Ideal<F>& curve, int k, int degree_cap = 12);

}  // namespace chordal

#endif

#ifndef CHORDAL_IDEAL_HPP
#define CHORDAL_IDEAL_HPP

#include <vector>

#include "chordal/polynomial.hpp"

namespace chordal {

template <class F>
struct Ideal {
  using Field = F;
  RingPtr<F> ring;
  std::vector<Polynomial<F>> gens;
};

// Zero generators are dropped; mixed rings are rejected.
template <class F>
Ideal<F> make_ideal(RingPtr<F> ring, std::vector<Polynomial<F>> gens) {
  std::vector<Polynomial<F>> kept;
  kept.reserve(gens.size());
  for (Polynomial<F>& g : gens) {
    if (g.is_zero()) continue;
    if (!same_ring(ring, g.ring()))
      throw RingMismatch("ideal generators must share one ring");
    kept.push_back(std::move(g));
  }
  return Ideal<F>{std::move(ring), std::move(kept)};
}

template <class F>
bool is_homogeneous(const Ideal<F>& ideal) {
  for (const Polynomial<F>& g : ideal.gens)
    if (!g.is_homogeneous()) return false;
  return true;
}

template <class F>
void require_homogeneous(const Ideal<F>& ideal, const char* what) {
  if (!is_homogeneous(ideal))
    throw InvalidArgument(std::string(what) + " requires homogeneous generators");
}

}  // namespace chordal

#endif

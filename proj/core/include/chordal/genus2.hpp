#ifndef CHORDAL_GENUS2_HPP
#define CHORDAL_GENUS2_HPP

#include <cstdint>
#include <vector>

#include "chordal/field.hpp"
#include "chordal/ideal.hpp"

namespace chordal {

struct Genus2Options {
  std::uint32_t p = kDefaultPrime;  // needs p >= 101
  std::uint64_t seed = 1;
  int points = 45;        // smooth rational points sampled for interpolation
  int max_attempts = 20;  // fixture rebuild attempts before giving up
};

// A genus-2 curve of degree 9 in P^7: a plane quintic with four ordinary
// nodes, re-embedded by the quintics that are double at the nodes. The ideal
// holds the 19 canonical quadrics cut out by point interpolation; the
// diagnostic fields record the checks that validated the construction.
struct Genus2Fixture {
  Ideal<PrimeField> curve;  // in x_0..x_7
  std::uint32_t p = 0;
  std::uint64_t seed = 0;
  int attempts = 1;
  long long system_dim = 0;             // quintics double at the nodes (expect 9)
  std::vector<long long> kernel_dims;   // ideal pieces in degrees 2..4 (expect 19, 94, 295)
  bool span_consistent = false;         // S_1 * I_2 = I_3 and S_1 * I_3 = I_4
};

Genus2Fixture genus2_fixture(const Genus2Options& opts = {});

}  // namespace chordal

#endif

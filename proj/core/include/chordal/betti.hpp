#ifndef CHORDAL_BETTI_HPP
#define CHORDAL_BETTI_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chordal/groebner.hpp"
#include "chordal/hilbert.hpp"
#include "chordal/linalg.hpp"

namespace chordal {

enum class Tristate { False, True, Unknown };

struct BettiOptions {
  // Row window (j - i). -1 picks everything when the linear-section reduction
  // certifies an Artinian quotient, and rows 0..5 otherwise.
  int max_row = -1;
  int max_i = -1;  // -1: all homological indices
  std::uint64_t seed = 1;
  BuchbergerOptions gb;
  LinalgLimits limits;
};

struct BettiTable {
  int nvars = 0;        // ambient polynomial ring
  int dim_affine = 0;   // Krull dimension of the quotient
  int codim = 0;
  long long degree = 0;
  int pd = 0;   // largest i with a nonzero entry (lower bound when !complete)
  int reg = 0;  // largest j - i with a nonzero entry (lower bound when !complete)
  bool complete = true;
  int reduction_steps = 0;  // certified hyperplane sections applied
  std::vector<long long> numerator;  // Hilbert series numerator over the ambient ring
  std::map<std::pair<int, int>, long long> entries;  // nonzero (i, j) -> beta

  long long at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
};

// Graded Betti numbers of S/I via Koszul homology of a certified Artinian
// (or partial) linear-section reduction. Every reported entry is exact; the
// `complete` flag records whether rows outside the window may exist.
template <class F>
BettiTable betti_table(const Ideal<F>& ideal, const BettiOptions& opts = {});

std::string render_betti_text(const BettiTable& t);

// Checks sum_i (-1)^i beta_{i,j} against the Hilbert series numerator.
bool euler_matches_numerator(const BettiTable& t);

// True when rows 1..p of the resolution are linear for generators of the
// given degree: beta_{i,j} = 0 for 1 <= i <= p unless j = i + gen_degree - 1.
bool linearity_through(const BettiTable& t, int gen_degree, int p);

Tristate acm_status(const BettiTable& t);

inline int regularity_quotient(const BettiTable& t) { return t.reg; }
inline int regularity_ideal(const BettiTable& t) {
  if (t.entries.empty()) return 0;                          // zero module
  if (t.entries.size() == 1 && t.at(0, 0) != 0) return 0;   // zero ideal
  return t.reg + 1;
}

}  // namespace chordal

#endif

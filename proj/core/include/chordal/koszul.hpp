#ifndef CHORDAL_KOSZUL_HPP
#define CHORDAL_KOSZUL_HPP

#include <map>
#include <utility>
#include <vector>

#include "chordal/error.hpp"
#include "chordal/hilbert.hpp"
#include "chordal/polynomial.hpp"

namespace chordal {

// ===== subsets of {0..n-1} in lexicographic order =====

inline std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  if (k < 0 || k > n) return {};
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

// Position of a sorted subset in the lexicographic enumeration above.
inline long long subset_rank(const std::vector<int>& s, int n) {
  long long rank = 0;
  int prev = -1;
  int k = static_cast<int>(s.size());
  for (int i = 0; i < k; ++i) {
    for (int v = prev + 1; v < s[i]; ++v) rank += binomial(n - 1 - v, k - 1 - i);
    prev = s[i];
  }
  return rank;
}

// ===== Koszul chains =====
//
// An element of Wedge^i V (x) R where V has basis e_0..e_{n-1}. The boundary
// sends e_t to frame[t] (the ring variable x_t when no frame is given):
//   d(e_S (x) c) = sum_pos (-1)^pos frame[S[pos]] * (e_{S \ S[pos]} (x) c).

template <class F>
struct KoszulChain {
  RingPtr<F> ring;
  int wedge_size = 0;  // i
  std::map<std::vector<int>, Polynomial<F>> comps;
  std::vector<Polynomial<F>> frame;  // empty: frame[t] = x_t, size ring->nvars

  bool is_zero() const {
    for (const auto& [s, c] : comps)
      if (!c.is_zero()) return false;
    return true;
  }

  int frame_size() const {
    return frame.empty() ? ring->nvars : static_cast<int>(frame.size());
  }

  void add_term(const std::vector<int>& subset, const Polynomial<F>& c) {
    if (static_cast<int>(subset.size()) != wedge_size)
      throw InvalidArgument("koszul term has wrong wedge size");
    for (std::size_t i = 0; i + 1 < subset.size(); ++i)
      if (subset[i] >= subset[i + 1]) throw InvalidArgument("koszul subset must be ascending");
    if (!subset.empty() && (subset.front() < 0 || subset.back() >= frame_size()))
      throw InvalidArgument("koszul subset index out of range");
    auto it = comps.find(subset);
    if (it == comps.end()) {
      if (!c.is_zero()) comps.emplace(subset, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) comps.erase(it);
    }
  }
};

template <class F>
KoszulChain<F> koszul_boundary(const KoszulChain<F>& x) {
  KoszulChain<F> out;
  out.ring = x.ring;
  out.wedge_size = x.wedge_size - 1;
  out.frame = x.frame;
  if (x.wedge_size == 0) {
    out.wedge_size = 0;  // boundary of a 0-chain is zero; keep shape sane
    return out;
  }
  const F& k = x.ring->field;
  for (const auto& [s, c] : x.comps) {
    if (c.is_zero()) continue;
    for (std::size_t pos = 0; pos < s.size(); ++pos) {
      std::vector<int> t;
      t.reserve(s.size() - 1);
      for (std::size_t q = 0; q < s.size(); ++q)
        if (q != pos) t.push_back(s[q]);
      Polynomial<F> ell = x.frame.empty()
                              ? Polynomial<F>::variable(x.ring, s[pos])
                              : x.frame[static_cast<std::size_t>(s[pos])];
      Polynomial<F> piece = ell * c;
      if (pos % 2 == 1) piece = piece.scaled(k.neg(k.one()));
      auto it = out.comps.find(t);
      if (it == out.comps.end()) {
        if (!piece.is_zero()) out.comps.emplace(std::move(t), std::move(piece));
      } else {
        it->second = it->second + piece;
        if (it->second.is_zero()) out.comps.erase(it);
      }
    }
  }
  return out;
}

}  // namespace chordal

#endif

#ifndef CHORDAL_MONOMIAL_HPP
#define CHORDAL_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <vector>

#include "chordal/error.hpp"

namespace chordal {

// Dense exponent vector with cached total degree. Exponents are uint8, which
// comfortably covers every computation here (degrees stay in single digits).
inline constexpr int kMaxVars = 24;

class Monomial {
 public:
  Monomial() : deg_(0), nv_(0) { e_.fill(0); }

  static Monomial one(int nvars) {
    Monomial m;
    m.nv_ = static_cast<std::uint8_t>(nvars);
    return m;
  }
  static Monomial var(int nvars, int i, int e = 1) {
    Monomial m = one(nvars);
    m.e_[i] = static_cast<std::uint8_t>(e);
    m.deg_ = static_cast<std::uint16_t>(e);
    return m;
  }
  static Monomial from_exponents(const std::vector<int>& exps) {
    if (static_cast<int>(exps.size()) > kMaxVars)
      throw InvalidArgument("too many variables (limit " + std::to_string(kMaxVars) + ")");
    Monomial m = one(static_cast<int>(exps.size()));
    for (std::size_t i = 0; i < exps.size(); ++i) m.set(static_cast<int>(i), exps[i]);
    return m;
  }

  int nvars() const { return nv_; }
  int deg() const { return deg_; }
  int operator[](int i) const { return e_[i]; }
  bool is_one() const { return deg_ == 0; }

  void set(int i, int e) {
    deg_ = static_cast<std::uint16_t>(deg_ - e_[i] + e);
    e_[i] = static_cast<std::uint8_t>(e);
  }

  Monomial times(const Monomial& o) const {
    Monomial r = *this;
    for (int i = 0; i < nv_; ++i) r.e_[i] = static_cast<std::uint8_t>(r.e_[i] + o.e_[i]);
    r.deg_ = static_cast<std::uint16_t>(deg_ + o.deg_);
    return r;
  }
  bool divides(const Monomial& o) const {
    if (deg_ > o.deg_) return false;
    for (int i = 0; i < nv_; ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }
  // Requires *this | o.
  Monomial divide_into(const Monomial& o) const {
    Monomial r = o;
    for (int i = 0; i < nv_; ++i) r.e_[i] = static_cast<std::uint8_t>(r.e_[i] - e_[i]);
    r.deg_ = static_cast<std::uint16_t>(o.deg_ - deg_);
    return r;
  }
  Monomial lcm_with(const Monomial& o) const {
    Monomial r = *this;
    int d = 0;
    for (int i = 0; i < nv_; ++i) {
      r.e_[i] = std::max(r.e_[i], o.e_[i]);
      d += r.e_[i];
    }
    r.deg_ = static_cast<std::uint16_t>(d);
    return r;
  }
  Monomial gcd_with(const Monomial& o) const {
    Monomial r = *this;
    int d = 0;
    for (int i = 0; i < nv_; ++i) {
      r.e_[i] = std::min(r.e_[i], o.e_[i]);
      d += r.e_[i];
    }
    r.deg_ = static_cast<std::uint16_t>(d);
    return r;
  }
  bool coprime_with(const Monomial& o) const {
    for (int i = 0; i < nv_; ++i)
      if (e_[i] && o.e_[i]) return false;
    return true;
  }

  bool operator==(const Monomial& o) const {
    return nv_ == o.nv_ && deg_ == o.deg_ &&
           std::memcmp(e_.data(), o.e_.data(), nv_) == 0;
  }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (int i = 0; i < nv_; ++i) {
      h ^= e_[i];
      h *= 1099511628211ull;
    }
    return h;
  }

 private:
  std::array<std::uint8_t, kMaxVars> e_;
  std::uint16_t deg_;
  std::uint8_t nv_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class OrderKind { GrevLex, Lex, Elim };

// A total order on monomials refining divisibility. Elim ranks the first
// `block` variables strictly above the rest, grevlex inside each block.
struct MonomialOrder {
  OrderKind kind = OrderKind::GrevLex;
  int block = 0;

  static MonomialOrder grevlex() { return {OrderKind::GrevLex, 0}; }
  static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
  static MonomialOrder elim(int block) { return {OrderKind::Elim, block}; }

  bool operator==(const MonomialOrder& o) const {
    return kind == o.kind && (kind != OrderKind::Elim || block == o.block);
  }

  // Returns <0, 0, >0 as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;

  std::string name() const;
};

// All monomials of total degree m in nvars variables, in descending order
// under `order`.
std::vector<Monomial> monomials_of_degree(int nvars, int m,
                                          const MonomialOrder& order);

}  // namespace chordal

#endif

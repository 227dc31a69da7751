#ifndef CHORDAL_FIELD_HPP
#define CHORDAL_FIELD_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "chordal/error.hpp"

namespace chordal {

// Deterministic primality check, valid for all n < 2^32.
bool is_prime_u32(std::uint64_t n);

// Describes a coefficient field as it appears in files and on the CLI:
// characteristic 0 means the rationals, otherwise an odd prime p with
// 2 < p < 2^31.
struct FieldSpec {
  std::uint32_t characteristic = 32003;
  void validate() const;
};

inline constexpr std::uint32_t kDefaultPrime = 32003;

// Prime field F_p. Elements are canonical representatives in [0, p).
class PrimeField {
 public:
  using Elem = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }

  Elem add(Elem a, Elem b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    return s >= p_ ? Elem(s - p_) : Elem(s);
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return Elem((std::uint64_t(a) * b) % p_);
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return Elem(r);
  }
  Elem from_mpz(const mpz_class& v) const;

  // Symmetric lift to (-p/2, p/2]; used when printing.
  long long to_signed(Elem a) const {
    return a * 2 > p_ ? static_cast<long long>(a) - p_
                      : static_cast<long long>(a);
  }
  std::string to_string(Elem a) const { return std::to_string(to_signed(a)); }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

// The rationals, backed by GMP.
class RationalField {
 public:
  using Elem = mpq_class;

  std::uint32_t characteristic() const { return 0; }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_one(const Elem& a) const { return a == 1; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (is_zero(a)) throw InvalidArgument("division by zero");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return a * inv(b); }

  Elem from_int(long long v) const { return Elem(static_cast<long>(v)); }
  Elem from_mpz(const mpz_class& v) const { return Elem(v); }

  std::string to_string(const Elem& a) const { return a.get_str(); }

  bool operator==(const RationalField&) const { return true; }
};

}  // namespace chordal

#endif

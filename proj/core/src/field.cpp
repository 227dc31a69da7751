#include "chordal/field.hpp"

namespace chordal {

namespace {

std::uint64_t pow_mod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  unsigned __int128 acc = 1, base = b % m;
  while (e) {
    if (e & 1) acc = acc * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace

bool is_prime_u32(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  // Bases {2,3,5,7} are a deterministic Miller-Rabin witness set below 3.2e9.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull}) {
    std::uint64_t x = pow_mod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = static_cast<std::uint64_t>((unsigned __int128)x * x % n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

void FieldSpec::validate() const {
  if (characteristic == 0) return;
  if (characteristic <= 2 || characteristic >= (1u << 31) ||
      !is_prime_u32(characteristic)) {
    throw InvalidArgument("field characteristic must be 0 or an odd prime below 2^31, got " +
                          std::to_string(characteristic));
  }
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  FieldSpec spec{p};
  if (p == 0) throw InvalidArgument("PrimeField requires a positive characteristic");
  spec.validate();
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw InvalidArgument("division by zero in F_" + std::to_string(p_));
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += p_;
  return Elem(t);
}

PrimeField::Elem PrimeField::from_mpz(const mpz_class& v) const {
  mpz_class r = v % p_;
  if (r < 0) r += p_;
  return Elem(r.get_ui());
}

}  // namespace chordal

#pragma once

// Integer infrastructure: smallest-prime-factor sieve, factorization,
// divisor enumeration of n^2, Euler totient, gcd.

#include <cstdint>
#include <numeric>
#include <vector>

namespace twofrac {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

// n^2 must fit in a 64-bit word wherever squares are enumerated.
inline constexpr u64 kSquareSafeMax = 3'000'000'000ULL;

struct PrimePower {
  u64 prime;
  u32 exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// value = prod prime^exponent, primes strictly increasing, exponents >= 1.
// value == 1 has an empty factor list.
struct Factorization {
  u64 value = 1;
  std::vector<PrimePower> factors;
};

// Smallest-prime-factor table for 2 <= m <= limit. Immutable after
// construction and safely shareable across threads.
class SieveTable {
 public:
  explicit SieveTable(u64 limit);

  u64 limit() const { return limit_; }
  u32 spf(u64 m) const { return spf_[m]; }

 private:
  u64 limit_;
  std::vector<u32> spf_;
};

SieveTable build_sieve(u64 limit);

// Trial-division fallback for one-off values without a sieve.
Factorization factorize(u64 n);
Factorization factorize(u64 n, const SieveTable& sieve);

u64 euler_phi(const Factorization& fact);

// All divisors of fact.value^2, unsorted. Length is prod (2e_i + 1).
// Requires fact.value <= kSquareSafeMax.
std::vector<u64> divisors_of_square(const Factorization& fact);

inline u64 gcd(u64 x, u64 y) { return std::gcd(x, y); }

// The parameter a together with its factorization, totient and distinct
// prime divisors; precomputed once and passed around by const reference.
struct Modulus {
  u64 a = 1;
  Factorization fact;
  u64 phi = 1;
  std::vector<u64> primes;

  static Modulus of(u64 a);
};

}  // namespace twofrac

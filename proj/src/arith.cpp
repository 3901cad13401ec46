#include "twofrac/arith.hpp"

#include <limits>
#include <stdexcept>

namespace twofrac {

SieveTable::SieveTable(u64 limit) : limit_(limit) {
  if (limit < 2) throw std::invalid_argument("build_sieve: limit must be >= 2");
  if (limit >= std::numeric_limits<u32>::max())
    throw std::out_of_range("build_sieve: limit exceeds 32-bit spf storage");
  spf_.assign(limit + 1, 0);
  for (u64 m = 2; m <= limit; ++m) {
    if (spf_[m] == 0) {  // m is prime
      for (u64 j = m; j <= limit; j += m)
        if (spf_[j] == 0) spf_[j] = static_cast<u32>(m);
    }
  }
}

SieveTable build_sieve(u64 limit) { return SieveTable(limit); }

Factorization factorize(u64 n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  Factorization f;
  f.value = n;
  for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    u32 e = 0;
    while (n % p == 0) { n /= p; ++e; }
    f.factors.push_back({p, e});
  }
  if (n > 1) f.factors.push_back({n, 1});
  return f;
}

Factorization factorize(u64 n, const SieveTable& sieve) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  if (n > sieve.limit()) throw std::out_of_range("factorize: n exceeds sieve limit");
  Factorization f;
  f.value = n;
  while (n > 1) {
    const u64 p = sieve.spf(n);
    u32 e = 0;
    while (n % p == 0) { n /= p; ++e; }
    f.factors.push_back({p, e});
  }
  return f;
}

u64 euler_phi(const Factorization& fact) {
  u64 phi = fact.value;
  for (const auto& [p, e] : fact.factors) phi = phi / p * (p - 1);
  return phi;
}

std::vector<u64> divisors_of_square(const Factorization& fact) {
  if (fact.value > kSquareSafeMax)
    throw std::out_of_range("divisors_of_square: value^2 would overflow 64 bits");
  std::vector<u64> divs{1};
  for (const auto& [p, e] : fact.factors) {
    const std::size_t base = divs.size();
    divs.reserve(base * (2 * e + 1));
    u64 pk = 1;
    for (u32 k = 0; k < 2 * e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

Modulus Modulus::of(u64 a) {
  if (a == 0) throw std::invalid_argument("Modulus: a must be positive");
  Modulus m;
  m.a = a;
  m.fact = factorize(a);
  m.phi = euler_phi(m.fact);
  m.primes.reserve(m.fact.factors.size());
  for (const auto& pp : m.fact.factors) m.primes.push_back(pp.prime);
  return m;
}

}  // namespace twofrac

#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "twofrac/arith.hpp"

using namespace twofrac;

namespace {

// trial-division oracle for the smallest prime factor
u64 spf_by_trial(u64 m) {
  for (u64 d = 2; d * d <= m; ++d)
    if (m % d == 0) return d;
  return m;
}

}  // namespace

TEST_CASE("sieve smallest prime factors") {
  const SieveTable s10 = build_sieve(10);
  CHECK(s10.spf(9) == 3);
  CHECK(s10.spf(7) == 7);

  const SieveTable s100 = build_sieve(100);
  CHECK(s100.spf(91) == 7);
  for (u64 m = 2; m <= 100; ++m) {
    CHECK(s100.spf(m) == spf_by_trial(m));
    CHECK(m % s100.spf(m) == 0);
  }

  CHECK_THROWS_AS(build_sieve(1), std::invalid_argument);
}

TEST_CASE("factorize") {
  const Factorization f12 = factorize(12);
  REQUIRE(f12.factors.size() == 2);
  CHECK(f12.factors[0] == PrimePower{2, 2});
  CHECK(f12.factors[1] == PrimePower{3, 1});

  CHECK(factorize(1).factors.empty());
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);

  // primality oracle
  const u64 p = 999983;
  CHECK(spf_by_trial(p) == p);
  const Factorization fp = factorize(p);
  REQUIRE(fp.factors.size() == 1);
  CHECK(fp.factors[0] == PrimePower{p, 1});
}

TEST_CASE("factorize reconstruction and sieve agreement") {
  const SieveTable sieve = build_sieve(100000);
  for (u64 n = 1; n <= 100000; ++n) {
    const Factorization f = factorize(n, sieve);
    u64 prod = 1;
    u64 last_prime = 0;
    for (const auto& [p, e] : f.factors) {
      CHECK(p > last_prime);
      CHECK(e >= 1);
      last_prime = p;
      for (u32 i = 0; i < e; ++i) prod *= p;
    }
    CHECK(prod == n);
  }
  for (u64 n = 1; n <= 2000; ++n) {
    const Factorization a = factorize(n);
    const Factorization b = factorize(n, sieve);
    CHECK(a.factors == b.factors);
  }
}

TEST_CASE("divisors of n^2") {
  auto sorted = [](std::vector<u64> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK(sorted(divisors_of_square(factorize(4))) ==
        std::vector<u64>{1, 2, 4, 8, 16});
  CHECK(sorted(divisors_of_square(factorize(1))) == std::vector<u64>{1});

  // brute-force divisor scan of 36
  std::vector<u64> expected;
  for (u64 d = 1; d <= 36; ++d)
    if (36 % d == 0) expected.push_back(d);
  CHECK(sorted(divisors_of_square(factorize(6))) == expected);

  for (u64 n = 1; n <= 500; ++n) {
    const Factorization f = factorize(n);
    const auto divs = divisors_of_square(f);
    u64 len = 1;
    for (const auto& [p, e] : f.factors) len *= 2 * e + 1;
    CHECK(divs.size() == len);
    for (u64 d : divs) CHECK((n * n) % d == 0);
  }

  Factorization too_big = factorize(kSquareSafeMax);
  too_big.value = kSquareSafeMax + 1;
  CHECK_THROWS_AS(divisors_of_square(too_big), std::out_of_range);
}

TEST_CASE("euler phi") {
  CHECK(euler_phi(factorize(12)) == 4);
  CHECK(euler_phi(factorize(1)) == 1);
  CHECK(euler_phi(factorize(100)) == 40);

  // coprimality scan
  const SieveTable sieve = build_sieve(10000);
  for (u64 a = 1; a <= 10000; ++a) {
    u64 count = 0;
    for (u64 m = 1; m <= a; ++m)
      if (gcd(m, a) == 1) ++count;
    CHECK(euler_phi(factorize(a, sieve)) == count);
  }
}

TEST_CASE("gcd") {
  CHECK(gcd(12, 18) == 6);
  CHECK(gcd(7, 1) == 1);
  CHECK(gcd(0, 5) == 5);
}

TEST_CASE("modulus bundles exact phi") {
  for (u64 a : {1ULL, 2ULL, 3ULL, 12ULL, 30ULL, 210ULL, 4096ULL}) {
    const Modulus m = Modulus::of(a);
    CHECK(m.a == a);
    CHECK(m.phi == euler_phi(m.fact));
    // phi * prod p == a * prod (p-1), integer identity
    u64 lhs = m.phi, rhs = a;
    for (u64 p : m.primes) { lhs *= p; rhs *= p - 1; }
    CHECK(lhs == rhs);
    CHECK(m.primes.size() == m.fact.factors.size());
  }
}

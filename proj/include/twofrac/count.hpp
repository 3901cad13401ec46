#pragma once

// Exact counting of representations a/n = 1/x + 1/y.
//
// R(n;a) counts ORDERED pairs (x,y). Two independent algorithms:
//   count_direct  — window scan over the smaller denominator,
//   count_divisor — divisors u of n^2 with u = -n (mod a), via the
//                   identity (ax - n)(ay - n) = n^2 (requires gcd(n,a)=1).
// S(N;a) sums R(n;a) over n <= N coprime to a.

#include <span>
#include <vector>

#include "twofrac/arith.hpp"

namespace twofrac {

enum class CountMethod { direct, divisor };

struct CountRecord {
  u64 n;
  u64 a;
  u64 r;  // number of ordered solutions
  CountMethod method;
};

struct SumRecord {
  u64 n_max;  // N
  u64 a;
  u64 s;
};

CountRecord count_direct(u64 n, u64 a);

// Requires gcd(n,a) = 1 and fact.value == n. Never materializes the
// divisor list; walks divisor residues mod a.
CountRecord count_divisor(u64 n, u64 a, const Factorization& fact);

// S(N;a) over a shared immutable sieve; the range 1..N is split into
// contiguous blocks, each worker accumulates an integer partial sum, so
// the result is independent of the thread count.
SumRecord sum_exact(u64 n_max, u64 a, unsigned threads = 1);
SumRecord sum_exact(u64 n_max, u64 a, unsigned threads, const SieveTable& sieve);

// One sieve pass, S evaluated at every checkpoint (strictly increasing).
std::vector<SumRecord> sum_grid(std::span<const u64> checkpoints, u64 a,
                                unsigned threads = 1);
std::vector<SumRecord> sum_grid(std::span<const u64> checkpoints, u64 a,
                                unsigned threads, const SieveTable& sieve);

}  // namespace twofrac

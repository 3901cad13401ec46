#include "twofrac/count.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>

namespace twofrac {

namespace {

using u128 = unsigned __int128;

// Number of divisor-residue combinations over factors[i..) whose product
// times `cur` is `target` mod a. Depth is at most omega(n) (~15 for 64-bit n).
u64 residue_matches(const PrimePower* factors, std::size_t count, u64 a,
                    u64 cur, u64 target) {
  if (count == 0) return cur == target ? 1 : 0;
  const u64 p = factors->prime % a;
  const u32 reps = 2 * factors->exponent;
  u64 hits = 0;
  for (u32 k = 0;; ++k) {
    hits += residue_matches(factors + 1, count - 1, a, cur, target);
    if (k == reps) break;
    cur = (u128)cur * p % a;
  }
  return hits;
}

u64 count_divisor_raw(u64 n, u64 a, const Factorization& fact) {
  const u64 target = (a - n % a) % a;
  return residue_matches(fact.factors.data(), fact.factors.size(), a, 1 % a,
                         target);
}

}  // namespace

CountRecord count_direct(u64 n, u64 a) {
  if (n == 0 || a == 0) throw std::invalid_argument("count_direct: n, a >= 1");
  // The smaller denominator x satisfies n/a < x <= 2n/a; then
  // y = n*x / (a*x - n) whenever the division is exact.
  u64 r = 0;
  for (u64 x = n / a + 1; (u128)a * x <= 2 * (u128)n; ++x) {
    const u64 den = a * x - n;
    const u128 num = (u128)n * x;
    if (num % den != 0) continue;
    const u64 y = static_cast<u64>(num / den);
    r += (y == x) ? 1 : 2;
  }
  return {n, a, r, CountMethod::direct};
}

CountRecord count_divisor(u64 n, u64 a, const Factorization& fact) {
  if (n == 0 || a == 0) throw std::invalid_argument("count_divisor: n, a >= 1");
  if (gcd(n, a) != 1)
    throw std::invalid_argument("count_divisor: requires gcd(n,a) = 1");
  return {n, a, count_divisor_raw(n, a, fact), CountMethod::divisor};
}

namespace {

// Partial sum of R(n;a) over lo <= n <= hi; skips n sharing a factor with a.
u64 sum_range(u64 lo, u64 hi, u64 a, const SieveTable& sieve) {
  u64 s = 0;
  PrimePower factors[16];
  for (u64 n = lo; n <= hi; ++n) {
    std::size_t k = 0;
    u64 m = n;
    bool coprime = true;
    while (m > 1) {
      const u64 p = sieve.spf(m);
      if (a % p == 0) { coprime = false; break; }
      u32 e = 0;
      while (m % p == 0) { m /= p; ++e; }
      factors[k++] = {p, e};
    }
    if (!coprime) continue;
    s += residue_matches(factors, k, a, 1 % a, (a - n % a) % a);
  }
  return s;
}

// Contiguous blocks handed out by an atomic cursor; integer partial sums
// reduce exactly, so the total does not depend on the schedule.
u64 sum_parallel(u64 lo, u64 hi, u64 a, unsigned threads, const SieveTable& sieve) {
  if (lo > hi) return 0;
  if (threads <= 1) return sum_range(lo, hi, a, sieve);

  constexpr u64 kBlock = 8192;
  std::atomic<u64> cursor{lo};
  std::vector<u64> partial(threads, 0);
  {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        u64 acc = 0;
        for (;;) {
          const u64 start = cursor.fetch_add(kBlock, std::memory_order_relaxed);
          if (start > hi) break;
          const u64 end = std::min(hi, start + kBlock - 1);
          acc += sum_range(start, end, a, sieve);
        }
        partial[t] = acc;
      });
    }
  }
  u64 s = 0;
  for (u64 v : partial) s += v;
  return s;
}

}  // namespace

SumRecord sum_exact(u64 n_max, u64 a, unsigned threads, const SieveTable& sieve) {
  if (n_max == 0 || a == 0) throw std::invalid_argument("sum_exact: N, a >= 1");
  if (n_max > sieve.limit())
    throw std::out_of_range("sum_exact: N exceeds sieve limit");
  if (threads == 0) threads = 1;
  return {n_max, a, sum_parallel(1, n_max, a, threads, sieve)};
}

SumRecord sum_exact(u64 n_max, u64 a, unsigned threads) {
  if (n_max == 0 || a == 0) throw std::invalid_argument("sum_exact: N, a >= 1");
  const SieveTable sieve(std::max<u64>(n_max, 2));
  return sum_exact(n_max, a, threads, sieve);
}

std::vector<SumRecord> sum_grid(std::span<const u64> checkpoints, u64 a,
                                unsigned threads, const SieveTable& sieve) {
  if (checkpoints.empty())
    throw std::invalid_argument("sum_grid: checkpoints must be nonempty");
  for (std::size_t i = 1; i < checkpoints.size(); ++i)
    if (checkpoints[i] <= checkpoints[i - 1])
      throw std::invalid_argument("sum_grid: checkpoints must be strictly increasing");
  if (checkpoints.back() > sieve.limit())
    throw std::out_of_range("sum_grid: checkpoint exceeds sieve limit");
  if (threads == 0) threads = 1;

  std::vector<SumRecord> out;
  out.reserve(checkpoints.size());
  u64 running = 0, prev = 0;
  for (u64 c : checkpoints) {
    running += sum_parallel(prev + 1, c, a, threads, sieve);
    out.push_back({c, a, running});
    prev = c;
  }
  return out;
}

std::vector<SumRecord> sum_grid(std::span<const u64> checkpoints, u64 a,
                                unsigned threads) {
  if (checkpoints.empty())
    throw std::invalid_argument("sum_grid: checkpoints must be nonempty");
  const SieveTable sieve(std::max<u64>(checkpoints.back(), 2));
  return sum_grid(checkpoints, a, threads, sieve);
}

}  // namespace twofrac

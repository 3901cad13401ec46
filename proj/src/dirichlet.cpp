#include "twofrac/dirichlet.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace twofrac {

namespace {

constexpr real kPi = std::numbers::pi_v<real>;
using u128 = unsigned __int128;

u64 mulmod(u64 x, u64 y, u64 m) { return (u128)x * y % m; }

u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

u64 primitive_root_mod_p(u64 p) {
  if (p == 2) return 1;
  const Factorization f = factorize(p - 1);
  for (u64 g = 2;; ++g) {
    bool ok = true;
    for (const auto& pp : f.factors)
      if (powmod(g, (p - 1) / pp.prime, p) == 1) { ok = false; break; }
    if (ok) return g;
  }
}

// One cyclic factor of (Z/a)*: a generator restricted to the component
// modulus, with a discrete-log table for every unit of that component.
struct CyclicFactor {
  u64 comp_mod;            // p^k
  u64 order;
  std::vector<u32> dlog;   // indexed by residue mod comp_mod; units only
};

std::vector<CyclicFactor> decompose_units(const Factorization& fact) {
  std::vector<CyclicFactor> out;
  for (const auto& [p, e] : fact.factors) {
    u64 pk = 1;
    for (u32 i = 0; i < e; ++i) pk *= p;
    if (p == 2) {
      if (e == 1) continue;  // trivial group
      if (e == 2) {
        CyclicFactor f{4, 2, std::vector<u32>(4, 0)};
        f.dlog[3] = 1;
        out.push_back(std::move(f));
        continue;
      }
      // 2^k, k >= 3: <-1> x <5>
      CyclicFactor sign{pk, 2, std::vector<u32>(pk, 0)};
      CyclicFactor five{pk, pk / 4, std::vector<u32>(pk, 0)};
      u64 v = 1;
      for (u64 t = 0; t < pk / 4; ++t) {
        sign.dlog[v] = 0;
        five.dlog[v] = static_cast<u32>(t);
        sign.dlog[pk - v] = 1;
        five.dlog[pk - v] = static_cast<u32>(t);
        v = mulmod(v, 5, pk);
      }
      out.push_back(std::move(sign));
      out.push_back(std::move(five));
    } else {
      const u64 phi = pk / p * (p - 1);
      u64 g = primitive_root_mod_p(p);
      if (e > 1 && powmod(g, p - 1, p * p) == 1) g += p;
      CyclicFactor f{pk, phi, std::vector<u32>(pk, 0)};
      u64 v = 1;
      for (u64 i = 0; i < phi; ++i) {
        f.dlog[v] = static_cast<u32>(i);
        v = mulmod(v, g, pk);
      }
      out.push_back(std::move(f));
    }
  }
  return out;
}

}  // namespace

std::vector<Character> character_group(u64 a) {
  if (a < 3) throw std::invalid_argument("character_group: requires a >= 3");
  const Factorization fact = factorize(a);
  const std::vector<CyclicFactor> gens = decompose_units(fact);

  u64 lambda = 1;  // common order for exact integer angles
  for (const auto& g : gens) lambda = std::lcm(lambda, g.order);

  // angle numerator k(m) with chi(m) = exp(2 pi i k(m)/lambda) for the
  // character with exponent vector c: k(m) = sum_j c_j e_j(m) lambda/d_j
  std::vector<std::vector<u64>> elog(gens.size());  // e_j(m) for each unit m
  std::vector<u64> units;
  for (u64 m = 1; m < a; ++m) {
    if (gcd(m, a) != 1) continue;
    units.push_back(m);
    for (std::size_t j = 0; j < gens.size(); ++j)
      elog[j].push_back(gens[j].dlog[m % gens[j].comp_mod]);
  }
  const u64 phi = units.size();

  std::vector<Character> chars;
  chars.reserve(phi);
  std::vector<u32> exps(gens.size(), 0);
  for (;;) {
    Character chi;
    chi.modulus = a;
    chi.index = exps;
    chi.table.assign(a, cplx{0, 0});
    chi.principal = true;
    u64 k_minus1 = 0;
    for (std::size_t i = 0; i < phi; ++i) {
      u64 k = 0;
      for (std::size_t j = 0; j < gens.size(); ++j)
        k = (k + (u128)exps[j] * elog[j][i] % lambda * (lambda / gens[j].order)) % lambda;
      const real angle = 2 * kPi * k / lambda;
      chi.table[units[i]] = cplx{std::cos(angle), std::sin(angle)};
      if (units[i] == a - 1) k_minus1 = k;
    }
    for (u32 e : exps)
      if (e) { chi.principal = false; break; }
    // chi(-1)^2 = 1 forces k(-1) in {0, lambda/2}; the parity is exact.
    chi.odd = (2 * k_minus1 == lambda);
    chars.push_back(std::move(chi));

    std::size_t j = gens.size();
    while (j > 0) {
      --j;
      if (++exps[j] < gens[j].order) break;
      exps[j] = 0;
      if (j == 0) return chars;
    }
    if (gens.empty()) return chars;  // unreachable for a >= 3
  }
}

namespace {

std::vector<real> psi_cache(u64 a) {
  std::vector<real> psi(a, 0);
  for (u64 m = 1; m < a; ++m) psi[m] = digamma(static_cast<real>(m) / a);
  return psi;
}

cplx l_at_one_cached(const Character& chi, const std::vector<real>& psi) {
  const u64 a = chi.modulus;
  cplx sum = 0;
  for (u64 m = 1; m < a; ++m) {
    const cplx v = chi.table[m];
    if (v != cplx{0, 0}) sum += v * psi[m];
  }
  return -sum / static_cast<real>(a);
}

}  // namespace

cplx l_at_one(const Character& chi) {
  if (chi.principal)
    throw std::invalid_argument("l_at_one: L(s,chi0) has a pole at s = 1");
  return l_at_one_cached(chi, psi_cache(chi.modulus));
}

real moment_nonprincipal(u64 a) {
  const auto chars = character_group(a);
  const auto psi = psi_cache(a);
  real sum = 0;
  for (const auto& chi : chars) {
    if (chi.principal) continue;
    sum += std::norm(l_at_one_cached(chi, psi));
  }
  return sum;
}

real moment_odd(u64 a) {
  const auto chars = character_group(a);
  const auto psi = psi_cache(a);
  real sum = 0;
  for (const auto& chi : chars)
    if (chi.odd) sum += std::norm(l_at_one_cached(chi, psi));
  return sum;
}

real moment_signed(u64 a) {
  const auto chars = character_group(a);
  const auto psi = psi_cache(a);
  real sum = 0;
  for (const auto& chi : chars) {
    if (chi.principal) continue;
    const real sign = chi.odd ? -1 : 1;
    sum += sign * std::norm(l_at_one_cached(chi, psi));
  }
  return sum;
}

MomentReport verify_prop2(u64 a, const SpecialConstants& consts) {
  const Modulus mod = Modulus::of(a);
  if (a < 3) throw std::invalid_argument("verify_prop2: requires a >= 3");
  const real numeric = moment_nonprincipal(a);

  real prod = 1, lsum = 0;
  for (u64 p : mod.primes) {
    prod *= 1 - 1 / (static_cast<real>(p) * p);
    lsum += std::log(static_cast<real>(p)) / (p - 1);
  }
  const real phi_over_a = static_cast<real>(mod.phi) / mod.a;
  const real la = std::log(static_cast<real>(a));
  const real closed =
      consts.zeta2 * mod.phi * prod -
      phi_over_a * phi_over_a * (la + lsum) * (la + lsum) +
      phi_over_a * phi_over_a *
          (consts.gamma * consts.gamma + 2 * consts.gamma1 - 2 * consts.zeta2);

  const real residual = numeric - closed;
  return {a, numeric, closed, residual,
          residual * static_cast<real>(a) * a / mod.phi};
}

MomentReport verify_prop3(u64 a) {
  const Modulus mod = Modulus::of(a);
  if (a < 3) throw std::invalid_argument("verify_prop3: requires a >= 3");
  const real numeric = moment_odd(a);

  real prod = 1;
  for (u64 p : mod.primes) prod *= 1 + 1 / static_cast<real>(p);
  const real phi_over_a = static_cast<real>(mod.phi) / mod.a;
  const real closed =
      kPi * kPi / 12 * phi_over_a * phi_over_a * (a * prod - 3);

  const real residual = numeric - closed;
  return {a, numeric, closed, residual, residual};
}

}  // namespace twofrac

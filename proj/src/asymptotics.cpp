#include "twofrac/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace twofrac {

namespace {

constexpr real kPi = std::numbers::pi_v<real>;

void require_theorem_a(const Modulus& mod, bool allow_small_a, const char* who) {
  if (mod.a < 3 && !allow_small_a)
    throw std::invalid_argument(std::string(who) +
                                ": a < 3 needs the small-a oracle flag");
}

}  // namespace

real leading_factor(const Modulus& mod) {
  real v = 3 / (kPi * kPi * mod.a);
  for (u64 p : mod.primes) v *= static_cast<real>(p - 1) / (p + 1);
  return v;
}

cplx g_at(cplx s, const Modulus& mod) {
  cplx v = 1;
  for (u64 p : mod.primes) {
    const cplx ps = std::exp(s * std::log(static_cast<real>(p)));
    v *= (ps - real{1}) * (ps - real{1}) / (ps * (ps + real{1}));
  }
  return v;
}

real g_log_derivative(const Modulus& mod) {
  real v = 0;
  for (u64 p : mod.primes)
    v += (3.0L * p + 1) / ((real)p * p - 1) * std::log((real)p);
  return v;
}

real g_second_ratio(const Modulus& mod) {
  const real g1 = g_log_derivative(mod);
  real q = 0;
  for (u64 p : mod.primes) {
    const real pr = static_cast<real>(p);
    const real lp = std::log(pr);
    q += (3 * pr * pr * pr + 2 * pr * pr + 3 * pr) /
         ((pr * pr - 1) * (pr * pr - 1)) * lp * lp;
  }
  return g1 * g1 - q;
}

std::pair<real, real> lemma_sums(const Modulus& mod) {
  real l2 = 0, l3 = 0;
  for (u64 p : mod.primes) {
    const real pr = static_cast<real>(p);
    const real lp = std::log(pr);
    l2 += lp / (pr - 1);
    l3 += (3 * pr * pr * pr + 2 * pr * pr + 3 * pr) /
          ((pr * pr - 1) * (pr * pr - 1)) * lp * lp;
  }
  return {l2, l3};
}

real c1(const Modulus& mod, const SpecialConstants& consts) {
  real sum = 0;
  for (u64 p : mod.primes)
    sum += (6.0L * p + 2) / ((real)p * p - 1) * std::log((real)p);
  return 6 * consts.gamma - 4 * consts.zeta2_prime / consts.zeta2 - 2 + sum;
}

C0Breakdown c0_refined_terms(const Modulus& mod, const SpecialConstants& consts,
                             bool allow_small_a) {
  require_theorem_a(mod, allow_small_a, "c0_refined");
  const real la = std::log(static_cast<real>(mod.a));
  const auto [lsum, qsum] = lemma_sums(mod);
  const real g1 = g_log_derivative(mod);
  const real z = consts.zeta2, zp = consts.zeta2_prime, zpp = consts.zeta2_doubleprime;
  const real g = consts.gamma;
  const real base = 6 * g - 4 * zp / z - 2;

  C0Breakdown t;
  t.log_sq = -2 * la * la;
  t.log_cross = -4 * la * lsum;
  t.lsum_sq = -2 * lsum * lsum;
  t.g1_sq = g1 * g1;
  t.lemma3 = -qsum;
  t.base_cross = base * g1;
  t.const_block = 2 / (z * z) * (2 * zp + z) * (2 * zp + z) -
                  4 / z * (zpp + zp) - 6 * g * (2 * zp / z + 1) +
                  8 * g * g - 2 * consts.gamma1 + 2 * z;
  return t;
}

real c0_refined(const Modulus& mod, const SpecialConstants& consts,
                bool allow_small_a) {
  return c0_refined_terms(mod, consts, allow_small_a).total();
}

real c0_coarse_main(const Modulus& mod, bool allow_small_a) {
  require_theorem_a(mod, allow_small_a, "c0_coarse_main");
  const real la = std::log(static_cast<real>(mod.a));
  const auto [lsum, _] = lemma_sums(mod);
  return -2 * la * la - 4 * la * lsum;
}

real main_term(u64 n_max, const Modulus& mod, const SpecialConstants& consts,
               bool allow_small_a) {
  require_theorem_a(mod, allow_small_a, "main_term");
  if (n_max < 4) throw std::invalid_argument("main_term: requires N >= 4");
  const real ln = std::log(static_cast<real>(n_max));
  return leading_factor(mod) * n_max *
         (ln * ln + c1(mod, consts) * ln + c0_refined(mod, consts, allow_small_a));
}

ErrorBound delta_envelope(u64 n_max, const Modulus& mod) {
  if (n_max < 4) throw std::invalid_argument("delta_envelope: requires N >= 4");
  const real ln = std::log(static_cast<real>(n_max));
  real v = std::sqrt(static_cast<real>(n_max)) * ln * ln * ln * ln * ln;
  v *= static_cast<real>(mod.a) / mod.phi;
  for (u64 p : mod.primes) v /= 1 - 1 / std::sqrt(static_cast<real>(p));
  return {n_max, mod.a, v};
}

AsymptoticCoefficients coefficients(const Modulus& mod,
                                    const SpecialConstants& consts,
                                    bool allow_small_a) {
  const auto [l2, l3] = lemma_sums(mod);
  return {mod.a,
          leading_factor(mod),
          c1(mod, consts),
          c0_refined(mod, consts, allow_small_a),
          c0_coarse_main(mod, allow_small_a),
          g_log_derivative(mod),
          l2,
          l3};
}

}  // namespace twofrac

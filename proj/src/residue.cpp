#include "twofrac/residue.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "twofrac/count.hpp"
#include "twofrac/dirichlet.hpp"

namespace twofrac {

namespace {

constexpr real kPi = std::numbers::pi_v<real>;

}  // namespace

cplx contour_residue(const std::function<cplx(cplx)>& f, const ContourSpec& spec,
                     int target_coefficient) {
  if (spec.nodes < 64)
    throw std::invalid_argument("contour_residue: nodes must be >= 64");
  if (spec.radius <= 0)
    throw std::invalid_argument("contour_residue: radius must be positive");

  const real r_pow = std::pow(spec.radius, static_cast<real>(-target_coefficient));
  cplx acc = 0;
  for (unsigned j = 0; j < spec.nodes; ++j) {
    const real theta = 2 * kPi * j / spec.nodes;
    const cplx rot{std::cos(theta), std::sin(theta)};
    const cplx v = f(spec.center + spec.radius * rot);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::domain_error("contour_residue: singularity on contour");
    // f(c + r e^{i t}) r^{-target} e^{-i target t}
    acc += v * std::exp(cplx{0, -static_cast<real>(target_coefficient) * theta});
  }
  return acc * r_pow / static_cast<real>(spec.nodes);
}

std::array<real, 3> laurent_zeta_cubed(const ContourSpec& spec) {
  const auto zeta3 = [](cplx s) {
    const cplx z = zeta_em(s, 2000, 12);
    return z * z * z;
  };
  std::array<real, 3> out{};
  for (int t = -3; t <= -1; ++t)
    out[t + 3] = contour_residue(zeta3, spec, t).real();
  return out;
}

real s2_closed_form(u64 n_max, const Modulus& mod, const SpecialConstants& consts) {
  if (n_max < 4) throw std::invalid_argument("s2_closed_form: requires N >= 4");
  const real ln = std::log(static_cast<real>(n_max));
  const real g1 = g_log_derivative(mod);
  const auto [lsum, qsum] = lemma_sums(mod);
  (void)lsum;
  const real z = consts.zeta2, zp = consts.zeta2_prime, zpp = consts.zeta2_doubleprime;
  const real g = consts.gamma;
  const real base = 6 * g - 4 * zp / z - 2;

  const real body = ln * ln + (base + 2 * g1) * ln + g1 * g1 - qsum +
                    base * g1 + 2 / (z * z) * (2 * zp + z) * (2 * zp + z) -
                    4 / z * (zpp + zp) - 6 * g * (2 * zp / z + 1) +
                    6 * g * g - 6 * consts.gamma1;
  return leading_factor(mod) * n_max * body;
}

real s1_closed_form(u64 n_max, const Modulus& mod, const SpecialConstants& consts) {
  if (mod.a < 3) throw std::invalid_argument("s1_closed_form: requires a >= 3");
  if (n_max < 4) throw std::invalid_argument("s1_closed_form: requires N >= 4");
  const real la = std::log(static_cast<real>(mod.a));
  const auto [lsum, qsum] = lemma_sums(mod);
  (void)qsum;
  const real body = -2 * la * la - 4 * la * lsum - 2 * lsum * lsum +
                    2 * consts.gamma * consts.gamma + 4 * consts.gamma1 +
                    2 * consts.zeta2;
  return leading_factor(mod) * n_max * body;
}

real s1_character_route(u64 n_max, const Modulus& mod) {
  if (mod.a < 3) throw std::invalid_argument("s1_character_route: requires a >= 3");
  real prod = 1;
  for (u64 p : mod.primes) prod *= static_cast<real>(p) / (p + 1);
  return 6 * n_max / (kPi * kPi) / mod.phi * prod * moment_signed(mod.a);
}

ZetaContourTable build_zeta_contour_table(const ContourSpec& spec) {
  if (spec.nodes < 64)
    throw std::invalid_argument("build_zeta_contour_table: nodes must be >= 64");
  // radius > 0.25 would drag 2s toward the critical strip where 1/zeta(2s)
  // is no longer safely zero-free for this evaluator
  if (spec.radius <= 0 || spec.radius > 0.25L)
    throw std::invalid_argument("build_zeta_contour_table: radius must be in (0, 0.25]");
  ZetaContourTable t;
  t.spec = spec;
  t.node.reserve(spec.nodes);
  t.zeta_part.reserve(spec.nodes);
  for (unsigned j = 0; j < spec.nodes; ++j) {
    const real theta = 2 * kPi * j / spec.nodes;
    const cplx s = spec.center + spec.radius * cplx{std::cos(theta), std::sin(theta)};
    const cplx z = zeta_em(s, 2000, 12);
    t.node.push_back(s);
    t.zeta_part.push_back(z * z * z / zeta_em(2.0L * s, 2000, 12));
  }
  return t;
}

ResidueReport verify_residue_identity(u64 n_max, const Modulus& mod,
                                      const ZetaContourTable& table,
                                      const SpecialConstants& consts) {
  if (n_max < 4)
    throw std::invalid_argument("verify_residue_identity: requires N >= 4");
  const ContourSpec& spec = table.spec;
  const real n = static_cast<real>(n_max);

  // c_-1 of zeta^3/zeta(2s) * G(s) * N^s/s: reuse the cached zeta part.
  cplx acc = 0;
  for (unsigned j = 0; j < spec.nodes; ++j) {
    const cplx s = table.node[j];
    const cplx v = table.zeta_part[j] * g_at(s, mod) *
                   std::exp(s * std::log(n)) / s;
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::domain_error("verify_residue_identity: singularity on contour");
    const real theta = 2 * kPi * j / spec.nodes;
    acc += v * cplx{std::cos(theta), std::sin(theta)};
  }
  const real numeric = (acc * spec.radius / static_cast<real>(spec.nodes)).real();

  const real closed = mod.phi * s2_closed_form(n_max, mod, consts);
  const real abs_err = std::abs(numeric - closed);
  return {numeric, closed, abs_err, abs_err / std::abs(closed), spec};
}

ResidueReport verify_residue_identity(u64 n_max, const Modulus& mod,
                                      const ContourSpec& spec) {
  return verify_residue_identity(n_max, mod, build_zeta_contour_table(spec),
                                 constants_bundle());
}

DecompositionReport verify_s_decomposition(u64 n_max, const Modulus& mod,
                                           unsigned threads, const SieveTable& sieve,
                                           const SpecialConstants& consts) {
  if (mod.a < 3)
    throw std::invalid_argument("verify_s_decomposition: requires a >= 3");
  const u64 s = sum_exact(n_max, mod.a, threads, sieve).s;
  const real s1 = s1_closed_form(n_max, mod, consts);
  const real s2 = s2_closed_form(n_max, mod, consts);
  const real delta = static_cast<real>(s) - s1 - s2;
  const real env = delta_envelope(n_max, mod).envelope;
  return {mod.a, n_max, s, s1, s2, delta, env, delta / env};
}

DecompositionReport verify_s_decomposition(u64 n_max, const Modulus& mod,
                                           unsigned threads) {
  const SieveTable sieve(std::max<u64>(n_max, 2));
  return verify_s_decomposition(n_max, mod, threads, sieve, constants_bundle());
}

}  // namespace twofrac

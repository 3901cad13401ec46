#pragma once

// Numerical verification of the residue algebra behind the main term:
// Laurent coefficients of zeta^3 at s = 1, the closed forms for the
// principal and non-principal residue contributions (S2 and S1), and
// direct Cauchy-coefficient extraction of
//     Res_{s=1} zeta^3(s)/zeta(2s) * G(s) * N^s/s
// on a circle about s = 1.

#include <array>
#include <functional>

#include "twofrac/arith.hpp"
#include "twofrac/asymptotics.hpp"
#include "twofrac/constants.hpp"

namespace twofrac {

struct ContourSpec {
  cplx center{1, 0};
  real radius = 0.2L;   // <= 0.25 keeps 2s clear of the critical strip
  unsigned nodes = 512;
};

struct ResidueReport {
  real numeric;
  real closed_form;
  real abs_err;
  real rel_err;
  ContourSpec spec;
};

// Laurent coefficient c_target of f at spec.center via the trapezoidal
// rule on the circle (geometric convergence in the node count).
cplx contour_residue(const std::function<cplx(cplx)>& f, const ContourSpec& spec,
                     int target_coefficient);

// (c_-3, c_-2, c_-1) of zeta^3 at s = 1.
std::array<real, 3> laurent_zeta_cubed(const ContourSpec& spec = {});

// Principal-character term: (1/phi) Res_{s=1} f_chi0(s) N^s/s, fully
// explicit (this closed form carries no remainder).
real s2_closed_form(u64 n_max, const Modulus& mod, const SpecialConstants& consts);

// Non-principal term, explicit part only (the O(1/phi(a)) remainder is
// omitted; verifiers measure it). Requires a >= 3.
real s1_closed_form(u64 n_max, const Modulus& mod, const SpecialConstants& consts);

// Character route for S1: (6N/pi^2) (1/phi) prod p/(p+1) * signed moment.
real s1_character_route(u64 n_max, const Modulus& mod);

// zeta^3(s)/zeta(2s) sampled on the contour nodes; the expensive part of
// the integrand is (a, N)-independent, so scans share one table.
struct ZetaContourTable {
  ContourSpec spec;
  std::vector<cplx> node;       // center + r e^{i theta_j}
  std::vector<cplx> zeta_part;  // zeta^3 / zeta(2s) at each node
};

ZetaContourTable build_zeta_contour_table(const ContourSpec& spec = {});

ResidueReport verify_residue_identity(u64 n_max, const Modulus& mod,
                                      const ContourSpec& spec = {});
ResidueReport verify_residue_identity(u64 n_max, const Modulus& mod,
                                      const ZetaContourTable& table,
                                      const SpecialConstants& consts);

struct DecompositionReport {
  u64 a;
  u64 n_max;
  u64 s_exact;
  real s1;
  real s2;
  real delta_obs;  // s_exact - s1 - s2
  real envelope;
  real ratio;      // delta_obs / envelope
};

DecompositionReport verify_s_decomposition(u64 n_max, const Modulus& mod,
                                           unsigned threads = 1);
DecompositionReport verify_s_decomposition(u64 n_max, const Modulus& mod,
                                           unsigned threads, const SieveTable& sieve,
                                           const SpecialConstants& consts);

}  // namespace twofrac

#pragma once

// Closed forms on the asymptotic side of the mean value
//   S(N;a) ~ (3/pi^2 a) prod_{p|a} (p-1)/(p+1) * N (log^2 N + c1 log N + c0),
// together with the finite Euler product G(s) = prod_{p|a} (p^s-1)^2/(p^s(p^s+1)),
// its log-derivatives at 1, the prime-divisor diagnostic sums, and the error
// envelope sqrt(N) log^5 N (a/phi) prod (1 - p^-1/2)^-1 (implied constant
// normalized to 1; observed ratios are the reported diagnostic).

#include <utility>

#include "twofrac/arith.hpp"
#include "twofrac/constants.hpp"

namespace twofrac {

struct AsymptoticCoefficients {
  u64 a;
  real leading;         // (3/pi^2 a) prod (p-1)/(p+1)
  real c1;
  real c0_refined;
  real c0_coarse_main;  // the two explicit coarse terms only
  real g1_ratio;        // G'(1)/G(1)
  real lemma2_sum;      // sum log p/(p-1)
  real lemma3_sum;      // sum (3p^3+2p^2+3p)/(p^2-1)^2 log^2 p
};

struct ErrorBound {
  u64 n_max;
  u64 a;
  real envelope;
};

real leading_factor(const Modulus& mod);
cplx g_at(cplx s, const Modulus& mod);
real g_log_derivative(const Modulus& mod);   // sum (3p+1)/(p^2-1) log p
real g_second_ratio(const Modulus& mod);     // G''(1)/G(1)

// (sum log p/(p-1), sum (3p^3+2p^2+3p)/(p^2-1)^2 log^2 p)
std::pair<real, real> lemma_sums(const Modulus& mod);

real c1(const Modulus& mod, const SpecialConstants& consts);

// Individual term groups of the refined c0, exposed for the dominance
// diagnostic and for localizing sign errors.
struct C0Breakdown {
  real log_sq;        // -2 log^2 a
  real log_cross;     // -4 log a * sum log p/(p-1)
  real lsum_sq;       // -2 (sum log p/(p-1))^2
  real g1_sq;         // (G'(1)/G(1))^2
  real lemma3;        // - sum (3p^3+2p^2+3p)/(p^2-1)^2 log^2 p
  real base_cross;    // (6 gamma - 4 zeta'(2)/zeta(2) - 2) * G'(1)/G(1)
  real const_block;   // the a-independent zeta/gamma block
  real total() const {
    return log_sq + log_cross + lsum_sq + g1_sq + lemma3 + base_cross + const_block;
  }
};

// The theorem assumes a >= 3; a in {1,2} is meaningful for the divisor
// oracle and is allowed only behind the explicit flag.
C0Breakdown c0_refined_terms(const Modulus& mod, const SpecialConstants& consts,
                             bool allow_small_a = false);
real c0_refined(const Modulus& mod, const SpecialConstants& consts,
                bool allow_small_a = false);
real c0_coarse_main(const Modulus& mod, bool allow_small_a = false);

real main_term(u64 n_max, const Modulus& mod, const SpecialConstants& consts,
               bool allow_small_a = false);

// Theorem hypothesis box: 4 <= N and 3 <= a <= 2N.
inline bool in_theorem_domain(u64 n_max, u64 a) {
  return n_max >= 4 && a >= 3 && a <= 2 * n_max;
}

ErrorBound delta_envelope(u64 n_max, const Modulus& mod);

AsymptoticCoefficients coefficients(const Modulus& mod,
                                    const SpecialConstants& consts,
                                    bool allow_small_a = false);

}  // namespace twofrac

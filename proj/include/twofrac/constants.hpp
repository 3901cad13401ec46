#pragma once

// Analytic constants: gamma, gamma_1 (first Stieltjes constant), zeta on
// the region needed here, and the derivatives zeta'(2), zeta''(2).
//
// Every constant has two independent in-repo evaluation routes (series vs
// finite differences / distinct truncations), so the test suite needs no
// external reference values.

#include <complex>

namespace twofrac {

// 80-bit extended on x86-64: 64-bit significand, comfortably below the
// 1e-10..1e-12 absolute targets after accumulation.
using real = long double;
using cplx = std::complex<real>;

struct SpecialConstants {
  real gamma;
  real gamma1;
  real zeta2;
  real zeta2_prime;
  real zeta2_doubleprime;
  real precision_goal;  // absolute error target per field
};

// Euler-Maclaurin zeta: sum_{m<=M} m^-s + M^(1-s)/(s-1) - M^-s/2 plus
// Bernoulli corrections through the given even order. Valid for s != 1,
// Re(s) > -1. If error_estimate is non-null it receives the magnitude of
// the first omitted correction term.
cplx zeta_em(cplx s, unsigned terms = 10000, unsigned bernoulli_order = 12,
             real* error_estimate = nullptr);

// gamma = lim (sum_{h<=H} 1/h - log H), Euler-Maclaurin accelerated.
real euler_gamma(unsigned terms = 10000);

// gamma_1 = lim (sum_{h<=H} log h/h - log^2(H)/2), same acceleration
// applied to f(h) = log h / h.
real stieltjes_gamma1(unsigned terms = 20000);

struct ZetaAtTwo {
  real zeta2;             // pi^2/6
  real zeta2_prime;       // -sum log m / m^2
  real zeta2_doubleprime; // sum log^2 m / m^2
};

// Direct series plus Euler-Maclaurin tails; independent of zeta_em.
ZetaAtTwo zeta_derivatives_at_2(unsigned terms = 30000);

SpecialConstants constants_bundle();

// Digamma via upward recurrence past 16 then the asymptotic series.
// Used by the L(1,chi) finite identity and as the second route for gamma.
real digamma(real x);

}  // namespace twofrac

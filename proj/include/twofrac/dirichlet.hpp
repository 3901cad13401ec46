#pragma once

// Dirichlet characters mod a, L(1,chi) for non-principal chi, the three
// character moments of |L(1,chi)|^2, and numerical verification of the
// two moment identities they satisfy (one asymptotic with a bounded scaled
// residual, one exact).
//
// Construction: (Z/a)* is decomposed over the prime powers of a; odd prime
// powers use a primitive root, 2^k (k >= 3) the {-1, 5} generator pair.
// A character is an exponent vector over those generators; its value table
// is filled from exact integer angles k/ord with one rounding per entry.

#include <vector>

#include "twofrac/arith.hpp"
#include "twofrac/constants.hpp"

namespace twofrac {

struct Character {
  u64 modulus = 1;
  std::vector<u32> index;    // exponents over the group generators
  std::vector<cplx> table;   // table[m] = chi(m), zero when gcd(m,a) > 1
  bool principal = false;
  bool odd = false;          // chi(-1) = -1 (computed exactly, not from table)

  cplx operator()(u64 m) const { return table[m % modulus]; }
};

// All phi(a) characters mod a >= 3, in lexicographic order of their
// exponent vectors (the principal character comes first).
std::vector<Character> character_group(u64 a);

// L(1,chi) = -(1/a) sum_{m=1}^{a-1} chi(m) psi(m/a); exact finite identity
// for non-principal chi. Principal input is a pole -> invalid_argument.
cplx l_at_one(const Character& chi);

real moment_nonprincipal(u64 a);  // sum over chi != chi0 of |L(1,chi)|^2
real moment_odd(u64 a);           // sum over chi(-1) = -1
real moment_signed(u64 a);        // sum over chi != chi0 of chi(-1)|L(1,chi)|^2

struct MomentReport {
  u64 a;
  real numeric;
  real closed_form;
  real residual;         // numeric - closed_form
  real scaled_residual;  // residual * a^2/phi(a) for the asymptotic identity,
                         // raw for the exact one
};

MomentReport verify_prop2(u64 a, const SpecialConstants& consts);
MomentReport verify_prop3(u64 a);

}  // namespace twofrac

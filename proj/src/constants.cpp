#include "twofrac/constants.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace twofrac {

namespace {

// B_2, B_4, ..., B_30
constexpr std::array<real, 15> kBernoulli = {
    1.0L / 6,       -1.0L / 30,      1.0L / 42,       -1.0L / 30,
    5.0L / 66,      -691.0L / 2730,  7.0L / 6,        -3617.0L / 510,
    43867.0L / 798, -174611.0L / 330, 854513.0L / 138, -236364091.0L / 2730,
    8553103.0L / 6, -23749461029.0L / 870, 8615841276005.0L / 14322};

real bernoulli2j(unsigned j) {  // j >= 1
  if (j == 0 || j > kBernoulli.size())
    throw std::invalid_argument("bernoulli order out of table range");
  return kBernoulli[j - 1];
}

// x^-k * (c0 + c1 log x + c2 log^2 x); closed under differentiation,
// which is all the Euler-Maclaurin tails below need.
struct LogPoly {
  unsigned k;
  std::array<real, 3> c;

  LogPoly derivative() const {
    // d/dx [x^-k (c0 + c1 L + c2 L^2)] =
    //   x^-(k+1) ((c1 - k c0) + (2 c2 - k c1) L - k c2 L^2)
    const real kk = static_cast<real>(k);
    return {k + 1, {c[1] - kk * c[0], 2 * c[2] - kk * c[1], -kk * c[2]}};
  }

  real eval(real x) const {
    const real lx = std::log(x);
    return (c[0] + lx * (c[1] + lx * c[2])) * std::pow(x, -static_cast<real>(k));
  }
};

// sum_{m=M+1}^inf f(m) = tail_integral - f(M)/2 - sum_j B_2j/(2j)! f^(2j-1)(M)
real em_tail(const LogPoly& f, real tail_integral, real m, unsigned pairs) {
  real tail = tail_integral - f.eval(m) / 2;
  LogPoly d = f.derivative();  // f'
  real fact = 1;               // (2j)!
  for (unsigned j = 1; j <= pairs; ++j) {
    fact *= (2 * j - 1) * (2 * j);
    tail -= bernoulli2j(j) / fact * d.eval(m);
    d = d.derivative().derivative();
  }
  return tail;
}

}  // namespace

cplx zeta_em(cplx s, unsigned terms, unsigned bernoulli_order, real* error_estimate) {
  if (s == cplx{1, 0}) throw std::domain_error("zeta_em: pole at s = 1");
  if (s.real() <= -1) throw std::invalid_argument("zeta_em: requires Re(s) > -1");
  if (terms < 10) throw std::invalid_argument("zeta_em: requires terms >= 10");
  if (bernoulli_order % 2 || bernoulli_order == 0)
    throw std::invalid_argument("zeta_em: bernoulli_order must be even and positive");

  const real m = static_cast<real>(terms);
  // compensated summation: the finite-difference oracles divide out h^2
  // and would otherwise see the accumulated rounding of 1e4 terms
  cplx sum = 0, comp = 0;
  for (unsigned i = 1; i <= terms; ++i) {
    const cplx term = std::exp(-s * std::log(static_cast<real>(i))) - comp;
    const cplx next = sum + term;
    comp = (next - sum) - term;
    sum = next;
  }

  const cplx m_to_1ms = std::exp((cplx{1, 0} - s) * std::log(m));
  const cplx m_to_ms = m_to_1ms / m;
  cplx value = sum + m_to_1ms / (s - cplx{1, 0}) - m_to_ms / real{2};

  // + sum_j B_2j/(2j)! * s(s+1)...(s+2j-2) * M^(1-s-2j)
  cplx poch = s;               // rising factorial through s+2j-2
  cplx mpow = m_to_ms / m;     // M^(-s-2j+1)
  real fact = 2;               // (2j)!
  const real m2 = m * m;
  for (unsigned j = 1; 2 * j <= bernoulli_order; ++j) {
    if (j > 1) {
      poch *= (s + cplx{static_cast<real>(2 * j - 3), 0}) *
              (s + cplx{static_cast<real>(2 * j - 2), 0});
      fact *= (2 * j - 1) * (2 * j);
      mpow /= m2;
    }
    value += bernoulli2j(j) / fact * poch * mpow;
  }
  if (error_estimate) {
    const unsigned j = bernoulli_order / 2 + 1;
    const cplx next = poch *
        (s + cplx{static_cast<real>(2 * j - 3), 0}) *
        (s + cplx{static_cast<real>(2 * j - 2), 0});
    *error_estimate = std::abs(bernoulli2j(j) / (fact * (2 * j - 1) * (2 * j)) *
                               next * mpow / m2);
  }
  return value;
}

real euler_gamma(unsigned terms) {
  if (terms < 10) throw std::invalid_argument("euler_gamma: requires terms >= 10");
  const real h = static_cast<real>(terms);
  real sum = 0;
  for (unsigned i = terms; i >= 1; --i) sum += 1.0L / i;
  // gamma = H_n - log n - 1/(2n) + sum_j B_2j/(2j) n^-2j
  real g = sum - std::log(h) - 1 / (2 * h);
  real hpow = 1;
  for (unsigned j = 1; j <= 5; ++j) {
    hpow /= h * h;
    g += bernoulli2j(j) / (2 * j) * hpow;
  }
  return g;
}

real stieltjes_gamma1(unsigned terms) {
  if (terms < 100) throw std::invalid_argument("stieltjes_gamma1: requires terms >= 100");
  const real h = static_cast<real>(terms);
  real sum = 0;
  for (unsigned i = terms; i >= 2; --i) sum += std::log(static_cast<real>(i)) / i;

  const real lh = std::log(h);
  // partial sum - log^2(H)/2 - endpoint log H/(2H)
  real g1 = sum - lh * lh / 2 - lh / (2 * h);
  // - sum_j B_2j/(2j)! f^(2j-1)(H) for f = log x / x, i.e.
  // + sum_j B_2j/(2j) (log H - H_{2j-1}) / H^2j
  real hpow = 1, harmonic = 0;
  for (unsigned j = 1; j <= 4; ++j) {
    harmonic += 1.0L / (2 * j - 1);
    if (j > 1) harmonic += 1.0L / (2 * j - 2);
    hpow /= h * h;
    g1 += bernoulli2j(j) / (2 * j) * (lh - harmonic) * hpow;
  }
  return g1;
}

ZetaAtTwo zeta_derivatives_at_2(unsigned terms) {
  if (terms < 100) throw std::invalid_argument("zeta_derivatives_at_2: terms >= 100");
  const real m = static_cast<real>(terms);
  const real lm = std::log(m);

  real s0 = 0, s1 = 0, s2 = 0;
  for (unsigned i = terms; i >= 2; --i) {
    const real li = std::log(static_cast<real>(i));
    const real w = 1.0L / ((real)i * i);
    s0 += w;
    s1 += li * w;
    s2 += li * li * w;
  }
  s0 += 1;

  // tails of sum x^-2 {1, log x, log^2 x} past M
  const real t0 = em_tail({2, {1, 0, 0}}, 1 / m, m, 4);
  const real t1 = em_tail({2, {0, 1, 0}}, (lm + 1) / m, m, 4);
  const real t2 = em_tail({2, {0, 0, 1}}, (lm * lm + 2 * lm + 2) / m, m, 4);

  return {s0 + t0, -(s1 + t1), s2 + t2};
}

SpecialConstants constants_bundle() {
  const ZetaAtTwo z = zeta_derivatives_at_2();
  return {euler_gamma(), stieltjes_gamma1(), z.zeta2, z.zeta2_prime,
          z.zeta2_doubleprime, 1e-10L};
}

real digamma(real x) {
  if (x <= 0 && std::floor(x) == x)
    throw std::domain_error("digamma: pole at nonpositive integer");
  real acc = 0;
  while (x < 16) { acc -= 1 / x; x += 1; }
  // log x - 1/(2x) - sum_j B_2j / (2j x^2j)
  real r = std::log(x) - 1 / (2 * x);
  const real x2 = x * x;
  real xpow = 1;
  for (unsigned j = 1; j <= 8; ++j) {
    xpow /= x2;
    r -= bernoulli2j(j) / (2 * j) * xpow;
  }
  return acc + r;
}

}  // namespace twofrac

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "twofrac/constants.hpp"

using namespace twofrac;

namespace {

constexpr real kPi = std::numbers::pi_v<real>;

bool near(real x, real y, real tol) { return std::abs(x - y) <= tol; }

// -d/ds [zeta(s) - 1/(s-1)] at s = 1, central differences + Richardson
real gamma1_from_zeta() {
  auto g = [](real h) {
    const cplx s{1 + h, 0};
    return (zeta_em(s) - cplx{1 / h, 0}).real();
  };
  auto diff = [&](real h) { return -(g(h) - g(-h)) / (2 * h); };
  const real d1 = diff(1e-3L), d2 = diff(5e-4L);
  return (4 * d2 - d1) / 3;
}

// derivatives of zeta at 2 from zeta_em, step 1e-4, Richardson extrapolated
real zeta_prime2_fd() {
  auto diff = [](real h) {
    return (zeta_em({2 + h, 0}).real() - zeta_em({2 - h, 0}).real()) / (2 * h);
  };
  const real d1 = diff(1e-4L), d2 = diff(5e-5L);
  return (4 * d2 - d1) / 3;
}

real zeta_doubleprime2_fd() {
  auto diff = [](real h) {
    return (zeta_em({2 + h, 0}).real() - 2 * zeta_em({2, 0}).real() +
            zeta_em({2 - h, 0}).real()) / (h * h);
  };
  const real d1 = diff(2e-4L), d2 = diff(1e-4L);
  return (4 * d2 - d1) / 3;
}

}  // namespace

TEST_CASE("zeta_em at 2") {
  const cplx z2 = zeta_em({2, 0});
  CHECK(near(z2.real(), kPi * kPi / 6, 1e-12L));
  CHECK(near(z2.imag(), 0, 1e-15L));

  // independent truncated-series oracle with integral tail estimate
  real direct = 0;
  const unsigned m = 1000000;
  for (unsigned i = m; i >= 1; --i) direct += 1.0L / ((real)i * i);
  direct += 1.0L / m - 1.0L / (2.0L * (real)m * m);  // tail, error O(M^-3)
  CHECK(near(z2.real(), direct, 1e-10L));
}

TEST_CASE("zeta_em near the first nontrivial zero") {
  const cplx z = zeta_em({0.5L, 14.134725L}, 20000, 12);
  CHECK(std::abs(z) < 0.01L);
}

TEST_CASE("zeta_em argument validation") {
  CHECK_THROWS_AS(zeta_em({1, 0}), std::domain_error);
  CHECK_THROWS_AS(zeta_em({2, 0}, 5), std::invalid_argument);
  CHECK_THROWS_AS(zeta_em({2, 0}, 100, 7), std::invalid_argument);
  CHECK_THROWS_AS(zeta_em({-2, 0}), std::invalid_argument);
}

TEST_CASE("zeta_em error estimate is honest at 2") {
  real est = 0;
  const cplx z = zeta_em({2, 0}, 100, 6, &est);
  CHECK(est > 0);
  CHECK(std::abs(z.real() - kPi * kPi / 6) <= 2 * est + 1e-17L);
}

TEST_CASE("zeta_em is real and decreasing on (1,4)") {
  real prev = zeta_em({1.1L, 0}).real();
  for (real s = 1.3L; s <= 4.0L; s += 0.2L) {
    const cplx z = zeta_em({s, 0});
    CHECK(near(z.imag(), 0, 1e-15L));
    CHECK(z.real() < prev);
    CHECK(z.real() > 1);
    prev = z.real();
  }
  // reflection sanity
  CHECK(near(zeta_em({2, 0}).real() * (1 / zeta_em({2, 0}).real()), 1, 1e-18L));
}

TEST_CASE("euler gamma") {
  const real g = euler_gamma();
  CHECK(0 < g);
  CHECK(g < 1);
  CHECK(near(g, 0.57721566490153286061L, 1e-15L));
  // two truncation levels agree
  CHECK(near(euler_gamma(1000), euler_gamma(10000), 1e-12L));
  // digamma route: gamma = -psi(1)
  CHECK(near(g, -digamma(1), 1e-15L));
  CHECK_THROWS_AS(euler_gamma(5), std::invalid_argument);
}

TEST_CASE("stieltjes gamma1") {
  const real g1 = stieltjes_gamma1();
  CHECK(g1 < 0);
  CHECK(near(g1, -0.07281584548367672486L, 1e-12L));
  // cross-check against the zeta route
  CHECK(near(g1, gamma1_from_zeta(), 1e-9L));
  // truncation stability
  CHECK(near(stieltjes_gamma1(5000), stieltjes_gamma1(20000), 1e-11L));
  CHECK_THROWS_AS(stieltjes_gamma1(50), std::invalid_argument);
}

TEST_CASE("zeta derivatives at 2") {
  const ZetaAtTwo z = zeta_derivatives_at_2();
  CHECK(near(z.zeta2, kPi * kPi / 6, 1e-12L));
  CHECK(near(z.zeta2_prime, -0.93754825431584375370L, 1e-12L));
  CHECK(near(z.zeta2_doubleprime, 1.98928023429890010342L, 1e-12L));

  // series route vs finite differences of zeta_em
  CHECK(near(z.zeta2_prime, zeta_prime2_fd(), 1e-9L));
  CHECK(near(z.zeta2_doubleprime, zeta_doubleprime2_fd(), 1e-9L));
}

TEST_CASE("constants bundle invariants") {
  const SpecialConstants c = constants_bundle();
  CHECK(near(c.zeta2, kPi * kPi / 6, c.precision_goal));
  CHECK(c.gamma > 0.57L);
  CHECK(c.gamma < 0.58L);
  CHECK(c.gamma1 > -0.08L);
  CHECK(c.gamma1 < -0.07L);
  CHECK(c.zeta2_prime < 0);
  CHECK(c.zeta2_doubleprime > 0);
  CHECK(c.gamma == euler_gamma());  // pass-through
}

TEST_CASE("zeta_em reproduces the cube expansion at s -> 1") {
  // (s-1)^3 zeta^3(s) = 1 + 3 gamma (s-1) + (3 gamma^2 - 3 gamma1)(s-1)^2 + ...
  const real g = euler_gamma();
  const real g1 = stieltjes_gamma1();
  // the effective offset fl(1+h)-1 differs from h by ~1e-14 relative; the
  // divided differences would amplify that, so always use the exact one
  auto cube = [](real h) {
    const real s = 1 + h;
    const real he = s - 1;
    const cplx z = zeta_em({s, 0});
    return (z * z * z).real() * he * he * he;
  };
  auto c1_at = [&](real h) {
    const real he = (1 + h) - 1;
    return (cube(h) - 1) / he;
  };
  auto c2_at = [&](real h) {
    const real he = (1 + h) - 1;
    return (cube(h) - 1 - 3 * g * he) / (he * he);
  };

  // samples along s = 1 + 10^-k, k = 2..5, accelerated by two Richardson
  // levels (first kills the O(h) term, second the O(h^2) term); the
  // resulting limits must be stable across decades
  auto limits = [&](auto f, real expect) {
    real a_k[4], r1[3], r2[2];
    for (int k = 2; k <= 5; ++k)
      a_k[k - 2] = f(std::pow(10.0L, -static_cast<real>(k)));
    for (int i = 0; i < 3; ++i) r1[i] = (10 * a_k[i + 1] - a_k[i]) / 9;
    for (int i = 0; i < 2; ++i) r2[i] = (100 * r1[i + 1] - r1[i]) / 99;
    CHECK(near(r2[0], expect, 1e-6L));
    CHECK(near(r2[1], expect, 1e-6L));
    CHECK(near(r2[0], r2[1], 1e-6L));
  };
  limits(cube, 1);
  limits(c1_at, 3 * g);
  limits(c2_at, 3 * g * g - 3 * g1);
}

TEST_CASE("digamma") {
  CHECK(near(digamma(1), -0.57721566490153286061L, 1e-15L));
  CHECK(near(digamma(0.5L), -2 * std::log(2.0L) - 0.57721566490153286061L, 1e-15L));
  CHECK(near(digamma(2), 1 - 0.57721566490153286061L, 1e-15L));
  // recurrence psi(x+1) = psi(x) + 1/x off the shifted region
  for (real x : {0.125L, 0.3L, 0.75L, 1.5L, 7.25L})
    CHECK(near(digamma(x + 1), digamma(x) + 1 / x, 1e-17L));
  CHECK_THROWS_AS(digamma(0), std::domain_error);
  CHECK_THROWS_AS(digamma(-3), std::domain_error);
}

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "twofrac/asymptotics.hpp"
#include "twofrac/count.hpp"
#include "twofrac/dirichlet.hpp"
#include "twofrac/experiment.hpp"
#include "twofrac/residue.hpp"

namespace py = pybind11;
using namespace twofrac;

namespace {

// long double -> double at the boundary; python floats are doubles anyway
double d(real v) { return static_cast<double>(v); }

py::dict coeffs_dict(u64 a, bool allow_small_a) {
  const auto c = coefficients(Modulus::of(a), constants_bundle(), allow_small_a);
  py::dict out;
  out["a"] = c.a;
  out["leading"] = d(c.leading);
  out["c1"] = d(c.c1);
  out["c0_refined"] = d(c.c0_refined);
  out["c0_coarse_main"] = d(c.c0_coarse_main);
  out["g1_ratio"] = d(c.g1_ratio);
  out["lemma2_sum"] = d(c.lemma2_sum);
  out["lemma3_sum"] = d(c.lemma3_sum);
  return out;
}

py::dict constants_dict() {
  const SpecialConstants c = constants_bundle();
  py::dict out;
  out["gamma"] = d(c.gamma);
  out["gamma1"] = d(c.gamma1);
  out["zeta2"] = d(c.zeta2);
  out["zeta2_prime"] = d(c.zeta2_prime);
  out["zeta2_doubleprime"] = d(c.zeta2_doubleprime);
  return out;
}

py::dict moment_report_dict(const MomentReport& r) {
  py::dict out;
  out["a"] = r.a;
  out["numeric"] = d(r.numeric);
  out["closed_form"] = d(r.closed_form);
  out["residual"] = d(r.residual);
  out["scaled_residual"] = d(r.scaled_residual);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "counting a/n = 1/x + 1/y and the mean-value asymptotics";

  m.def(
      "count_direct", [](u64 n, u64 a) { return count_direct(n, a).r; },
      py::arg("n"), py::arg("a"),
      "ordered solutions of a/n = 1/x + 1/y, window-scan algorithm");
  m.def(
      "count_divisor",
      [](u64 n, u64 a) { return count_divisor(n, a, factorize(n)).r; },
      py::arg("n"), py::arg("a"),
      "same count via divisors of n^2 in the class -n mod a (gcd(n,a)=1)");
  m.def(
      "sum_exact",
      [](u64 n_max, u64 a, unsigned threads) {
        return sum_exact(n_max, a, threads).s;
      },
      py::arg("N"), py::arg("a"), py::arg("threads") = 1,
      "S(N;a) = sum of R(n;a) over n <= N coprime to a");
  m.def(
      "sum_grid",
      [](const std::vector<u64>& checkpoints, u64 a, unsigned threads) {
        std::vector<u64> out;
        for (const auto& rec : sum_grid(checkpoints, a, threads))
          out.push_back(rec.s);
        return out;
      },
      py::arg("checkpoints"), py::arg("a"), py::arg("threads") = 1);

  m.def("constants", &constants_dict, "gamma, gamma1, zeta2, zeta2', zeta2''");
  m.def("coefficients", &coeffs_dict, py::arg("a"),
        py::arg("allow_small_a") = false,
        "leading factor, c1, refined and coarse c0, prime-sum diagnostics");
  m.def(
      "main_term",
      [](u64 n_max, u64 a, bool allow_small_a) {
        return d(main_term(n_max, Modulus::of(a), constants_bundle(), allow_small_a));
      },
      py::arg("N"), py::arg("a"), py::arg("allow_small_a") = false);
  m.def(
      "delta_envelope",
      [](u64 n_max, u64 a) {
        return d(delta_envelope(n_max, Modulus::of(a)).envelope);
      },
      py::arg("N"), py::arg("a"));

  m.def(
      "l_at_one",
      [](u64 a, std::size_t index) {
        const auto chars = character_group(a);
        if (index >= chars.size())
          throw std::out_of_range("character index out of range");
        const cplx v = l_at_one(chars[index]);
        return std::complex<double>(static_cast<double>(v.real()),
                                    static_cast<double>(v.imag()));
      },
      py::arg("a"), py::arg("index"),
      "L(1, chi) for the index-th character mod a (lexicographic order)");
  m.def("moment_nonprincipal", [](u64 a) { return d(moment_nonprincipal(a)); },
        py::arg("a"));
  m.def("moment_odd", [](u64 a) { return d(moment_odd(a)); }, py::arg("a"));
  m.def("moment_signed", [](u64 a) { return d(moment_signed(a)); }, py::arg("a"));
  m.def(
      "verify_prop2",
      [](u64 a) { return moment_report_dict(verify_prop2(a, constants_bundle())); },
      py::arg("a"));
  m.def("verify_prop3", [](u64 a) { return moment_report_dict(verify_prop3(a)); },
        py::arg("a"));

  m.def(
      "laurent_zeta_cubed",
      [] {
        const auto c = laurent_zeta_cubed();
        return py::make_tuple(d(c[0]), d(c[1]), d(c[2]));
      },
      "(c_-3, c_-2, c_-1) of zeta^3 at s = 1 by contour extraction");
  m.def(
      "verify_residue_identity",
      [](u64 n_max, u64 a) {
        const auto rep = verify_residue_identity(n_max, Modulus::of(a));
        py::dict out;
        out["numeric"] = d(rep.numeric);
        out["closed_form"] = d(rep.closed_form);
        out["abs_err"] = d(rep.abs_err);
        out["rel_err"] = d(rep.rel_err);
        return out;
      },
      py::arg("N"), py::arg("a"));
  m.def(
      "verify_s_decomposition",
      [](u64 n_max, u64 a, unsigned threads) {
        const auto rep = verify_s_decomposition(n_max, Modulus::of(a), threads);
        py::dict out;
        out["a"] = rep.a;
        out["N"] = rep.n_max;
        out["s_exact"] = rep.s_exact;
        out["s1"] = d(rep.s1);
        out["s2"] = d(rep.s2);
        out["delta_obs"] = d(rep.delta_obs);
        out["envelope"] = d(rep.envelope);
        out["ratio"] = d(rep.ratio);
        return out;
      },
      py::arg("N"), py::arg("a"), py::arg("threads") = 1);
}

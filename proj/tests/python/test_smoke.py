"""Smoke tests for the python bindings."""

import math

import pytest

import twofrac


def test_counting():
    assert twofrac.count_direct(5, 3) == 2
    assert twofrac.count_divisor(8, 3) == 4
    for n in range(1, 200):
        for a in (1, 3, 4, 7):
            if math.gcd(n, a) == 1:
                assert twofrac.count_direct(n, a) == twofrac.count_divisor(n, a)


def test_count_divisor_rejects_common_factor():
    with pytest.raises(ValueError):
        twofrac.count_divisor(6, 3)


def test_sums():
    assert twofrac.sum_exact(10, 3) == 14
    assert twofrac.sum_exact(10, 1) == 48
    assert twofrac.sum_grid([1, 10, 100], 3) == [0, 14, 284]
    assert twofrac.sum_exact(2000, 5, threads=4) == twofrac.sum_exact(2000, 5)


def test_constants():
    c = twofrac.constants()
    assert c["zeta2"] == pytest.approx(math.pi**2 / 6, abs=1e-12)
    assert 0.57 < c["gamma"] < 0.58
    assert -0.08 < c["gamma1"] < -0.07
    assert c["zeta2_prime"] < 0 < c["zeta2_doubleprime"]


def test_coefficients():
    c = twofrac.coefficients(3)
    assert c["a"] == 3
    assert c["c1"] == pytest.approx(6.489668683457603, abs=1e-10)
    assert c["leading"] == pytest.approx(1 / (2 * math.pi**2), abs=1e-12)
    with pytest.raises(ValueError):
        twofrac.coefficients(1)
    assert twofrac.coefficients(1, allow_small_a=True)["g1_ratio"] == 0.0


def test_main_term_and_envelope():
    m = twofrac.main_term(10000, 3)
    assert m == pytest.approx(75093.068, abs=0.01)
    assert twofrac.delta_envelope(10000, 3) > 0
    # exact sum stays within the (generous) desk-scale envelope
    s = twofrac.sum_exact(10000, 3)
    assert abs(s - m) < twofrac.delta_envelope(10000, 3)


def test_moments():
    assert twofrac.moment_odd(3) == pytest.approx(math.pi**2 / 27, abs=1e-12)
    assert twofrac.moment_signed(4) == pytest.approx(-math.pi**2 / 16, abs=1e-12)
    rep = twofrac.verify_prop3(7)
    assert abs(rep["residual"]) < 1e-9
    rep2 = twofrac.verify_prop2(7)
    assert abs(rep2["scaled_residual"]) < 10
    l31 = twofrac.l_at_one(3, 1)
    assert abs(l31 - math.pi / (3 * math.sqrt(3))) < 1e-12


def test_residue_lab():
    c3, c2, c1 = twofrac.laurent_zeta_cubed()
    assert c3 == pytest.approx(1.0, abs=1e-9)
    assert c2 == pytest.approx(3 * 0.5772156649015329, abs=1e-8)
    rep = twofrac.verify_residue_identity(1000, 3)
    assert rep["rel_err"] < 1e-6
    dec = twofrac.verify_s_decomposition(10000, 3)
    assert dec["s_exact"] == 75130
    assert abs(dec["ratio"]) < 0.01

"""Counting representations of a/n as a sum of two unit fractions and
checking the exact counts against the mean-value asymptotics."""

from ._core import (
    coefficients,
    constants,
    count_direct,
    count_divisor,
    delta_envelope,
    l_at_one,
    laurent_zeta_cubed,
    main_term,
    moment_nonprincipal,
    moment_odd,
    moment_signed,
    sum_exact,
    sum_grid,
    verify_prop2,
    verify_prop3,
    verify_residue_identity,
    verify_s_decomposition,
)

__all__ = [
    "coefficients",
    "constants",
    "count_direct",
    "count_divisor",
    "delta_envelope",
    "l_at_one",
    "laurent_zeta_cubed",
    "main_term",
    "moment_nonprincipal",
    "moment_odd",
    "moment_signed",
    "sum_exact",
    "sum_grid",
    "verify_prop2",
    "verify_prop3",
    "verify_residue_identity",
    "verify_s_decomposition",
]

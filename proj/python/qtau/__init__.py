"""Exact quantum 3-manifold invariants (tau^g, tau^{Pg}, tau^G) from surgery
presentations, with theorem checks and Ohtsuki perturbative series."""

from ._qtau import (
    CheckError,
    InvalidInputError,
    ResourceError,
    braid_jones,
    gauss_sum_vanishes,
    kirby_equivalence_check,
    legendre,
    ohtsuki_series,
    root_system,
    s_matrix_check,
    splitting_check,
    tau,
    tau_lens_closed_form,
)

__all__ = [
    "CheckError",
    "InvalidInputError",
    "ResourceError",
    "braid_jones",
    "gauss_sum_vanishes",
    "kirby_equivalence_check",
    "legendre",
    "ohtsuki_series",
    "root_system",
    "s_matrix_check",
    "splitting_check",
    "tau",
    "tau_lens_closed_form",
]

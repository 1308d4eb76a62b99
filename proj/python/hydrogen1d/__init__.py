"""One-dimensional hydrogen atom: closed-form states, extension solver, checks."""

from ._core import (
    BracketExhausted,
    IntegrationError,
    RangeError,
    SeriesError,
    check_parseval,
    energy,
    kummer_1f1,
    laguerre_kummer_constant,
    laguerre_paper,
    laguerre_std,
    normalization,
    phi,
    probability_current,
    psi,
    residue_kernel,
    run_suite,
    semiclassical_time_ratio,
    shoot,
    solve_spectrum,
)

__all__ = [
    "BracketExhausted",
    "IntegrationError",
    "RangeError",
    "SeriesError",
    "check_parseval",
    "energy",
    "kummer_1f1",
    "laguerre_kummer_constant",
    "laguerre_paper",
    "laguerre_std",
    "normalization",
    "phi",
    "probability_current",
    "psi",
    "residue_kernel",
    "run_suite",
    "semiclassical_time_ratio",
    "shoot",
    "solve_spectrum",
]

"""Numerical tolerances used by the oracles and the acceptance suite.

Exact verdicts never depend on these; they only gate float corroboration.
"""
from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    # relative to 1 + sum |f(a)|
    primitivity: float = 1e-9
    # residual allowed when snapping a float character sum back to a rational
    rational_rounding: float = 1e-9
    projection: float = 1e-9
    l1_vanishing: float = 1e-9
    l1_accuracy: float = 1e-11
    ls_vanishing: float = 1e-8
    decomposition: float = 1e-8
    convention_match: float = 1e-5
    parseval: float = 1e-9
    digamma_reflection: float = 1e-10
    derivative_fd: float = 1e-7
    smooth_sum: float = 1e-6
    default_truncation: int = 10**6


TOL = Tolerances()

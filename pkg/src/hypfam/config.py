"""Shared evaluation settings."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class EvalConfig:
    """Tolerances and caps used by every numeric routine.

    quad_tol    absolute error target for adaptive quadrature
    series_tol  truncation threshold for power-series tails
    max_terms   hard cap on series terms
    max_depth   bisection depth cap for adaptive quadrature
    """

    quad_tol: float = 1e-12
    series_tol: float = 1e-15
    max_terms: int = 100_000
    max_depth: int = 60

    def __post_init__(self):
        if not (self.quad_tol > 0.0 and self.series_tol > 0.0):
            raise ValueError("tolerances must be strictly positive")
        if not (self.max_terms > 0 and self.max_depth > 0):
            raise ValueError("caps must be strictly positive integers")


DEFAULT_CONFIG = EvalConfig()

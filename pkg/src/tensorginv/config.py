"""Numerical thresholds used by rank decisions and equality checks."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Optional, Sequence

import numpy as np

EPS = float(np.finfo(np.float64).eps)


@dataclass(frozen=True)
class ToleranceConfig:
    """Rank cutoff and equality thresholds.

    Parameters
    ----------
    rank_rtol : float, optional
        Singular values ``s_i <= rank_rtol * s_0`` count as zero. ``None``
        means ``max(rows, cols) * eps`` of the matrix being ranked.
    eq_atol : float
        Absolute part of every equality / residual bound.
    eq_rtol : float
        Relative part of every equality / residual bound.
    svd_method : {"jacobi", "lapack"}
        Backend for every singular value decomposition.
    """

    rank_rtol: Optional[float] = None
    eq_atol: float = 1e-10
    eq_rtol: float = 1e-8
    svd_method: str = "jacobi"

    def __post_init__(self):
        if self.svd_method not in ("jacobi", "lapack"):
            raise ValueError(f"unknown svd_method {self.svd_method!r}")
        for name in ("rank_rtol", "eq_atol", "eq_rtol"):
            value = getattr(self, name)
            if value is None:
                continue
            if not np.isfinite(value) or value < 0:
                raise ValueError(f"{name} must be a finite nonnegative number, got {value!r}")

    def rank_cutoff(self, dims: Sequence[int]) -> float:
        """Relative singular-value cutoff for a matrix with ``dims``."""
        if self.rank_rtol is not None:
            return self.rank_rtol
        return max(dims) * EPS if len(dims) else EPS

    def bound(self, scale: float = 0.0) -> float:
        """Mixed absolute/relative bound ``eq_atol + eq_rtol * scale``."""
        return self.eq_atol + self.eq_rtol * scale

    def to_dict(self) -> dict:
        return asdict(self)


DEFAULT_TOL = ToleranceConfig()


def resolve(tol: Optional[ToleranceConfig]) -> ToleranceConfig:
    return DEFAULT_TOL if tol is None else tol

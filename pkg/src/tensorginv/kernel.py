"""Matrix-level numerics that every tensor inverse reduces to.

Matrices are plain 2-D complex :class:`numpy.ndarray` objects. The SVD is a
one-sided (Hestenes) Jacobi iteration on the columns, vectorized over a
round-robin schedule so that each step rotates ``n/2`` disjoint column
pairs at once. LAPACK (``numpy.linalg.svd``) is available as an alternative
backend and is used by the test-suite as an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np

from .config import EPS, ToleranceConfig, resolve
from .errors import ConvergenceFailure, ShapeMismatch

MAX_SWEEPS = 100
SVD_METHODS = ("jacobi", "lapack")


@dataclass(frozen=True)
class SvdResult:
    """Thin SVD ``a = u @ diag(s) @ v.conj().T``.

    ``u`` is ``rows x r``, ``v`` is ``cols x r`` and ``s`` is nonincreasing,
    with ``r = min(rows, cols)``.
    """

    u: np.ndarray
    s: np.ndarray
    v: np.ndarray

    def reconstruct(self) -> np.ndarray:
        return (self.u * self.s) @ self.v.conj().T


def as_matrix(a) -> np.ndarray:
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise ShapeMismatch(f"expected a 2-D matrix, got array with shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


@lru_cache(maxsize=64)
def _round_robin(n: int) -> tuple:
    """Tournament schedule: ``n - 1`` rounds of ``n/2`` disjoint pairs (``n`` even)."""
    players = list(range(n))
    rounds = []
    for _ in range(n - 1):
        half = n // 2
        p = np.array([min(players[i], players[n - 1 - i]) for i in range(half)])
        q = np.array([max(players[i], players[n - 1 - i]) for i in range(half)])
        rounds.append((p, q))
        players = [players[0], players[-1]] + players[1:-1]
    return tuple(rounds)


def _orthonormal_complement(u: np.ndarray, missing: int) -> np.ndarray:
    """``missing`` unit vectors orthogonal to the columns of ``u`` and each other."""
    rows = u.shape[0]
    basis = [u[:, j] for j in range(u.shape[1])]
    extra = []
    for i in range(rows):
        if len(extra) == missing:
            break
        w = np.zeros(rows, dtype=np.complex128)
        w[i] = 1.0
        for _ in range(2):  # re-orthogonalize once for stability
            for b in basis + extra:
                w = w - b * np.vdot(b, w)
        nrm = np.linalg.norm(w)
        if nrm > 0.5:
            extra.append(w / nrm)
    return np.column_stack(extra) if extra else np.zeros((rows, 0), dtype=np.complex128)


def _jacobi_tall(a: np.ndarray, max_sweeps: int):
    m, n = a.shape
    npad = n + (n % 2)
    g = np.zeros((m, npad), dtype=np.complex128)
    g[:, :n] = a
    v = np.eye(npad, dtype=np.complex128)
    tol = max(m, 1) * EPS
    # columns below this squared norm are numerically zero and never rotated
    negligible = (EPS * EPS * np.linalg.norm(a)) ** 2
    schedule = _round_robin(npad) if npad > 1 else ()

    for _ in range(max_sweeps):
        rotated = False
        for p, q in schedule:
            gp = g[:, p]
            gq = g[:, q]
            alpha = np.einsum("ij,ij->j", gp.conj(), gp).real
            beta = np.einsum("ij,ij->j", gq.conj(), gq).real
            gamma = np.einsum("ij,ij->j", gp.conj(), gq)
            mag = np.abs(gamma)
            active = (mag > tol * np.sqrt(alpha * beta)) & (np.minimum(alpha, beta) > negligible)
            if not active.any():
                continue
            rotated = True
            p, q = p[active], q[active]
            gp, gq = gp[:, active], gq[:, active]
            mag = mag[active]
            phase = gamma[active] / mag
            zeta = (beta[active] - alpha[active]) / (2.0 * mag)
            t = np.where(zeta >= 0, 1.0, -1.0) / (np.abs(zeta) + np.hypot(1.0, zeta))
            c = 1.0 / np.sqrt(1.0 + t * t)
            s = c * t
            gq = gq * phase.conj()
            g[:, p] = c * gp - s * gq
            g[:, q] = s * gp + c * gq
            vp = v[:, p]
            vq = v[:, q] * phase.conj()
            v[:, p] = c * vp - s * vq
            v[:, q] = s * vp + c * vq
        if not rotated:
            break
    else:
        raise ConvergenceFailure(f"one-sided Jacobi SVD did not converge in {max_sweeps} sweeps")

    g = g[:, :n]
    v = v[:n, :n]
    sv = np.linalg.norm(g, axis=0)
    sv[sv * sv <= negligible] = 0.0
    order = np.argsort(-sv, kind="stable")
    sv, g, v = sv[order], g[:, order], v[:, order]
    nonzero = sv > 0
    u = np.zeros((m, n), dtype=np.complex128)
    u[:, nonzero] = g[:, nonzero] / sv[nonzero]
    if not nonzero.all():
        u[:, ~nonzero] = _orthonormal_complement(u[:, nonzero], int((~nonzero).sum()))
    return u, sv, v


def svd(a, method: str = "jacobi", max_sweeps: int = MAX_SWEEPS) -> SvdResult:
    """Thin singular value decomposition.

    Parameters
    ----------
    a : array_like
        Complex ``rows x cols`` matrix.
    method : {"jacobi", "lapack"}
        ``"jacobi"`` runs the one-sided Jacobi iteration capped at
        ``max_sweeps``; ``"lapack"`` defers to :func:`numpy.linalg.svd`.

    Raises
    ------
    ConvergenceFailure
        If the Jacobi iteration exceeds ``max_sweeps``.
    """
    m = as_matrix(a)
    rows, cols = m.shape
    if method == "lapack":
        try:
            u, s, vh = np.linalg.svd(m, full_matrices=False)
        except np.linalg.LinAlgError as exc:
            raise ConvergenceFailure(str(exc)) from exc
        return SvdResult(u, s, vh.conj().T)
    if method != "jacobi":
        raise ValueError(f"unknown SVD method {method!r}; expected one of {SVD_METHODS}")
    if rows == 0 or cols == 0:
        r = min(rows, cols)
        return SvdResult(np.zeros((rows, r), complex), np.zeros(r), np.zeros((cols, r), complex))
    if rows >= cols:
        u, s, v = _jacobi_tall(m, max_sweeps)
    else:
        v, s, u = _jacobi_tall(m.conj().T, max_sweeps)
    return SvdResult(u, s, v)


def singular_values(a, method: str = "jacobi") -> np.ndarray:
    """Singular values only; LAPACK skips the singular vectors."""
    if method == "lapack":
        m = as_matrix(a)
        try:
            return np.linalg.svd(m, compute_uv=False)
        except np.linalg.LinAlgError as exc:
            raise ConvergenceFailure(str(exc)) from exc
    return svd(a, method).s


def numerical_rank(s, dims, tol: Optional[ToleranceConfig] = None, scale: Optional[float] = None) -> int:
    """Count singular values above ``rank_rtol * max(s[0], scale)``.

    ``s`` must be sorted nonincreasingly; ``dims`` is the ``(rows, cols)``
    pair used for the default cutoff. ``scale`` supplies a reference
    magnitude when ``s`` belongs to a computed product whose round-off is
    set by its factors rather than by its own norm.
    """
    tol = resolve(tol)
    s = np.asarray(s, dtype=np.float64)
    ref = max(float(s[0]) if s.size else 0.0, scale or 0.0)
    if s.size == 0 or ref <= 0:
        return 0
    return int(np.count_nonzero(s > tol.rank_cutoff(dims) * ref))


def matrix_rank(a, tol: Optional[ToleranceConfig] = None, scale: Optional[float] = None) -> int:
    tol = resolve(tol)
    m = as_matrix(a)
    return numerical_rank(singular_values(m, tol.svd_method), m.shape, tol, scale)


def pinv_matrix(
    a,
    tol: Optional[ToleranceConfig] = None,
    rank: Optional[int] = None,
) -> np.ndarray:
    """Moore-Penrose inverse ``V diag(1/s) U*`` over the retained singular values.

    ``rank`` overrides the numerical rank decision; callers that already know
    the exact rank (e.g. from an index computation) pass it so that powers
    carrying round-off in their null directions are truncated consistently.
    """
    tol = resolve(tol)
    m = as_matrix(a)
    res = svd(m, tol.svd_method)
    r = numerical_rank(res.s, m.shape, tol) if rank is None else int(rank)
    r = min(r, int(np.count_nonzero(res.s > 0)))
    return (res.v[:, :r] / res.s[:r]) @ res.u[:, :r].conj().T


def full_rank_factorization(a, tol: Optional[ToleranceConfig] = None):
    """Return ``(P, Q)`` with ``a = P @ Q``, ``P`` of full column rank and ``Q`` of full row rank.

    Built from the rank-truncated SVD: ``P = U_r diag(s_r)``, ``Q = V_r*``.
    """
    tol = resolve(tol)
    m = as_matrix(a)
    res = svd(m, tol.svd_method)
    r = numerical_rank(res.s, m.shape, tol)
    return res.u[:, :r] * res.s[:r], res.v[:, :r].conj().T


def range_subset(b, a, tol: Optional[ToleranceConfig] = None) -> bool:
    """``R(b) ⊆ R(a)`` decided by ``rank([a | b]) == rank(a)``."""
    mb, ma = as_matrix(b), as_matrix(a)
    if mb.shape[0] != ma.shape[0]:
        raise ShapeMismatch(f"row counts differ: {mb.shape[0]} vs {ma.shape[0]}")
    return matrix_rank(np.hstack([ma, mb]), tol) == matrix_rank(ma, tol)


def matmul(a, b) -> np.ndarray:
    ma, mb = as_matrix(a), as_matrix(b)
    if ma.shape[1] != mb.shape[0]:
        raise ShapeMismatch(f"cannot multiply {ma.shape} by {mb.shape}")
    return ma @ mb


def matpow(a, k: int) -> np.ndarray:
    """``a**k`` by repeated multiplication; ``k = 0`` gives the identity."""
    m = as_matrix(a)
    if m.shape[0] != m.shape[1]:
        raise ShapeMismatch(f"matrix power needs a square matrix, got {m.shape}")
    if k < 0:
        raise ValueError("exponent must be nonnegative")
    out = np.eye(m.shape[0], dtype=np.complex128)
    for _ in range(k):
        out = out @ m
    return out


def madd(a, b) -> np.ndarray:
    ma, mb = as_matrix(a), as_matrix(b)
    if ma.shape != mb.shape:
        raise ShapeMismatch(f"cannot add {ma.shape} and {mb.shape}")
    return ma + mb


def mconj_transpose(a) -> np.ndarray:
    return as_matrix(a).conj().T

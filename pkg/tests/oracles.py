"""Reference computations that do not go through the library."""

from __future__ import annotations

import numpy as np

from builders import cnormal


def random_matrix(rng, max_dim=8):
    rows, cols = rng.integers(1, max_dim + 1, size=2)
    r = int(rng.integers(0, min(rows, cols) + 1))
    m = cnormal(rng, rows, r) @ cnormal(rng, r, cols)
    if rng.random() < 0.2:
        m = np.round(3 * m.real)  # exact small integers, often rank-deficient
    return m


def penrose_residuals(a, x):
    """Relative residuals of the four Penrose equations for matrices."""
    rel = lambda d, ref: np.abs(d).max() / max(1.0, np.abs(ref).max())  # noqa: E731
    ax, xa = a @ x, x @ a
    return (
        rel(ax @ a - a, a),
        rel(xa @ x - x, x),
        rel(ax.conj().T - ax, ax),
        rel(xa.conj().T - xa, xa),
    )


def brute_einstein(a: np.ndarray, b: np.ndarray, n_left: int, n_mid: int) -> np.ndarray:
    """Index-by-index contraction of the middle modes."""
    left, mid, right = a.shape[:n_left], a.shape[n_left:], b.shape[n_mid:]
    out = np.zeros(left + right, dtype=complex)
    for i in np.ndindex(*left):
        for k in np.ndindex(*right):
            out[i + k] = sum(a[i + j] * b[j + k] for j in np.ndindex(*mid))
    return out

"""Residual checks of a candidate inverse against every defining equation.

Tags and the equations they test (``X`` is the candidate, ``k`` the index)::

    1T   A X A = A           5T   A X = X A
    2T   X A X = X           1kT  A^(k+1) X = A^k
    3T   (A X)* = A X        C1   X A^2 = A
    4T   (X A)* = X A        C2   A X^2 = X
                             EP   X A^(k+1) = A^k

Each defect is measured in the entrywise infinity norm and divided by
``max(1, |reference|_inf)``, the reference being the right-hand side.
A tag is satisfied when its residual is at most ``eq_atol + eq_rtol``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional

import numpy as np

from .config import ToleranceConfig, resolve
from .errors import ShapeMismatch
from .inverses import InverseKind, tensor_index
from .tensor import DenseTensor, rsh

TAGS = ("1T", "2T", "3T", "4T", "5T", "1kT", "C1", "C2", "EP")
SQUARE_TAGS = ("5T", "1kT", "C1", "C2", "EP")

ONE_FOUR = "OneFour"
ONE_TWO_THREE = "OneTwoThree"

# defining systems, checked in classify()
SYSTEMS = {
    InverseKind.INNER.value: ("1T",),
    InverseKind.REFLEXIVE.value: ("1T", "2T"),
    InverseKind.ONE_THREE.value: ("1T", "3T"),
    ONE_FOUR: ("1T", "4T"),
    ONE_TWO_THREE: ("1T", "2T", "3T"),
    InverseKind.MOORE_PENROSE.value: ("1T", "2T", "3T", "4T"),
    InverseKind.GROUP.value: ("1T", "2T", "5T"),
    InverseKind.DRAZIN.value: ("1kT", "2T", "5T"),
    InverseKind.CORE.value: ("C1", "C2", "3T"),
    InverseKind.CORE_EP.value: ("EP", "C2", "3T"),
}
INDEX_ONE_ONLY = {InverseKind.GROUP.value, InverseKind.CORE.value}


@dataclass(frozen=True)
class AxiomReport:
    """Per-tag residuals; square-only tags are ``None`` for rectangular ``A``."""

    residuals: Dict[str, Optional[float]]
    satisfied: Dict[str, Optional[bool]]
    index_k: Optional[int]

    def holds(self, *tags: str) -> bool:
        return all(self.satisfied.get(t) is True for t in tags)

    def to_dict(self) -> dict:
        return {
            "residuals": dict(self.residuals),
            "satisfied": dict(self.satisfied),
            "index_k": self.index_k,
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "AxiomReport":
        return cls(dict(doc["residuals"]), dict(doc["satisfied"]), doc.get("index_k"))


def _norm(m: np.ndarray) -> float:
    return float(np.abs(m).max()) if m.size else 0.0


def _rel(lhs: np.ndarray, rhs: np.ndarray) -> float:
    return _norm(lhs - rhs) / max(1.0, _norm(rhs))


def _power(m: np.ndarray, k: int) -> np.ndarray:
    out = np.eye(m.shape[0], dtype=np.complex128)
    for _ in range(k):
        out = out @ m
    return out


def check(
    a: DenseTensor,
    x: DenseTensor,
    k: Optional[int] = None,
    tol: Optional[ToleranceConfig] = None,
) -> AxiomReport:
    """Evaluate every defining equation for the pair ``(A, X)``.

    ``k`` defaults to ``ind(A)`` for square ``A``; it is ignored otherwise.
    The argument order matters: ``check(a, x)`` and ``check(x, a)`` test
    different things.
    """
    tol = resolve(tol)
    if x.shape != a.shape.swapped():
        raise ShapeMismatch(f"candidate shape {x.shape} does not match {a.shape.swapped()}")
    ma, mx = rsh(a), rsh(x)
    ax, xa = ma @ mx, mx @ ma
    res: Dict[str, Optional[float]] = {
        "1T": _rel(ax @ ma, ma),
        "2T": _rel(xa @ mx, mx),
        "3T": _rel(ax.conj().T, ax),
        "4T": _rel(xa.conj().T, xa),
    }
    if a.is_square:
        if k is None:
            k = tensor_index(a, tol)
        ak = _power(ma, k)
        ak1 = ak @ ma
        res["5T"] = _norm(ax - xa) / max(1.0, _norm(ax), _norm(xa))
        res["1kT"] = _rel(ak1 @ mx, ak)
        res["C1"] = _rel(mx @ ma @ ma, ma)
        res["C2"] = _rel(ma @ mx @ mx, mx)
        res["EP"] = _rel(mx @ ak1, ak)
    else:
        k = None
        res.update({t: None for t in SQUARE_TAGS})
    bound = tol.eq_atol + tol.eq_rtol
    sat = {t: (None if r is None else bool(r <= bound)) for t, r in res.items()}
    return AxiomReport({t: res[t] for t in TAGS}, {t: sat[t] for t in TAGS}, k)


def classify_report(report: AxiomReport) -> set:
    labels = set()
    for label, tags in SYSTEMS.items():
        if label in INDEX_ONE_ONLY and report.index_k != 1:
            continue
        if report.holds(*tags):
            labels.add(label)
    return labels


def classify(
    a: DenseTensor,
    x: DenseTensor,
    tol: Optional[ToleranceConfig] = None,
    k: Optional[int] = None,
) -> set:
    """Names of every inverse class ``X`` belongs to.

    Labels are the :class:`InverseKind` values plus ``"OneFour"`` and
    ``"OneTwoThree"``. Group and core memberships additionally require
    ``ind(A) == 1``.
    """
    return classify_report(check(a, x, k, tol))

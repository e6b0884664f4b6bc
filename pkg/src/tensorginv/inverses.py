"""Generalized inverses of tensors under the Einstein product.

Every construction is carried out on ``rsh(A)`` and mapped back, which is
legitimate because ``rsh`` turns ``*_N`` into ordinary matrix products.

Pseudoinverses of powers ``A^j`` with ``j >= ind(A)`` are truncated at the
rank found during the index search (``rank(A^k)``), not re-decided from
their own singular values. Powers amplify round-off in the nilpotent part
and a fresh cutoff can then pick up spurious directions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Sequence, Union

import numpy as np

from . import kernel
from .config import ToleranceConfig, resolve
from .errors import BadExponent, HypothesisViolated, IndexNotFound, NotIndexOne, ShapeMismatch
from .tensor import (
    DenseTensor,
    approx_equal,
    identity_tensor,
    max_abs,
    rsh,
    rsh_inverse,
)

SeedLike = Union[None, int, np.random.Generator]


class InverseKind(str, Enum):
    MOORE_PENROSE = "MoorePenrose"
    GROUP = "Group"
    DRAZIN = "Drazin"
    CORE = "Core"
    CORE_EP = "CoreEP"
    INNER = "Inner"
    REFLEXIVE = "Reflexive"
    ONE_THREE = "OneThree"


class CoreFormula(str, Enum):
    """Representations of the core inverse; all give the same tensor."""

    GROUP_MP = "group_mp"  # A^# A A^+
    PINV_OF_A2_ADAG = "pinv_a2_adag"  # (A^2 A^+)^+
    FRF = "frf"  # P (P* A P)^-1 P*, A = P Q full rank
    ONE_THREE = "one_three"  # A^# A X, X in A{1,3}
    U_ASTAR = "u_astar"  # A (A* A^2)^(1) A*


class CoreEPFormula(str, Enum):
    """Representations of the core-EP inverse for any ``l >= ind(A)``."""

    DRAZIN_MP = "drazin_mp"  # A^D A^l (A^l)^+
    POWER_PINV = "power_pinv"  # A^l (A^(l+1))^+
    POWER_CORE = "power_core"  # A^(l-1) (A^l)^core


@dataclass(frozen=True)
class InverseResult:
    """A computed inverse together with how it was obtained."""

    value: DenseTensor
    kind: InverseKind
    formula: str
    index_used: Optional[int] = None
    ranks_of_powers: tuple = field(default_factory=tuple)


@dataclass(frozen=True)
class SumHypotheses:
    """Infinity norms of ``A*B``, ``A^* * B`` and ``B*A``.

    ``scale`` is ``max|A| * max|B|``; a product counts as zero when its
    norm is within ``tol.bound(scale)``.
    """

    ab_zero: float
    astar_b_zero: float
    ba_zero: float
    scale: float = 1.0

    def failing(self, required: Sequence[str], tol: Optional[ToleranceConfig] = None) -> list:
        tol = resolve(tol)
        return [name for name in required if getattr(self, name) > tol.bound(self.scale)]

    def to_dict(self) -> dict:
        return {
            "ab_zero": self.ab_zero,
            "astar_b_zero": self.astar_b_zero,
            "ba_zero": self.ba_zero,
            "scale": self.scale,
        }


def _rng(seed: SeedLike) -> np.random.Generator:
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def _require_square(a: DenseTensor, what: str):
    if not a.is_square:
        raise ShapeMismatch(f"{what} needs a square tensor, got {a.shape}")


def _matpow(m: np.ndarray, k: int) -> np.ndarray:
    out = np.eye(m.shape[0], dtype=np.complex128)
    for _ in range(k):
        out = out @ m
    return out


def _power_rank(power: np.ndarray, scale: float, tol: ToleranceConfig) -> int:
    # a computed A^j carries round-off of order eps * |A|^j, so its rank is
    # judged against |A|^j; otherwise a vanishing power would look full rank
    return kernel.matrix_rank(power, tol, scale)


def index_profile(a: DenseTensor, tol: Optional[ToleranceConfig] = None):
    """Return ``(k, ranks)`` where ``ranks[j] = rshrank(A^(j+1))`` for ``j <= k``.

    ``k`` is the smallest positive integer with ``rshrank(A^k) ==
    rshrank(A^(k+1))``. The search stops at ``prod(left_modes)``.

    Raises
    ------
    IndexNotFound
        When ranks increase along the power sequence (round-off straddling
        the cutoff) or no stabilization occurs within the bound.
    """
    _require_square(a, "tensor index")
    tol = resolve(tol)
    base = rsh(a)
    bound = a.shape.rows
    norm = float(np.linalg.norm(base, 2)) if base.size else 0.0
    ranks = [_power_rank(base, norm, tol)]
    power = base
    for k in range(1, bound + 1):
        power = power @ base
        ranks.append(_power_rank(power, norm ** (k + 1), tol))
        if ranks[-1] > ranks[-2]:
            raise IndexNotFound(f"rank sequence {ranks} is not monotone; numerical rank is unreliable")
        if ranks[-1] == ranks[-2]:
            return k, tuple(ranks)
    raise IndexNotFound(f"ranks {ranks} did not stabilize within {bound} powers")


def tensor_index(a: DenseTensor, tol: Optional[ToleranceConfig] = None) -> int:
    """Smallest ``k >= 1`` with ``rshrank(A^k) == rshrank(A^(k+1))``."""
    return index_profile(a, tol)[0]


def _pinv(m: np.ndarray, tol: ToleranceConfig, rank: Optional[int] = None) -> np.ndarray:
    return kernel.pinv_matrix(m, tol, rank=rank)


def moore_penrose(a: DenseTensor, tol: Optional[ToleranceConfig] = None) -> InverseResult:
    """Moore-Penrose inverse, the unique solution of the four Penrose equations."""
    tol = resolve(tol)
    value = rsh_inverse(_pinv(rsh(a), tol), a.shape.swapped())
    return InverseResult(value, InverseKind.MOORE_PENROSE, "svd")


def _group_matrix(m: np.ndarray, rank: int, tol: ToleranceConfig) -> np.ndarray:
    # A^# = A (A^3)^+ A
    return m @ _pinv(_matpow(m, 3), tol, rank) @ m


def _core_matrix(m: np.ndarray, rank: int, tol: ToleranceConfig) -> np.ndarray:
    # A^core = A^# A A^+
    return _group_matrix(m, rank, tol) @ m @ _pinv(m, tol, rank)


def _index_one(a: DenseTensor, tol: ToleranceConfig, what: str):
    _require_square(a, what)
    k, ranks = index_profile(a, tol)
    if k != 1:
        raise NotIndexOne(f"{what} needs an index-one tensor; ind(A) = {k} (ranks of powers {list(ranks)})")
    return ranks


def group_inverse(a: DenseTensor, tol: Optional[ToleranceConfig] = None) -> InverseResult:
    """Group inverse ``A (A^3)^+ A``; exists only for index-one tensors."""
    tol = resolve(tol)
    ranks = _index_one(a, tol, "group inverse")
    value = rsh_inverse(_group_matrix(rsh(a), ranks[0], tol), a.shape)
    return InverseResult(value, InverseKind.GROUP, "a_pinv_a3_a", 1, ranks)


def _exponent(a: DenseTensor, tol: ToleranceConfig, l: Optional[int], what: str):
    _require_square(a, what)
    k, ranks = index_profile(a, tol)
    if l is None:
        l = k
    elif l < k:
        raise BadExponent(f"{what}: exponent l={l} is below ind(A)={k}")
    return k, int(l), ranks


def _drazin_matrix(m: np.ndarray, l: int, rank: int, tol: ToleranceConfig) -> np.ndarray:
    ml = _matpow(m, l)
    return ml @ _pinv(_matpow(m, 2 * l + 1), tol, rank) @ ml


def drazin_inverse(
    a: DenseTensor, tol: Optional[ToleranceConfig] = None, l: Optional[int] = None
) -> InverseResult:
    """Drazin inverse ``A^l (A^(2l+1))^+ A^l`` for any ``l >= ind(A)``.

    Raises
    ------
    BadExponent
        If ``l`` is supplied and smaller than the index.
    """
    tol = resolve(tol)
    k, l, ranks = _exponent(a, tol, l, "Drazin inverse")
    value = rsh_inverse(_drazin_matrix(rsh(a), l, ranks[k - 1], tol), a.shape)
    return InverseResult(value, InverseKind.DRAZIN, "power_pinv", l, ranks)


def _perturbation(x: np.ndarray, seed: SeedLike) -> np.ndarray:
    # W is drawn at the magnitude of A^+ so that the terms which cancel in
    # exact arithmetic do not swamp the result with round-off
    rng = _rng(seed)
    w = rng.standard_normal(x.shape) + 1j * rng.standard_normal(x.shape)
    return w * (float(np.abs(x).max()) if x.size and np.abs(x).max() > 0 else 1.0)


def one_three_inverse(a: DenseTensor, tol: Optional[ToleranceConfig] = None, seed: SeedLike = None) -> DenseTensor:
    """A member of ``A{1,3}``.

    Without a seed this is ``A^+``; with one it is ``A^+ + (I - A^+ A) W``
    for a complex normal ``W`` scaled to ``max|A^+|``.
    """
    tol = resolve(tol)
    m = rsh(a)
    x = _pinv(m, tol)
    if seed is not None:
        w = _perturbation(x, seed)
        x = x + (np.eye(x.shape[0]) - x @ m) @ w
    return rsh_inverse(x, a.shape.swapped())


def _inner_matrix(m: np.ndarray, tol: ToleranceConfig, seed: SeedLike, rank: Optional[int] = None) -> np.ndarray:
    x = _pinv(m, tol, rank)
    if seed is None:
        return x
    w = _perturbation(x, seed)
    return x + w - x @ m @ w @ m @ x


def inner_inverse(a: DenseTensor, tol: Optional[ToleranceConfig] = None, seed: SeedLike = None) -> DenseTensor:
    """A member of ``A{1}``: ``A^+ + W - A^+ A W A A^+`` (``A^+`` when unseeded)."""
    tol = resolve(tol)
    return rsh_inverse(_inner_matrix(rsh(a), tol, seed), a.shape.swapped())


def reflexive_inverse(a: DenseTensor, tol: Optional[ToleranceConfig] = None, seed: SeedLike = None) -> DenseTensor:
    """A member of ``A{1,2}`` obtained as ``X A X`` from an inner inverse ``X``."""
    x = inner_inverse(a, tol, seed)
    return x @ a @ x


def core_inverse(
    a: DenseTensor,
    tol: Optional[ToleranceConfig] = None,
    formula: Union[CoreFormula, str] = CoreFormula.GROUP_MP,
    seed: SeedLike = None,
) -> InverseResult:
    """Core inverse of an index-one tensor.

    Parameters
    ----------
    formula : CoreFormula or str
        Which representation to evaluate. ``seed`` randomizes the
        ``{1,3}``-inverse (``one_three``) or the inner inverse of
        ``A* A^2`` (``u_astar``); the result does not depend on it.

    Raises
    ------
    NotIndexOne
        If ``ind(A) > 1``.
    """
    tol = resolve(tol)
    formula = CoreFormula(formula)
    ranks = _index_one(a, tol, "core inverse")
    r = ranks[0]
    m = rsh(a)
    if formula is CoreFormula.GROUP_MP:
        x = _core_matrix(m, r, tol)
    elif formula is CoreFormula.PINV_OF_A2_ADAG:
        x = _pinv(m @ m @ _pinv(m, tol, r), tol, r)
    elif formula is CoreFormula.FRF:
        p, _ = kernel.full_rank_factorization(m, tol)
        ph = p.conj().T
        x = p @ np.linalg.solve(ph @ m @ p, ph)
    elif formula is CoreFormula.ONE_THREE:
        x13 = rsh(one_three_inverse(a, tol, seed))
        x = _group_matrix(m, r, tol) @ m @ x13
    else:
        mh = m.conj().T
        x = m @ _inner_matrix(mh @ m @ m, tol, seed, r) @ mh
    return InverseResult(rsh_inverse(x, a.shape), InverseKind.CORE, formula.value, 1, ranks)


def core_ep_inverse(
    a: DenseTensor,
    tol: Optional[ToleranceConfig] = None,
    formula: Union[CoreEPFormula, str] = CoreEPFormula.POWER_PINV,
    l: Optional[int] = None,
) -> InverseResult:
    """Core-EP inverse; reduces to the core inverse when ``ind(A) == 1``.

    Raises
    ------
    BadExponent
        If ``l`` is supplied and smaller than the index.
    """
    tol = resolve(tol)
    formula = CoreEPFormula(formula)
    k, l, ranks = _exponent(a, tol, l, "core-EP inverse")
    rk = ranks[k - 1]
    m = rsh(a)
    ml = _matpow(m, l)
    if formula is CoreEPFormula.DRAZIN_MP:
        x = _drazin_matrix(m, l, rk, tol) @ ml @ _pinv(ml, tol, rk)
    elif formula is CoreEPFormula.POWER_PINV:
        x = ml @ _pinv(ml @ m, tol, rk)
    else:
        # A^l has index one and rank rk; re-judging its rank from scratch
        # would mistake a vanishing power for a full-rank one
        x = _matpow(m, l - 1) @ _core_matrix(ml, rk, tol)
    return InverseResult(rsh_inverse(x, a.shape), InverseKind.CORE_EP, formula.value, l, ranks)


def sum_hypotheses(a: DenseTensor, b: DenseTensor) -> SumHypotheses:
    """Residual norms of the orthogonality hypotheses used by the sum formulas."""
    ma, mb = rsh(a), rsh(b)
    if ma.shape != mb.shape or not a.is_square or a.shape != b.shape:
        raise ShapeMismatch(f"sum formulas need two square tensors of equal shape, got {a.shape} and {b.shape}")
    norm = lambda m: float(np.abs(m).max()) if m.size else 0.0  # noqa: E731
    return SumHypotheses(
        ab_zero=norm(ma @ mb),
        astar_b_zero=norm(ma.conj().T @ mb),
        ba_zero=norm(mb @ ma),
        scale=max_abs(a) * max_abs(b),
    )


def _check_hypotheses(a, b, required, tol, what) -> SumHypotheses:
    hyp = sum_hypotheses(a, b)
    bad = hyp.failing(required, tol)
    if bad:
        raise HypothesisViolated(f"{what}: hypotheses {bad} do not hold ({hyp.to_dict()})", hyp)
    return hyp


def group_inverse_of_sum(a: DenseTensor, b: DenseTensor, tol: Optional[ToleranceConfig] = None) -> InverseResult:
    """``(A+B)^# = (I - B B^#) A^# + B^# (I - A A^#)`` for core tensors with ``A B = O``."""
    tol = resolve(tol)
    _check_hypotheses(a, b, ("ab_zero",), tol, "group inverse of sum")
    ga, gb = group_inverse(a, tol).value, group_inverse(b, tol).value
    eye = identity_tensor(a.left_modes)
    value = (eye - b @ gb) @ ga + gb @ (eye - a @ ga)
    return InverseResult(value, InverseKind.GROUP, "sum", 1)


def core_inverse_of_sum(a: DenseTensor, b: DenseTensor, tol: Optional[ToleranceConfig] = None) -> InverseResult:
    """``(A+B)^core = (I - B B^core) A^core + B^core`` when ``A B = O`` and ``A* B = O``.

    Only those two hypotheses are checked. The value equals the core inverse
    of ``A + B`` only if ``B A = O`` as well: for ``A = diag(1, 0)`` and
    ``B = [[0, 0], [1, 1]]`` the formula gives ``I`` while ``A + B`` has
    inverse ``[[1, 0], [-1, 1]]``.

    Raises
    ------
    HypothesisViolated
        Carrying the :class:`SumHypotheses` residuals.
    NotIndexOne
        If ``A`` or ``B`` is not a core tensor.
    """
    tol = resolve(tol)
    _check_hypotheses(a, b, ("ab_zero", "astar_b_zero"), tol, "core inverse of sum")
    ca, cb = core_inverse(a, tol).value, core_inverse(b, tol).value
    eye = identity_tensor(a.left_modes)
    value = (eye - b @ cb) @ ca + cb
    return InverseResult(value, InverseKind.CORE, "sum", 1)


def drazin_of_sum(a: DenseTensor, b: DenseTensor, tol: Optional[ToleranceConfig] = None) -> InverseResult:
    """``(A+B)^D = A^D + B^D`` when ``A B = B A = O``."""
    tol = resolve(tol)
    _check_hypotheses(a, b, ("ab_zero", "ba_zero"), tol, "Drazin inverse of sum")
    value = drazin_inverse(a, tol).value + drazin_inverse(b, tol).value
    return InverseResult(value, InverseKind.DRAZIN, "sum")


def core_ep_of_sum(a: DenseTensor, b: DenseTensor, tol: Optional[ToleranceConfig] = None) -> InverseResult:
    """``(A+B)^coreEP = A^coreEP + B^coreEP`` when ``A B = B A = O`` and ``A* B = O``."""
    tol = resolve(tol)
    _check_hypotheses(a, b, ("ab_zero", "ba_zero", "astar_b_zero"), tol, "core-EP inverse of sum")
    value = core_ep_inverse(a, tol).value + core_ep_inverse(b, tol).value
    return InverseResult(value, InverseKind.CORE_EP, "sum")


def is_ep(a: DenseTensor, tol: Optional[ToleranceConfig] = None) -> bool:
    """``A A^+ == A^+ A``."""
    _require_square(a, "EP test")
    tol = resolve(tol)
    x = moore_penrose(a, tol).value
    return approx_equal(a @ x, x @ a, tol)


def is_partial_isometry(a: DenseTensor, tol: Optional[ToleranceConfig] = None) -> bool:
    """``A A* A == A``."""
    return approx_equal(a @ a.H @ a, a, resolve(tol))


def is_idempotent(a: DenseTensor, tol: Optional[ToleranceConfig] = None) -> bool:
    _require_square(a, "idempotence test")
    return approx_equal(a @ a, a, resolve(tol))


def is_tripotent(a: DenseTensor, tol: Optional[ToleranceConfig] = None) -> bool:
    _require_square(a, "tripotence test")
    return approx_equal(a @ a @ a, a, resolve(tol))


def is_hermitian_idempotent(a: DenseTensor, tol: Optional[ToleranceConfig] = None) -> bool:
    """Idempotent and self-adjoint (then also ``A == A^+``)."""
    tol = resolve(tol)
    return is_idempotent(a, tol) and approx_equal(a, a.H, tol)

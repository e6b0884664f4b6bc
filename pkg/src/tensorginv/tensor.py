"""Dense even-order tensors and the Einstein-product algebra.

A tensor ``A`` of shape ``I_1 x ... x I_M x J_1 x ... x J_N`` is held as an
``(M + N)``-dimensional complex array whose first ``M`` axes are the *left*
modes. Matricization (:func:`rsh`) uses column-major linearization (first
index varies fastest) on both the row and column groups, so that

    rsh(A *_N B) == rsh(A) @ rsh(B).

Every product below is evaluated through that isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from numbers import Number
from typing import Iterable, Optional, Sequence

import numpy as np

from . import kernel
from .config import DEFAULT_TOL, ToleranceConfig, resolve
from .errors import ShapeMismatch

__all__ = [
    "TensorShape",
    "DenseTensor",
    "ToleranceConfig",
    "DEFAULT_TOL",
    "einstein_product",
    "add",
    "scale",
    "conj_transpose",
    "transpose",
    "identity_tensor",
    "zero_tensor",
    "rsh",
    "rsh_inverse",
    "rshrank",
    "tensor_power",
    "approx_equal",
    "max_abs",
]


def _modes(values: Iterable[int], side: str) -> tuple:
    out = tuple(int(v) for v in values)
    if not out:
        raise ValueError(f"{side} modes must be nonempty")
    if any(v < 1 for v in out):
        raise ValueError(f"every {side} mode extent must be >= 1, got {out}")
    return out


@dataclass(frozen=True)
class TensorShape:
    """Paired left/right mode extents ``I(M) x J(N)``."""

    left_modes: tuple
    right_modes: tuple

    def __post_init__(self):
        object.__setattr__(self, "left_modes", _modes(self.left_modes, "left"))
        object.__setattr__(self, "right_modes", _modes(self.right_modes, "right"))

    @property
    def rows(self) -> int:
        return prod(self.left_modes)

    @property
    def cols(self) -> int:
        return prod(self.right_modes)

    @property
    def size(self) -> int:
        return self.rows * self.cols

    @property
    def dims(self) -> tuple:
        return self.left_modes + self.right_modes

    @property
    def is_square(self) -> bool:
        return self.left_modes == self.right_modes

    def swapped(self) -> "TensorShape":
        return TensorShape(self.right_modes, self.left_modes)

    def __str__(self):
        left = "x".join(map(str, self.left_modes))
        right = "x".join(map(str, self.right_modes))
        return f"({left})x({right})"


class DenseTensor:
    """Immutable complex tensor with a left/right mode split.

    Parameters
    ----------
    data : array_like
        Array of shape ``left_modes + right_modes``.
    n_left : int, optional
        Number of leading axes that form the left modes. Defaults to half
        of ``data.ndim``, which must then be even.
    """

    __slots__ = ("_data", "shape")

    def __init__(self, data, n_left: Optional[int] = None):
        arr = np.array(data, dtype=np.complex128)
        if n_left is None:
            if arr.ndim % 2:
                raise ValueError(f"cannot split a {arr.ndim}-d array evenly; pass n_left")
            n_left = arr.ndim // 2
        if not 0 < n_left < arr.ndim:
            raise ValueError(f"n_left={n_left} must leave both mode groups nonempty")
        if not np.all(np.isfinite(arr)):
            raise ValueError("tensor entries must be finite")
        arr.setflags(write=False)
        self._data = arr
        self.shape = TensorShape(arr.shape[:n_left], arr.shape[n_left:])

    @classmethod
    def from_entries(cls, entries, shape: TensorShape) -> "DenseTensor":
        """Build from a flat column-major entry list."""
        flat = np.asarray(entries, dtype=np.complex128).ravel()
        if flat.size != shape.size:
            raise ShapeMismatch(f"{flat.size} entries do not fill shape {shape} ({shape.size})")
        return cls(flat.reshape(shape.dims, order="F"), len(shape.left_modes))

    @property
    def array(self) -> np.ndarray:
        """Read-only view of the underlying ``left_modes + right_modes`` array."""
        return self._data

    @property
    def entries(self) -> np.ndarray:
        """Flat column-major entries."""
        return self._data.ravel(order="F")

    @property
    def left_modes(self) -> tuple:
        return self.shape.left_modes

    @property
    def right_modes(self) -> tuple:
        return self.shape.right_modes

    @property
    def is_square(self) -> bool:
        return self.shape.is_square

    @property
    def H(self) -> "DenseTensor":
        return conj_transpose(self)

    @property
    def T(self) -> "DenseTensor":
        return transpose(self)

    def __matmul__(self, other: "DenseTensor") -> "DenseTensor":
        if not isinstance(other, DenseTensor):
            return NotImplemented
        return einstein_product(self, other)

    def __add__(self, other: "DenseTensor") -> "DenseTensor":
        if not isinstance(other, DenseTensor):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other: "DenseTensor") -> "DenseTensor":
        if not isinstance(other, DenseTensor):
            return NotImplemented
        return add(self, scale(other, -1))

    def __neg__(self) -> "DenseTensor":
        return scale(self, -1)

    def __mul__(self, c) -> "DenseTensor":
        if not isinstance(c, Number):
            return NotImplemented
        return scale(self, c)

    __rmul__ = __mul__

    def __pow__(self, m: int) -> "DenseTensor":
        return tensor_power(self, m)

    def __repr__(self):
        return f"DenseTensor(shape={self.shape})"


def _same_shape(a: DenseTensor, b: DenseTensor, what: str):
    if a.shape != b.shape:
        raise ShapeMismatch(f"{what}: shapes {a.shape} and {b.shape} differ")


def rsh(a: DenseTensor) -> np.ndarray:
    """Reshape to the ``prod(left) x prod(right)`` matrix (column-major)."""
    return a.array.reshape(a.shape.rows, a.shape.cols, order="F").copy()


def rsh_inverse(m, shape: TensorShape) -> DenseTensor:
    """Inverse of :func:`rsh` for a target ``shape``."""
    mat = np.asarray(m, dtype=np.complex128)
    if mat.shape != (shape.rows, shape.cols):
        raise ShapeMismatch(f"matrix {mat.shape} cannot be reshaped to {shape}")
    return DenseTensor(mat.reshape(shape.dims, order="F"), len(shape.left_modes))


def einstein_product(a: DenseTensor, b: DenseTensor) -> DenseTensor:
    """Contract the right modes of ``a`` with the left modes of ``b``."""
    if a.right_modes != b.left_modes:
        raise ShapeMismatch(
            f"Einstein product needs a.right_modes == b.left_modes, got {a.right_modes} vs {b.left_modes}"
        )
    return rsh_inverse(rsh(a) @ rsh(b), TensorShape(a.left_modes, b.right_modes))


def add(a: DenseTensor, b: DenseTensor) -> DenseTensor:
    _same_shape(a, b, "add")
    return DenseTensor(a.array + b.array, len(a.left_modes))


def scale(a: DenseTensor, c) -> DenseTensor:
    return DenseTensor(complex(c) * a.array, len(a.left_modes))


def _swap_groups(a: DenseTensor) -> np.ndarray:
    m = len(a.left_modes)
    n = len(a.right_modes)
    return np.transpose(a.array, tuple(range(m, m + n)) + tuple(range(m)))


def conj_transpose(a: DenseTensor) -> DenseTensor:
    """``(A*)_{j..i..} = conj(A_{i..j..})``."""
    return DenseTensor(_swap_groups(a).conj(), len(a.right_modes))


def transpose(a: DenseTensor) -> DenseTensor:
    return DenseTensor(_swap_groups(a), len(a.right_modes))


def identity_tensor(modes: Sequence[int]) -> DenseTensor:
    """Unit tensor with entries ``prod_k delta(i_k, j_k)``."""
    shape = TensorShape(tuple(modes), tuple(modes))
    return rsh_inverse(np.eye(shape.rows), shape)


def zero_tensor(left_modes: Sequence[int], right_modes: Optional[Sequence[int]] = None) -> DenseTensor:
    right_modes = left_modes if right_modes is None else right_modes
    shape = TensorShape(tuple(left_modes), tuple(right_modes))
    return DenseTensor(np.zeros(shape.dims), len(shape.left_modes))


def rshrank(a: DenseTensor, tol: Optional[ToleranceConfig] = None) -> int:
    """Numerical rank of ``rsh(a)``."""
    return kernel.matrix_rank(rsh(a), tol)


def tensor_power(a: DenseTensor, m: int) -> DenseTensor:
    """``a`` multiplied by itself ``m`` times (iterated, left to right)."""
    if not a.is_square:
        raise ShapeMismatch(f"tensor power needs a square tensor, got {a.shape}")
    if m < 0:
        raise ValueError("exponent must be nonnegative")
    base = rsh(a)
    out = np.eye(a.shape.rows, dtype=np.complex128)
    for _ in range(m):
        out = out @ base
    return rsh_inverse(out, a.shape)


def max_abs(a: DenseTensor) -> float:
    """Entrywise infinity norm."""
    return float(np.abs(a.array).max()) if a.shape.size else 0.0


def approx_equal(a: DenseTensor, b: DenseTensor, tol: Optional[ToleranceConfig] = None) -> bool:
    """``max|a - b| <= eq_atol + eq_rtol * max(|a|_inf, |b|_inf)``."""
    _same_shape(a, b, "approx_equal")
    tol = resolve(tol)
    diff = float(np.abs(a.array - b.array).max())
    return diff <= tol.bound(max(max_abs(a), max_abs(b)))

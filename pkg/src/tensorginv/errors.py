"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations

from typing import Any


class TensorInverseError(Exception):
    """Base class for all errors raised by ``tensorginv``."""


class ShapeMismatch(TensorInverseError, ValueError):
    """Operand shapes are incompatible with the requested operation."""


class ConvergenceFailure(TensorInverseError, ArithmeticError):
    """An iterative kernel (Jacobi SVD) hit its sweep cap."""


class IndexNotFound(TensorInverseError, ArithmeticError):
    """No stabilizing power was found within the search bound."""


class NotIndexOne(TensorInverseError, ValueError):
    """The tensor is not a core (index-one) tensor."""


class BadExponent(TensorInverseError, ValueError):
    """A supplied exponent ``l`` is smaller than the tensor index."""


class HypothesisViolated(TensorInverseError, ValueError):
    """Orthogonality hypotheses of a sum formula do not hold.

    The offending residuals are kept on ``hypotheses`` so callers can
    report how far off the pair is.
    """

    def __init__(self, message: str, hypotheses: Any = None):
        super().__init__(message)
        self.hypotheses = hypotheses


class TensorFileError(TensorInverseError, ValueError):
    """A tensor interchange document is malformed."""


class UnknownFixture(TensorInverseError, KeyError):
    """Requested bundled fixture does not exist."""

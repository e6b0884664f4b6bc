"""Worked examples bundled as fixtures, with their reference inverses.

Slices are listed MATLAB style: ``"name"[(k, l)]`` is the matrix
``T(:, :, k, l)`` (1-based), optionally as ``(scale, matrix)`` when the
printed values carry a power-of-ten factor. Example 3.1 tensors live on
``(2 x 3) x (2 x 3)``; the others on ``(2 x 2) x (2 x 2)``.

The reference core inverse of ``example3_1`` holds the exact rational
values. Its ``(k, l) = (2, 1)`` slice equals ``-1/51`` times the nonzero
slice of ``A``; only the leading entry of that slice survives in the
printed listing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Mapping, Tuple

import numpy as np

from .errors import UnknownFixture
from .tensor import DenseTensor


@dataclass(frozen=True)
class Fixture:
    name: str
    description: str
    tensors: Dict[str, DenseTensor]
    golden: Dict[str, DenseTensor] = field(default_factory=dict)
    facts: Dict[str, object] = field(default_factory=dict)


def from_slices(dims: Tuple[int, int, int, int], slices: Mapping) -> DenseTensor:
    """Build a 4th-order tensor from ``{(k, l): matrix or (scale, matrix)}``; absent slices are zero."""
    data = np.zeros(dims, dtype=np.complex128)
    for (k, l), entry in slices.items():
        if isinstance(entry, tuple):
            factor, mat = entry
        else:
            factor, mat = 1.0, entry
        data[:, :, k - 1, l - 1] = factor * np.asarray(mat, dtype=np.float64)
    return DenseTensor(data, 2)


# Example 3.1: the only nonzero slice of A is A(:, :, 1, 1).
_EX3_1_SLICE = [[1, 6, 2], [-1, 3, 0]]
_EX3_1_PINV = {
    (1, 1): [[1 / 51, 0, 0], [0, 0, 0]],
    (1, 2): [[2 / 17, 0, 0], [0, 0, 0]],
    (1, 3): [[2 / 51, 0, 0], [0, 0, 0]],
    (2, 1): [[-1 / 51, 0, 0], [0, 0, 0]],
    (2, 2): [[1 / 17, 0, 0], [0, 0, 0]],
}
_EX3_1_CORE = {
    (1, 1): [[1 / 51, 2 / 17, 2 / 51], [-1 / 51, 1 / 17, 0]],
    (1, 2): [[2 / 17, 12 / 17, 4 / 17], [-2 / 17, 6 / 17, 0]],
    (1, 3): [[2 / 51, 4 / 17, 4 / 51], [-2 / 51, 2 / 17, 0]],
    (2, 1): [[-1 / 51, -2 / 17, -2 / 51], [1 / 51, -1 / 17, 0]],
    (2, 2): [[1 / 17, 6 / 17, 2 / 17], [-1 / 17, 3 / 17, 0]],
}
_SUM_B_SLICE = [[-1, -1, -3], [-1, -2, 0]]

_EX5_1_SLICES = {
    "a": {
        (1, 1): (1e2, [[0.985940927109977, 1.682512984915278], [1.420272484319284, 1.962489222569553]]),
        (2, 1): [[0, 0], [0, 0]],
        (1, 2): (1e2, [[8.929224052859770, 5.557379427193866], [7.032232245562910, 1.844336677576532]]),
        (2, 2): [[0, 0], [0, 0]],
    },
    "pinv": {
        (1, 1): [[-0.002139621590719, 0.000961949275511], [0, 0]],
        (2, 1): (1e-3, [[0.154116174683626, 0.400242571625946], [0, 0]]),
        (1, 2): [[0.001721913469812, 0.000005405961529], [0, 0]],
        (2, 2): [[0.004582706318709, -0.000777570778470], [0, 0]],
    },
    "pinv_a3": {
        (1, 1): (1e-6, [[-0.169528528162183, 0.042750108332711], [0, 0]]),
        (2, 1): (1e-7, [[-0.179043837563866, 0.051654956705111], [0, 0]]),
        (1, 2): (1e-7, [[0.864318723074744, -0.207154961229323], [0, 0]]),
        (2, 2): (1e-6, [[0.280825799119855, -0.069038738080892], [0, 0]]),
    },
    "core": {
        (1, 1): [[-0.002139621590719, 0.000961949275511], [-0.000303613542775, 0.003332187328937]],
        (2, 1): (1e-3, [[0.154116174683627, 0.400242571625946], [0.304669984681755, 0.532596423124327]]),
        (1, 2): [[0.001721913469812, 0.000005405961529], [0.000713871950958, -0.001398898974183]],
        (2, 2): [[0.004582706318709, -0.000777570778470], [0.001422901360057, -0.005026199525584]],
    },
    "a2": {
        (1, 1): (1e5, [[1.599561492590487, 1.100922146057665], [1.323212683603806, 0.503801885212158]]),
        (2, 1): [[0, 0], [0, 0]],
        (1, 2): (1e5, [[5.842677349321679, 4.590800151195201], [5.176271403733929, 2.777318467842903]]),
        (2, 2): [[0, 0], [0, 0]],
    },
    "core_squared": {
        (1, 1): (1e-4, [[0.214580181358990, -0.047655377387934], [0.059851986462700, -0.253852316667977]]),
        (2, 1): (1e-5, [[0.284712034659642, -0.014177387864685], [0.108958616205944, -0.256102470356689]]),
        (1, 2): (1e-4, [[-0.099756585933128, 0.030298875490167], [-0.022919369812014, 0.131415268596208]]),
        # sign of the leading entry restored; the listing prints it positive
        (2, 2): (1e-4, [[-0.339584711910359, 0.088818590828190], [-0.086647284748517, 0.423786927376011]]),
    },
    "a_core": {
        (1, 1): [[0.647992011370661, 0.174597600453917], [0.372580504169106, -0.242482598137053]],
        (2, 1): [[0.372580504169107, 0.248360229853187], [0.303348568052670, 0.104063338661755]],
        (1, 2): [[0.174597600453919, 0.292718475124185], [0.248360229853188, 0.338920703982751]],
        (2, 2): [[-0.242482598137050, 0.338920703982753], [0.104063338661757, 0.755940945452490]],
    },
    "a2_pinv_core": {
        (1, 1): [[0.647992011370665, 0.174597600453918], [0.372580504169107, -0.242482598137055]],
        (2, 1): [[0.372580504169109, 0.248360229853187], [0.303348568052670, 0.104063338661752]],
        (1, 2): [[0.174597600453919, 0.292718475124185], [0.248360229853188, 0.338920703982751]],
        (2, 2): [[-0.242482598137050, 0.338920703982753], [0.104063338661757, 0.755940945452490]],
    },
    "group": {
        (1, 1): [[-0.005822728386101, 0.001762848163527], [-0.001341208843236, 0.007661282558445]],
        (2, 1): [[0, 0], [0, 0]],
        (1, 2): [[0.009355568940286, -0.001033016783992], [0.003238756270141, -0.009348711331342]],
        (2, 2): [[0, 0], [0, 0]],
    },
    "core_a": {
        (1, 1): [[1.000000000000006, -0.000000000000000], [0.412689678913960, -0.817575617868222]],
        (2, 1): [[0, 0], [0, 0]],
        (1, 2): [[-0.000000000000000, 1.000000000000001], [0.602304320244615, 1.645497247305027]],
        (2, 2): [[0, 0], [0, 0]],
    },
}

_EX5_2_SLICES = {
    "a": {
        (1, 1): [[1, 0], [0, 0]],
        (2, 1): [[1, 0], [0, 0]],
        (1, 2): [[0, 0], [0, 0]],
        (2, 2): [[0, 1], [0, 0]],
    },
    "pinv_a2": {
        (1, 1): [[0.5, 0], [0.5, 0]],
        (2, 1): [[0, 0], [0, 0]],
        (1, 2): [[0, 0], [0, 0]],
        (2, 2): [[0, 0], [0, 0]],
    },
    "core_ep": {
        (1, 1): [[1, 0], [0, 0]],
        (2, 1): [[0, 0], [0, 0]],
        (1, 2): [[0, 0], [0, 0]],
        (2, 2): [[0, 0], [0, 0]],
    },
}

_EX5_3_SLICES = {
    "a": {
        (1, 1): [[2, 8], [4, 16]],
        (2, 1): [[1, 4], [2, 8]],
        (1, 2): [[0, 2], [1, 4]],
        (2, 2): [[0, 1], [0, 2]],
    },
    "a2": {
        (1, 1): [[8, 64], [24, 128]],
        (2, 1): [[4, 32], [12, 64]],
        (1, 2): [[1, 12], [4, 24]],
        (2, 2): [[0, 4], [1, 8]],
    },
    "a3": {
        (1, 1): [[40, 416], [144, 832]],
        (2, 1): [[20, 208], [72, 416]],
        (1, 2): [[6, 72], [24, 144]],
        (2, 2): [[1, 20], [6, 40]],
    },
    "pinv_a3": {
        (1, 1): [[0.048094852307653, -0.270803595540296], [0.024047426153826, -0.276815452078752]],
        (2, 1): [[0.047143242930443, -0.264910690173993], [0.023571621465222, -0.270803595540299]],
        (1, 2): [[-0.003806437508841, 0.023571621465222], [-0.001903218754421, 0.024047426153827]],
        (2, 2): [[-0.007612875017682, 0.047143242930443], [-0.003806437508841, 0.048094852307653]],
    },
    "core_ep": {
        (1, 1): [[0.210144927536232, -0.509316770186336], [0.082815734989648, -1.018633540372671]],
        (2, 1): [[0.206521739130437, -0.490683229813671], [0.083850931677020, -0.981366459627341]],
        (1, 2): [[-0.014492753623189, 0.074534161490684], [0.004140786749482, 0.149068322981367]],
        (2, 2): [[-0.028985507246377, 0.149068322981367], [0.008281573498965, 0.298136645962735]],
    },
    "core_ep_a3": {
        (1, 1): [[8, 64], [24, 128]],
        (2, 1): [[4, 32], [12, 64]],
        (1, 2): [[1, 12], [4, 24]],
        (2, 2): [[0, 4], [1, 8]],
    },
    "core_ep_squared": {
        (1, 1): [[0.098171152518979, -0.337474120082818], [0.013802622498275, -0.674948240165636]],
        (2, 1): [[0.096273291925468, -0.329192546583857], [0.013975155279503, -0.658385093167713]],
        (1, 2): [[-0.007591442374051, 0.033126293995860], [0.000690131124914, 0.066252587991719]],
        (2, 2): [[-0.015182884748102, 0.066252587991719], [0.001380262249827, 0.132505175983439]],
    },
    "a_core_ep": {
        (1, 1): [[0.503105590062112, -0.024844720496894], [0.496894409937889, -0.049689440993788]],
        (2, 1): [[0.496894409937894, 0.024844720496893], [0.503105590062117, 0.049689440993786]],
        (1, 2): [[-0.024844720496895, 0.198757763975156], [0.024844720496894, 0.397515527950311]],
        (2, 2): [[-0.049689440993790, 0.397515527950311], [0.049689440993788, 0.795031055900622]],
    },
}



def _build(slices: Mapping) -> Dict[str, DenseTensor]:
    return {name: from_slices((2, 2, 2, 2), s) for name, s in slices.items()}


def _example3_1() -> Fixture:
    dims = (2, 3, 2, 3)
    a = from_slices(dims, {(1, 1): _EX3_1_SLICE})
    return Fixture(
        "example3_1",
        "Rank-one idempotent (2x3)x(2x3) tensor; core, group and Moore-Penrose inverses all differ.",
        {"A": a},
        {"pinv": from_slices(dims, _EX3_1_PINV), "group": a, "core": from_slices(dims, _EX3_1_CORE)},
        {"index": 1, "ranks_of_powers": [1, 1]},
    )


def _counterexample_sum() -> Fixture:
    dims = (2, 3, 2, 3)
    a = from_slices(dims, {(1, 1): _EX3_1_SLICE})
    b = from_slices(dims, {(1, 1): _SUM_B_SLICE})
    return Fixture(
        "counterexample_sum",
        "Core tensors A, B with A*B != O whose sum is nilpotent, so (A+B) has no core inverse.",
        {"A": a, "B": b},
        {},
        {"rshrank_sum": 1, "rshrank_sum_squared": 0},
    )


def _example5_1() -> Fixture:
    t = _build(_EX5_1_SLICES)
    a = t.pop("a")
    return Fixture(
        "example5_1",
        "Index-one real tensor: core inverse via A^# A A^+, with A^+, (A^3)^+, A^2, (A^core)^2, "
        "A A^core, A^2 A^+ A^core, A^# and A^core A as printed.",
        {"A": a},
        t,
        {"index": 1},
    )


def _example5_2() -> Fixture:
    t = _build(_EX5_2_SLICES)
    a = t.pop("a")
    return Fixture(
        "example5_2",
        "Index-two tensor whose core-EP inverse has a single unit entry.",
        {"A": a},
        t,
        {"index": 2, "ranks_of_powers": [2, 1, 1]},
    )


def _example5_3() -> Fixture:
    t = _build(_EX5_3_SLICES)
    a = t.pop("a")
    return Fixture(
        "example5_3",
        "Index-two integer tensor; core-EP inverse A^2 (A^3)^+ with powers and products as printed.",
        {"A": a},
        t,
        {"index": 2, "ranks_of_powers": [3, 2, 2]},
    )


_BUILDERS = {
    "example3_1": _example3_1,
    "counterexample_sum": _counterexample_sum,
    "example5_1": _example5_1,
    "example5_2": _example5_2,
    "example5_3": _example5_3,
}

NAMES = tuple(_BUILDERS)


def fixture(name: str) -> Fixture:
    """Return the bundled fixture ``name``.

    Raises
    ------
    UnknownFixture
        If ``name`` is not one of :data:`NAMES`.
    """
    try:
        return _BUILDERS[name]()
    except KeyError:
        raise UnknownFixture(f"unknown fixture {name!r}; available: {', '.join(NAMES)}") from None

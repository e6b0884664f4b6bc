"""Seeded property runs of the invariant batteries on both SVD backends."""

import dataclasses

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tensorginv import (
    CoreFormula,
    approx_equal,
    check,
    core_inverse,
    moore_penrose,
    rshrank,
)

from builders import RANDOM_TOL, SHAPE_CLASSES, index_one, random_tensor, shape_id
from invariants import FAMILIES, run_family

LAPACK = dataclasses.replace(RANDOM_TOL, svd_method="lapack")
JACOBI = dataclasses.replace(RANDOM_TOL, svd_method="jacobi")

CASES = [(family, modes) for family in FAMILIES for modes in SHAPE_CLASSES]
IDS = [f"{family}-{shape_id(modes)}" for family, modes in CASES]


@pytest.mark.parametrize("family,modes", CASES, ids=IDS)
def test_battery_lapack(family, modes):
    assert run_family(family, modes, 200, LAPACK) == {}


# the Jacobi backend is an order of magnitude slower per call
@pytest.mark.parametrize("family,modes", CASES, ids=IDS)
def test_battery_jacobi(family, modes):
    assert run_family(family, modes, 8, JACOBI, seed=1) == {}


mode_lists = st.lists(st.integers(1, 3), min_size=1, max_size=2).filter(lambda m: np.prod(m) <= 6)


@settings(max_examples=40, deadline=None)
@given(left=mode_lists, right=mode_lists, seed=st.integers(0, 2**32 - 1))
def test_pinv_penrose_rectangular(left, right, seed):
    a = random_tensor(np.random.default_rng(seed), left, right)
    assert check(a, moore_penrose(a).value).holds("1T", "2T", "3T", "4T")


@settings(max_examples=40, deadline=None)
@given(modes=st.sampled_from(SHAPE_CLASSES), seed=st.integers(0, 2**32 - 1), formula=st.sampled_from(list(CoreFormula)))
def test_core_formula_matches_default(modes, seed, formula):
    a = index_one(np.random.default_rng(seed), modes)
    expected = core_inverse(a, RANDOM_TOL).value
    assert approx_equal(core_inverse(a, RANDOM_TOL, formula, seed=seed).value, expected, RANDOM_TOL)


@settings(max_examples=30, deadline=None)
@given(modes=st.sampled_from(SHAPE_CLASSES), seed=st.integers(0, 2**32 - 1))
def test_core_rank_matches_tensor_rank(modes, seed):
    # A A^core projects onto the range of A, so both have the same rank
    a = index_one(np.random.default_rng(seed), modes)
    c = core_inverse(a, RANDOM_TOL).value
    assert rshrank(c, RANDOM_TOL) == rshrank(a, RANDOM_TOL) == rshrank(a @ c, RANDOM_TOL)

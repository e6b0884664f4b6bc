import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tensorginv import ConvergenceFailure, ShapeMismatch, ToleranceConfig, rsh
from tensorginv.config import EPS
from tensorginv.fixtures import fixture
from tensorginv.kernel import (
    full_rank_factorization,
    madd,
    matmul,
    matpow,
    matrix_rank,
    mconj_transpose,
    numerical_rank,
    pinv_matrix,
    range_subset,
    svd,
)

from builders import RANDOM_TOL, cnormal, unitary
from oracles import penrose_residuals, random_matrix


class TestSvd:
    @pytest.mark.parametrize("method", ["jacobi", "lapack"])
    @pytest.mark.parametrize("rows,cols", [(1, 1), (4, 4), (6, 3), (3, 6), (8, 8), (9, 1)])
    def test_invariants(self, method, rows, cols):
        rng = np.random.default_rng(rows * 10 + cols)
        a = cnormal(rng, rows, cols)
        res = svd(a, method)
        r = min(rows, cols)
        assert res.u.shape == (rows, r) and res.v.shape == (cols, r) and res.s.shape == (r,)
        assert np.all(np.diff(res.s) <= 0) and np.all(res.s >= 0)
        np.testing.assert_allclose(res.u.conj().T @ res.u, np.eye(r), atol=1e-13)
        np.testing.assert_allclose(res.v.conj().T @ res.v, np.eye(r), atol=1e-13)
        bound = 10 * EPS * np.abs(a).max() * max(rows, cols)
        assert np.abs(res.reconstruct() - a).max() <= bound

    def test_identity_and_zero(self):
        np.testing.assert_array_equal(svd(np.eye(4)).s, np.ones(4))
        res = svd(np.zeros((3, 5)))
        np.testing.assert_array_equal(res.s, np.zeros(3))
        np.testing.assert_allclose(res.u.conj().T @ res.u, np.eye(3), atol=1e-15)

    def test_rank_one_fixture(self):
        s = svd(rsh(fixture("example3_1").tensors["A"])).s
        assert s[0] == pytest.approx(np.sqrt(51), rel=1e-14)
        assert np.all(s[1:] <= 1e-14)

    def test_matches_lapack(self):
        rng = np.random.default_rng(21)
        for _ in range(100):
            a = random_matrix(rng)
            ref = np.linalg.svd(a, compute_uv=False)
            got = svd(a).s
            assert np.abs(got - ref).max() <= 1e-13 * max(1.0, ref[0])

    def test_sweep_cap(self):
        a = cnormal(np.random.default_rng(0), 6, 6)
        with pytest.raises(ConvergenceFailure):
            svd(a, max_sweeps=1)

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            svd(np.eye(2), "qr")

    def test_rejects_non_matrix(self):
        with pytest.raises(ShapeMismatch):
            svd(np.zeros((2, 2, 2)))
        with pytest.raises(ValueError):
            svd(np.array([[np.inf]]))

    def test_graded_columns(self):
        # tiny columns next to O(1) ones must not produce NaN or spurious rank
        a = np.diag([1.0, 1e-160, 1e-300, 0.0]) @ cnormal(np.random.default_rng(2), 4, 4)
        res = svd(a)
        assert np.all(np.isfinite(res.s)) and np.all(np.isfinite(res.u))
        assert numerical_rank(res.s, a.shape) == 1


class TestRank:
    def test_cutoff(self):
        assert numerical_rank([3, 2, 1e-18], (3, 3)) == 2
        assert numerical_rank([0, 0], (2, 2)) == 0
        assert numerical_rank([], (0, 0)) == 0
        assert numerical_rank([1, 1e-3], (2, 2), ToleranceConfig(rank_rtol=1e-2)) == 1

    def test_fixture_rank(self):
        assert matrix_rank(rsh(fixture("example5_3").tensors["A"])) == 3

    @given(seed=st.integers(0, 2**32 - 1), r=st.integers(0, 5))
    @settings(max_examples=40, deadline=None)
    def test_unitary_invariance(self, seed, r):
        rng = np.random.default_rng(seed)
        a = cnormal(rng, 5, r) @ cnormal(rng, r, 5)
        base = matrix_rank(a, RANDOM_TOL)
        assert base == r
        assert matrix_rank(unitary(rng, 5) @ a @ unitary(rng, 5), RANDOM_TOL) == base

    @pytest.mark.parametrize("method", ["jacobi", "lapack"])
    def test_backends_agree(self, method):
        rng = np.random.default_rng(5)
        tol = ToleranceConfig(rank_rtol=1e-10, svd_method=method)
        for _ in range(50):
            a = random_matrix(rng)
            assert matrix_rank(a, tol) == np.linalg.matrix_rank(a, tol=1e-10 * np.linalg.norm(a, 2))


class TestPinv:
    def test_trivial(self):
        np.testing.assert_allclose(pinv_matrix(np.eye(3)), np.eye(3), atol=1e-15)
        np.testing.assert_array_equal(pinv_matrix(np.zeros((2, 3))), np.zeros((3, 2)))

    @pytest.mark.parametrize("method", ["jacobi", "lapack"])
    def test_penrose_suite(self, method):
        rng = np.random.default_rng(500)
        tol = ToleranceConfig(rank_rtol=1e-10, svd_method=method)
        worst = 0.0
        for _ in range(500):
            a = random_matrix(rng)
            worst = max(worst, *penrose_residuals(a, pinv_matrix(a, tol)))
        assert worst <= 1e-10

    def test_matches_numpy(self):
        rng = np.random.default_rng(7)
        for _ in range(50):
            a = random_matrix(rng)
            ref = np.linalg.pinv(a, rcond=1e-10)
            got = pinv_matrix(a, RANDOM_TOL)
            assert np.abs(got - ref).max() <= 1e-9 * max(1.0, np.abs(ref).max())

    def test_explicit_rank_truncates(self):
        a = np.diag([2.0, 1e-3, 0.0])
        np.testing.assert_allclose(pinv_matrix(a, rank=1), np.diag([0.5, 0, 0]))


class TestFactorizations:
    @pytest.mark.parametrize("r", [1, 2, 4])
    def test_full_rank_factorization(self, r):
        rng = np.random.default_rng(r)
        a = cnormal(rng, 4, r) @ cnormal(rng, r, 4)
        p, q = full_rank_factorization(a, RANDOM_TOL)
        assert p.shape == (4, r) and q.shape == (r, 4)
        assert matrix_rank(p) == matrix_rank(q) == r
        assert np.abs(p @ q - a).max() <= 1e-12 * np.abs(a).max()

    def test_identity_factorization(self):
        p, q = full_rank_factorization(np.eye(3))
        np.testing.assert_allclose(p @ q, np.eye(3), atol=1e-15)

    def test_range_subset(self):
        rng = np.random.default_rng(8)
        a = cnormal(rng, 4, 2) @ cnormal(rng, 2, 4)
        assert range_subset(a, a, RANDOM_TOL)
        assert range_subset(np.zeros((4, 3)), a)
        assert range_subset(a @ cnormal(rng, 4, 5), a, RANDOM_TOL)
        e1, e2, row = np.eye(3)[:, :1], np.eye(3)[:, 1:2], np.ones((1, 3))
        assert not range_subset(e2 @ row, e1 @ row)
        with pytest.raises(ShapeMismatch):
            range_subset(np.zeros((2, 2)), np.zeros((3, 3)))


class TestMatrixOps:
    def test_products(self):
        rng = np.random.default_rng(9)
        a, b, c = cnormal(rng, 3, 4), cnormal(rng, 4, 2), cnormal(rng, 2, 5)
        np.testing.assert_allclose(matmul(np.eye(3), a), a)
        np.testing.assert_allclose(matmul(matmul(a, b), c), matmul(a, matmul(b, c)), atol=1e-13)
        with pytest.raises(ShapeMismatch):
            matmul(a, a)

    def test_powers(self):
        m = np.array([[0, 1], [0, 0]])
        np.testing.assert_array_equal(matpow(m, 0), np.eye(2))
        np.testing.assert_array_equal(matpow(m, 2), np.zeros((2, 2)))
        with pytest.raises(ShapeMismatch):
            matpow(np.zeros((2, 3)), 2)
        with pytest.raises(ValueError):
            matpow(m, -1)

    def test_add_and_adjoint(self):
        a = np.array([[1, 2j], [3, 4]])
        np.testing.assert_array_equal(madd(a, a), 2 * a)
        np.testing.assert_array_equal(mconj_transpose(a), [[1, 3], [-2j, 4]])
        with pytest.raises(ShapeMismatch):
            madd(a, np.zeros((2, 3)))

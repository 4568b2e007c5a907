"""Eigensolver and exact inertia oracles plus randomized properties."""

import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from sapgraph.errors import DimensionMismatch, NonFinite
from sapgraph.spectra import (
    SymMatrix,
    default_tol,
    eigen_sym,
    inertia_exact,
    nullspace_exact,
    nullspace_float,
    rank_float,
)


def test_eigen_rank_one():
    s = eigen_sym(SymMatrix.from_array(-np.ones((4, 4))))
    assert np.allclose(s.eigenvalues, [-4, 0, 0, 0], atol=1e-10)
    assert (s.neg_count, s.zero_count, s.pos_count) == (1, 3, 0)


def test_eigen_identity_and_2x2():
    s = eigen_sym(SymMatrix.from_array(np.eye(3)))
    assert np.allclose(s.eigenvalues, [1, 1, 1]) and s.neg_count == 0 and s.zero_count == 0
    s2 = eigen_sym(SymMatrix.from_array(np.array([[0.0, -1.0], [-1.0, 0.0]])))
    assert np.allclose(s2.eigenvalues, [-1, 1], atol=1e-12)
    assert s2.neg_count == 1


def test_eigen_circulant_closed_form():
    for n in range(3, 9):
        a = np.zeros((n, n))
        for i in range(n):
            a[i, (i + 1) % n] = a[(i + 1) % n, i] = -1.0
        s = eigen_sym(SymMatrix.from_array(a))
        expected = sorted(-2.0 * math.cos(2.0 * math.pi * k / n) for k in range(n))
        assert np.allclose(s.eigenvalues, expected, atol=1e-10)


def test_eigen_rejects_nonfinite():
    with pytest.raises(NonFinite):
        eigen_sym(np.array([[np.nan, 0.0], [0.0, 1.0]]))


def test_kernel_basis_quality():
    a = -np.ones((5, 5))
    s = eigen_sym(SymMatrix.from_array(a))
    assert s.kernel_basis.shape == (5, 4)
    gram = s.kernel_basis.T @ s.kernel_basis
    assert np.abs(gram - np.eye(4)).max() <= 10 * s.tol
    assert np.abs(a @ s.kernel_basis).max() <= s.tol


def test_inertia_exact_oracles():
    assert inertia_exact(SymMatrix.from_rows([[-1] * 4] * 4, rational=True)) == (1, 3, 0)
    d = SymMatrix.from_rows([[Fraction(-2), 0, 0], [0, 0, 0], [0, 0, Fraction(5)]],
                            rational=True)
    assert inertia_exact(d) == (1, 1, 1)
    # off-diagonal pivot block: [[0, a], [a, 0]] contributes (1, 0, 1)
    z = SymMatrix.from_rows([[0, Fraction(3)], [Fraction(3), 0]], rational=True)
    assert inertia_exact(z) == (1, 0, 1)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000))
def test_eigen_matches_exact_inertia(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 6)
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            v = Fraction(rng.randint(-16, 16), rng.choice([1, 2, 4, 8]))
            rows[i][j] = rows[j][i] = v
    m = SymMatrix.from_rows(rows, rational=True)
    exact = inertia_exact(m)
    s = eigen_sym(m.to_float())
    assert (s.neg_count, s.zero_count, s.pos_count) == exact


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000))
def test_eigen_trace_and_reconstruction(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, 9))
    a = rng.normal(size=(n, n))
    a = a + a.T
    s = eigen_sym(SymMatrix.from_array(a))
    amax = np.abs(a).max()
    assert abs(float(np.sum(s.eigenvalues)) - float(np.trace(a))) <= 1e-9 * n * amax
    recon = s.vectors @ np.diag(s.eigenvalues) @ s.vectors.T
    assert np.abs(recon - a).max() <= 1e-8 * n * amax
    # inertia counts partition n
    assert s.neg_count + s.zero_count + s.pos_count == n


def test_default_tol_scale_invariance():
    a = np.diag([1.0, -1.0, 0.0])
    assert default_tol(1000.0 * a) == pytest.approx(1000.0 * default_tol(a))


def test_symmatrix_storage_and_json():
    m = SymMatrix.from_rows([[1.0, -2.0], [-2.0, 3.0]])
    assert m.entry(0, 1) == m.entry(1, 0) == -2.0
    d = m.to_json_dict()
    assert d == {"n": 2, "rows": [[1.0, -2.0], [-2.0, 3.0]]}
    assert SymMatrix.from_json_dict(d).data == m.data
    r = SymMatrix.from_rows([[Fraction(1, 3), 0], [0, 1]], rational=True)
    dr = r.to_json_dict()
    assert dr["rows"][0][0] == "1/3"
    back = SymMatrix.from_json_dict(dr)
    assert back.rational and back.entry(0, 0) == Fraction(1, 3)
    with pytest.raises(DimensionMismatch):
        SymMatrix.from_rows([[0.0, 1.0], [2.0, 0.0]])


def test_nullspace_float_and_rank():
    a = np.array([[1.0, 2.0, 3.0], [2.0, 4.0, 6.0]])
    assert rank_float(a) == 1
    basis = nullspace_float(a)
    assert basis.shape == (3, 2)
    assert np.abs(a @ basis).max() < 1e-9


def test_nullspace_exact():
    rows = [[Fraction(1), Fraction(2), Fraction(3)],
            [Fraction(2), Fraction(4), Fraction(6)]]
    basis = nullspace_exact(rows, 3)
    assert len(basis) == 2
    for vec in basis:
        for row in rows:
            assert sum(r * v for r, v in zip(row, vec)) == 0

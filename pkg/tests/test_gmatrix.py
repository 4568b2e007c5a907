"""Well-signed validation, the random generator, shifting, and the
complete-bipartite witness."""

import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from sapgraph.errors import DimensionMismatch, Disconnected
from sapgraph.gmatrix import (
    WellSignedMatrix,
    certify_one_negative,
    k2t_witness,
    random_well_signed,
    shift_to_one_negative,
    validate_well_signed,
)
from sapgraph.graphs import build_graph, generate_named
from sapgraph.spectra import SymMatrix, eigen_sym, inertia_exact


def test_validate_examples():
    k2 = build_graph(2, [(0, 1)])
    assert validate_well_signed(k2, SymMatrix.from_array(np.array([[0.0, -1.0], [-1.0, 0.0]]))) == []
    bad = validate_well_signed(k2, SymMatrix.from_array(np.array([[0.0, 1.0], [1.0, 0.0]])))
    assert len(bad) == 1 and "(0,1)" in bad[0]
    p3 = generate_named("path", 3)
    m = np.array([[0.0, -1.0, -0.5], [-1.0, 0.0, -1.0], [-0.5, -1.0, 0.0]])
    bad = validate_well_signed(p3, SymMatrix.from_array(m))
    assert len(bad) == 1 and "(0,2)" in bad[0]
    with pytest.raises(DimensionMismatch):
        validate_well_signed(k2, SymMatrix.from_array(np.zeros((3, 3))))


def test_random_generator_contract():
    c4 = generate_named("cycle", 4)
    m = random_well_signed(c4, 7)
    assert validate_well_signed(c4, m.matrix) == []
    for a, b in c4.edges:
        assert -2.0 <= m.matrix.entry(a, b) <= -0.1
    for i in range(4):
        assert -1.0 <= m.matrix.entry(i, i) <= 1.0
    assert random_well_signed(c4, 7).matrix.data == m.matrix.data
    assert random_well_signed(c4, 8).matrix.data != m.matrix.data


def test_shift_examples():
    k4 = generate_named("complete", 4)
    mj = WellSignedMatrix(k4, SymMatrix.from_array(-np.ones((4, 4))))
    out = shift_to_one_negative(mj, 0.0)
    assert np.allclose(out.matrix.to_array(), -np.ones((4, 4)), atol=1e-12)

    k2 = build_graph(2, [(0, 1)])
    m = WellSignedMatrix(k2, SymMatrix.from_array(np.array([[0.0, -1.0], [-1.0, 0.0]])))
    out = shift_to_one_negative(m, 0.5)
    assert np.allclose(out.matrix.to_array(), [[-0.5, -1.0], [-1.0, -0.5]], atol=1e-12)
    s = eigen_sym(out.matrix)
    assert np.allclose(s.eigenvalues, [-1.5, 0.5], atol=1e-12)

    c4 = generate_named("cycle", 4)
    a = np.zeros((4, 4))
    for i, j in c4.edges:
        a[i, j] = a[j, i] = -1.0
    out = shift_to_one_negative(WellSignedMatrix(c4, SymMatrix.from_array(a)), 0.0)
    s = eigen_sym(out.matrix)
    assert np.allclose(s.eigenvalues, [-2, 0, 0, 2], atol=1e-9)
    assert s.neg_count == 1 and s.zero_count == 2


def test_shift_requires_connected():
    g = build_graph(4, [(0, 1), (2, 3)])
    with pytest.raises(Disconnected):
        shift_to_one_negative(random_well_signed(g, 0), 0.0)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000))
def test_shift_gives_one_negative_and_kernel(seed):
    rng = random.Random(seed)
    n = rng.randint(3, 7)
    while True:
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.6]
        g = build_graph(n, edges)
        from sapgraph.graphs import is_connected
        if is_connected(g):
            break
    m = shift_to_one_negative(random_well_signed(g, seed), 0.0)
    assert validate_well_signed(g, m.matrix) == []
    s = eigen_sym(m.matrix)
    assert s.neg_count == 1 and s.zero_count >= 1
    assert certify_one_negative(m)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000), st.floats(-3.0, 3.0))
def test_diagonal_shift_preserves_sign_pattern(seed, c):
    rng = random.Random(seed)
    n = rng.randint(2, 6)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5]
    g = build_graph(n, edges)
    m = random_well_signed(g, seed)
    shifted = m.matrix.shifted(c)
    assert validate_well_signed(g, shifted) == []


def test_k2t_witness_small():
    w = k2t_witness(1)
    s = eigen_sym(w.matrix.to_float())
    assert s.zero_count == 1 and s.neg_count == 1
    w3 = k2t_witness(3)
    assert inertia_exact(w3.matrix) == (1, 3, 1)
    assert validate_well_signed(w3.graph, w3.matrix) == []
    w5 = k2t_witness(5)
    assert inertia_exact(w5.matrix) == (1, 5, 1)


def test_k2t_kernel_structure():
    # x with x_a = x_b = 0 and the t-side summing to zero kills the matrix,
    # as does e_a - e_b
    t = 4
    w = k2t_witness(t)
    a = w.matrix.to_array()
    n = t + 2
    for k in range(1, t):
        x = np.zeros(n)
        x[2] = 1.0
        x[2 + k] = -1.0
        assert np.abs(a @ x).max() < 1e-12
    x = np.zeros(n)
    x[0], x[1] = 1.0, -1.0
    assert np.abs(a @ x).max() < 1e-12


def test_wsm_json_roundtrip():
    c4 = generate_named("cycle", 4)
    m = random_well_signed(c4, 3)
    d = m.to_json_dict()
    assert set(d) == {"graph", "matrix", "tol"}
    back = WellSignedMatrix.from_json_dict(d)
    assert back.graph == c4 and back.matrix.data == m.matrix.data

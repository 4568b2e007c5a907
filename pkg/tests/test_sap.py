"""Transversality kernels, the quadric side, and their correspondence."""

import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from sapgraph.errors import ZeroForm
from sapgraph.gmatrix import k2t_witness, random_well_signed, shift_to_one_negative
from sapgraph.graphs import build_graph, generate_named, is_connected
from sapgraph.sap import (
    check_prop1,
    classify_quadric,
    has_sap,
    non_edges,
    quadric_kernel,
    sap_kernel,
    split_two_hyperplanes,
)
from sapgraph.spectra import SymMatrix, eigen_sym


def test_sap_complete_graph_trivial():
    k4 = generate_named("complete", 4)
    rep = sap_kernel(k4, SymMatrix.from_array(-np.ones((4, 4))))
    assert rep.kernel_dim == 0 and rep.witnesses == []
    assert has_sap(k4, SymMatrix.from_array(-np.ones((4, 4))))


def test_sap_fails_on_k2t():
    w = k2t_witness(4)
    rep = sap_kernel(w.graph, w.matrix)
    assert rep.exact and rep.kernel_dim >= 1
    a = w.matrix.to_array()
    for x in rep.witnesses:
        xa = x.to_array()
        assert np.abs(a @ xa).max() == 0  # exact arithmetic
        assert np.abs(np.diag(xa)).max() == 0
        for i, j in w.graph.edges:
            assert xa[i, j] == 0
    assert not has_sap(w.graph, w.matrix)


def test_sap_path_three():
    p3 = generate_named("path", 3)
    m = shift_to_one_negative(random_well_signed(p3, 5), 0.0)
    rep = sap_kernel(p3, m.matrix)
    assert rep.kernel_dim == 0


def test_sap_witness_residuals_float():
    w = k2t_witness(4)
    rep = sap_kernel(w.graph, w.matrix.to_float())
    assert rep.kernel_dim >= 1
    a = w.matrix.to_array()
    for x in rep.witnesses:
        assert np.abs(a @ x.to_array()).max() <= rep.tol * 10


def test_quadric_single_vertex():
    g = build_graph(1, [])
    rep = quadric_kernel(g, np.array([[1.0]]))
    assert rep.kernel_dim == 0


def test_quadric_c4_hand_solved():
    g = generate_named("cycle", 4)
    coords = np.array([[1.0, 0.0], [0.0, 1.0], [-1.0, 0.0], [0.0, -1.0]])
    rep = quadric_kernel(g, coords)
    assert rep.kernel_dim == 0


def test_prop1_vacuous_for_invertible():
    k3 = generate_named("complete", 3)
    m = SymMatrix.from_array(np.diag([1.0, 2.0, 3.0]) - np.ones((3, 3)))
    rep = check_prop1(k3, m)
    if rep.corank == 0:
        assert rep.vacuous and rep.dims_equal


def test_prop1_on_k4_and_k2t():
    k4 = generate_named("complete", 4)
    rep = check_prop1(k4, SymMatrix.from_array(-np.ones((4, 4))))
    assert rep.corank == 3 and rep.sap_dim == 0 and rep.quadric_dim == 0
    assert rep.consistent

    w = k2t_witness(4)
    rep = check_prop1(w.graph, w.matrix)
    assert rep.corank == 4
    assert rep.dims_equal and rep.sap_dim >= 1
    assert rep.max_mapped_residual <= rep.tol
    assert rep.consistent


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000))
def test_prop1_random_instances(seed):
    rng = random.Random(seed)
    n = rng.randint(4, 6)
    while True:
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.6]
        g = build_graph(n, edges)
        if is_connected(g):
            break
    m = shift_to_one_negative(random_well_signed(g, seed), 0.0)
    rep = check_prop1(g, m.matrix)
    assert rep.corank >= 1
    assert rep.dims_equal
    assert rep.vacuous or rep.max_mapped_residual <= rep.tol


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10_000))
def test_sap_dim_invariant_under_diagonal_congruence(seed):
    rng = random.Random(seed)
    n = rng.randint(4, 6)
    while True:
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.6]
        g = build_graph(n, edges)
        if is_connected(g):
            break
    m = shift_to_one_negative(random_well_signed(g, seed), 0.0)
    a = m.matrix.to_array()
    d = np.diag([rng.uniform(0.5, 2.0) for _ in range(n)])
    b = d @ a @ d
    dim_a = sap_kernel(g, SymMatrix.from_array(a)).kernel_dim
    dim_b = sap_kernel(g, SymMatrix.from_array(b)).kernel_dim
    assert dim_a == dim_b


def test_classify_quadric_examples():
    assert classify_quadric(np.diag([1.0, -1.0, 0.0, 0.0])) == "two_hyperplanes"
    assert classify_quadric(np.diag([1.0, 0.0, 0.0, 0.0])) == "one_hyperplane"
    assert classify_quadric(np.diag([1.0, 1.0, -1.0, -1.0])) == "irreducible"
    assert classify_quadric(np.diag([1.0, 1.0, 0.0])) == "irreducible"
    with pytest.raises(ZeroForm):
        classify_quadric(np.zeros((3, 3)))


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10_000))
def test_split_two_hyperplanes_roundtrip(seed):
    rng = np.random.default_rng(seed)
    d = int(rng.integers(2, 6))
    a = rng.normal(size=d)
    b = rng.normal(size=d)
    n = np.outer(a, b) + np.outer(b, a)
    if classify_quadric(n) != "two_hyperplanes":
        return  # parallel draws give a rank-one form
    x, y = split_two_hyperplanes(n)
    assert np.abs(np.outer(x, y) + np.outer(y, x) - n).max() <= 1e-8 * np.abs(n).max()


def test_non_edges():
    g = generate_named("cycle", 4)
    assert non_edges(g) == [(0, 2), (1, 3)]
    assert non_edges(generate_named("complete", 4)) == []

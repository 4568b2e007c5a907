"""Embeddings, spanned complexes, hyperplane verdicts, plane searches."""

import numpy as np
import pytest

from sapgraph.errors import (
    CorankTooSmall,
    EmptyKernel,
    WrongDimension,
    ZeroNormal,
)
from sapgraph.gmatrix import WellSignedMatrix, k2t_witness
from sapgraph.graphs import build_graph, generate_named
from sapgraph.geometry import (
    NullspaceEmbedding,
    check_vdh_all,
    find_disjoint_planes,
    find_plane_configuration,
    hyperplane_split,
    nullspace_embedding,
    spanned_complex,
    spanned_hyperplanes,
    two_hyperplane_cover,
)
from sapgraph.spectra import SymMatrix


def _c4_pair():
    c4 = generate_named("cycle", 4)
    a = np.zeros((4, 4))
    for i, j in c4.edges:
        a[i, j] = a[j, i] = -1.0
    return c4, WellSignedMatrix(c4, SymMatrix.from_array(a))


def _k4_pair():
    k4 = generate_named("complete", 4)
    return k4, WellSignedMatrix(k4, SymMatrix.from_array(-np.ones((4, 4))))


def _k5_pair():
    k5 = generate_named("complete", 5)
    return k5, WellSignedMatrix(k5, SymMatrix.from_array(-np.ones((5, 5))))


def test_embedding_of_rank_one():
    _, m = _k4_pair()
    u = nullspace_embedding(m)
    assert u.d == 3
    assert np.abs(u.coords.sum(axis=0)).max() < 1e-9
    for drop in range(4):
        sub = np.delete(u.coords, drop, axis=0)
        assert np.linalg.matrix_rank(sub) == 3


def test_embedding_requires_kernel():
    with pytest.raises(EmptyKernel):
        nullspace_embedding(SymMatrix.from_array(np.diag([1.0, 2.0])))


def test_embedding_c4_antipodal():
    _, m = _c4_pair()
    u = nullspace_embedding(m)
    assert u.d == 2
    assert np.allclose(u.coords[0], -u.coords[2], atol=1e-9)
    assert np.allclose(u.coords[1], -u.coords[3], atol=1e-9)


def test_complex_counts():
    c4, mc4 = _c4_pair()
    cx = spanned_complex(c4, nullspace_embedding(mc4))
    assert len(cx.lines) == 2 and len(cx.planes) == 1
    assert sorted(cx.lines[0].vertices + cx.lines[1].vertices) == [0, 1, 2, 3]
    assert len(cx.planes[0].edges) == 4

    k4, mk4 = _k4_pair()
    cx = spanned_complex(k4, nullspace_embedding(mk4))
    assert len(cx.lines) == 4 and len(cx.planes) == 6

    edge = build_graph(2, [(0, 1)])
    cx = spanned_complex(edge, np.array([[1.0, 0.0], [0.0, 1.0]]))
    assert len(cx.lines) == 2 and len(cx.planes) == 1


def test_complex_reports_zero_vertices_and_degenerate_edges():
    g = build_graph(3, [(0, 1), (1, 2)])
    coords = np.array([[1.0, 0.0], [2.0, 0.0], [0.0, 0.0]])
    cx = spanned_complex(g, coords)
    assert cx.zero_vertices == (2,)
    assert len(cx.lines) == 1 and cx.lines[0].vertices == (0, 1)
    assert cx.planes == [] and len(cx.degenerate_edges) == 1


def test_complex_invariant_under_rotation():
    k4, mk4 = _k4_pair()
    u = nullspace_embedding(mk4)
    rng = np.random.default_rng(11)
    q, _ = np.linalg.qr(rng.normal(size=(3, 3)))
    rotated = NullspaceEmbedding(3, u.coords @ q.T)
    cx0 = spanned_complex(k4, u)
    cx1 = spanned_complex(k4, rotated)
    assert len(cx0.lines) == len(cx1.lines)
    assert len(cx0.planes) == len(cx1.planes)


def test_hyperplane_split_c4():
    c4, mc4 = _c4_pair()
    u = nullspace_embedding(mc4)
    normal = np.array([-u.coords[0][1], u.coords[0][0]])
    sp = hyperplane_split(c4, u, normal)
    assert set(sp.on) == {0, 2}
    assert {sp.side_pos, sp.side_neg} == {(1,), (3,)}
    assert sp.verdict_sides and sp.verdict_crossing


def test_hyperplane_split_k4_opposite_sides():
    k4, mk4 = _k4_pair()
    u = nullspace_embedding(mk4)
    normal = np.cross(u.coords[0], u.coords[1])
    sp = hyperplane_split(k4, u, normal)
    assert set(sp.on) == {0, 1}
    assert len(sp.side_pos) == 1 and len(sp.side_neg) == 1
    assert sp.verdict_sides and sp.verdict_crossing


def test_hyperplane_split_negative_control():
    g = generate_named("path", 3)
    coords = np.array([[1.0, 1.0], [1.0, 2.0], [1.0, -1.0]])
    sp = hyperplane_split(g, coords, np.array([1.0, 0.0]))
    assert not sp.verdict_sides  # everything on one side
    with pytest.raises(ZeroNormal):
        hyperplane_split(g, coords, np.zeros(2))


def test_vdh_all_small_cases():
    c4, mc4 = _c4_pair()
    rep = check_vdh_all(c4, mc4.matrix)
    assert rep.hyperplane_count == 2 and rep.all_pass
    k4, mk4 = _k4_pair()
    rep = check_vdh_all(k4, mk4.matrix)
    assert rep.hyperplane_count == 6 and rep.all_pass
    with pytest.raises(CorankTooSmall):
        p3 = generate_named("path", 3)
        m = np.diag([1.0, -1.0, 0.0])
        m[0, 1] = m[1, 0] = -1.0
        m[1, 2] = m[2, 1] = -1.0
        check_vdh_all(p3, SymMatrix.from_array(m))


def test_vdh_octahedron_witness():
    from sapgraph.kappa import kappa_lower_bound
    octa = generate_named("complete_tripartite", 2, 2, 2)
    wit = kappa_lower_bound(octa, seed=1)
    assert wit.corank == 3
    rep = check_vdh_all(octa, wit.matrix.matrix)
    assert rep.all_pass


def test_find_disjoint_planes_k5():
    k5, mk5 = _k5_pair()
    u = nullspace_embedding(mk5)
    pair = find_disjoint_planes(k5, u)
    assert pair is not None
    stacked = np.hstack([pair[0].basis, pair[1].basis])
    assert np.linalg.matrix_rank(stacked) == 4


def test_find_disjoint_planes_wrong_dimension():
    c4, mc4 = _c4_pair()
    with pytest.raises(WrongDimension):
        find_disjoint_planes(c4, nullspace_embedding(mc4))


def test_common_line_fixture_has_no_disjoint_pair():
    star = build_graph(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
    coords = np.array([[1.0, 0, 0, 0], [0, 1.0, 0, 0], [0, 0, 1.0, 0],
                       [0, 0, 0, 1.0], [0, 1.0, 1.0, 1.0]])
    assert find_disjoint_planes(star, coords) is None
    assert find_plane_configuration(star, coords) is None


def test_plane_configuration_k5():
    k5, mk5 = _k5_pair()
    u = nullspace_embedding(mk5)
    cfg = find_plane_configuration(k5, u)
    assert cfg is not None
    p1, p2, p3, p4 = cfg
    from sapgraph.geometry import _intersection_dim
    assert _intersection_dim([p1.basis, p2.basis, p3.basis], 4) >= 1
    assert _intersection_dim([p1.basis, p4.basis], 4) == 0


def test_plane_configuration_needs_enough_planes():
    g = build_graph(3, [(0, 1), (0, 2), (1, 2)])
    coords = np.array([[1.0, 0, 0, 0], [0, 1.0, 0, 0], [0, 0, 1.0, 0]])
    assert find_plane_configuration(g, coords) is None


def test_two_hyperplane_cover_branches():
    k5, mk5 = _k5_pair()
    assert two_hyperplane_cover(k5, nullspace_embedding(mk5)).status == "none"

    planted_g = build_graph(5, [(0, 1), (0, 2), (1, 2), (3, 4), (1, 3), (1, 4)])
    planted_u = np.array([[1.0, 0, 0], [0, 1.0, 0], [1.0, 1.0, 0],
                          [0, 0, 1.0], [0, 1.0, 1.0]])
    cov = two_hyperplane_cover(planted_g, planted_u)
    assert cov.status == "cover"
    a, b = cov.normals
    for coord in planted_u:
        assert min(abs(np.dot(a, coord)), abs(np.dot(b, coord))) < 1e-6

    free = build_graph(3, [])
    assert two_hyperplane_cover(free, np.eye(3)).status == "unknown"
    with pytest.raises(WrongDimension):
        two_hyperplane_cover(free, np.ones((3, 1)))


def test_spanned_hyperplanes_dedup():
    k4, mk4 = _k4_pair()
    normals = spanned_hyperplanes(k4, nullspace_embedding(mk4))
    assert len(normals) == 6
    for i in range(len(normals)):
        for j in range(i + 1, len(normals)):
            assert abs(np.dot(normals[i], normals[j])) < 1 - 1e-9

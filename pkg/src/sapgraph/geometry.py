"""Nullspace embeddings and the geometry of their spanned subspaces.

The kernel basis of a matrix with corank d places each vertex at a point
of R^d; the union of vertex lines and edge planes is the object every
check here works on: hyperplane splits and their connectivity verdicts,
searches for disjoint plane pairs and for the shared-line plane
configuration, and the two-hyperplane cover decision through the quadric
kernel.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    CorankTooSmall,
    Disconnected,
    EmptyKernel,
    WrongDimension,
    ZeroNormal,
)
from .gmatrix import WellSignedMatrix
from .graphs import Graph, is_connected
from .sap import QuadricReport, classify_quadric, quadric_kernel, split_two_hyperplanes
from .spectra import SymMatrix, default_tol, eigen_sym, nullspace_float, rank_float

ANGLE_TOL = 1e-6  # subspaces are equal iff the largest principal angle is below this


@dataclass
class NullspaceEmbedding:
    """Per-vertex vectors u_i in R^d; row i of coords is u_i."""

    d: int
    coords: np.ndarray
    tol: float = 0.0

    @property
    def n(self) -> int:
        return self.coords.shape[0]

    def to_csv(self) -> str:
        lines = []
        for i in range(self.n):
            lines.append(",".join([str(i)] + [repr(float(x)) for x in self.coords[i]]))
        return "\n".join(lines) + "\n"


def nullspace_embedding(m, tol: float | None = None) -> NullspaceEmbedding:
    """Embedding from the orthonormal kernel basis; d = corank."""
    mat = m.matrix if isinstance(m, WellSignedMatrix) else m
    summary = eigen_sym(mat, tol)
    if summary.zero_count == 0:
        raise EmptyKernel("matrix has trivial kernel")
    return NullspaceEmbedding(summary.zero_count, summary.kernel_basis.copy(), summary.tol)


def _coords_of(u) -> np.ndarray:
    if isinstance(u, NullspaceEmbedding):
        return u.coords
    return np.asarray(u, dtype=float)


def _unit(v: np.ndarray) -> np.ndarray:
    return v / np.linalg.norm(v)


def _canonical_direction(v: np.ndarray) -> np.ndarray:
    u = _unit(v)
    for x in u:
        if abs(x) > 1e-9:
            return u if x > 0 else -u
    return u


def same_line(a: np.ndarray, b: np.ndarray) -> bool:
    return abs(float(np.dot(_unit(a), _unit(b)))) >= math.cos(ANGLE_TOL)


def same_subspace(b1: np.ndarray, b2: np.ndarray) -> bool:
    """Equality of subspaces given orthonormal column bases of equal dim:
    all principal angles below ANGLE_TOL."""
    if b1.shape != b2.shape:
        return False
    sig = np.linalg.svd(b1.T @ b2, compute_uv=False)
    return bool(sig.min() >= math.cos(ANGLE_TOL))


def orthonormal_basis(vectors: np.ndarray, tol: float | None = None) -> np.ndarray:
    """Gram-Schmidt columns spanning the same space; drops dependent input."""
    vs = np.asarray(vectors, dtype=float)
    if vs.ndim == 1:
        vs = vs[:, None]
    if tol is None:
        tol = 1e-12 * max(1.0, float(np.abs(vs).max()))
    cols = []
    for k in range(vs.shape[1]):
        w = vs[:, k].copy()
        for c in cols:
            w -= np.dot(c, w) * c
        norm = np.linalg.norm(w)
        if norm > tol * 10:
            cols.append(w / norm)
    return np.stack(cols, axis=1) if cols else np.zeros((vs.shape[0], 0))


@dataclass
class SpanLine:
    direction: np.ndarray
    vertices: tuple[int, ...]


@dataclass
class SpanPlane:
    basis: np.ndarray  # (d, 2), orthonormal columns
    edges: tuple[tuple[int, int], ...]


@dataclass
class SpannedComplex:
    """Distinct vertex lines and edge planes of an embedding."""

    d: int
    lines: list[SpanLine]
    planes: list[SpanPlane]
    degenerate_edges: list[tuple[tuple[int, int], int]]  # edge -> line index
    zero_vertices: tuple[int, ...] = ()


def spanned_complex(g: Graph, u, tol: float | None = None) -> SpannedComplex:
    """Deduplicated lines <u_i> and planes <u_i, u_j> over edges.

    Vertices with u_i = 0 are reported and excluded; edges with dependent
    endpoints contribute their line (recorded separately), not a plane.
    """
    coords = _coords_of(u)
    n, d = coords.shape
    scale = float(np.abs(coords).max()) if coords.size else 0.0
    ztol = (tol if tol is not None else 1e-9 * max(1.0, scale))
    zero_set = {i for i in range(n) if np.linalg.norm(coords[i]) <= ztol}
    zero_vertices = tuple(sorted(zero_set))
    line_dirs: list[np.ndarray] = []
    line_members: list[list[int]] = []
    line_index: dict[int, int] = {}
    for i in range(n):
        if i in zero_set:
            continue
        for k, direction in enumerate(line_dirs):
            if same_line(coords[i], direction):
                line_members[k].append(i)
                line_index[i] = k
                break
        else:
            line_dirs.append(_canonical_direction(coords[i]))
            line_members.append([i])
            line_index[i] = len(line_dirs) - 1
    lines = [SpanLine(direction, tuple(mem))
             for direction, mem in zip(line_dirs, line_members)]

    planes: list[SpanPlane] = []
    plane_edges: list[list[tuple[int, int]]] = []
    degenerate: list[tuple[tuple[int, int], int]] = []
    for e in g.edges:
        i, j = e
        if i in zero_set or j in zero_set:
            continue
        basis = orthonormal_basis(np.stack([coords[i], coords[j]], axis=1))
        if basis.shape[1] < 2:
            degenerate.append((e, line_index[i]))
            continue
        for k, pl in enumerate(planes):
            if same_subspace(basis, pl.basis):
                plane_edges[k].append(e)
                break
        else:
            planes.append(SpanPlane(basis, ()))
            plane_edges.append([e])
    planes = [SpanPlane(pl.basis, tuple(es)) for pl, es in zip(planes, plane_edges)]
    return SpannedComplex(d, lines, planes, degenerate, zero_vertices)


@dataclass
class HyperplaneSplit:
    """Partition of the vertices by the sign of <normal, u_i>."""

    normal: np.ndarray
    side_pos: tuple[int, ...]
    on: tuple[int, ...]
    side_neg: tuple[int, ...]
    verdict_sides: bool = field(default=False)       # both sides nonempty + connected
    verdict_crossing: bool = field(default=False)    # on-vertices see both sides
    crossing_failures: tuple[int, ...] = ()


def _induces_connected(g: Graph, vertices: tuple[int, ...]) -> bool:
    if not vertices:
        return False
    vs = set(vertices)
    adj = g.adjacency_sets()
    seen = {vertices[0]}
    stack = [vertices[0]]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w in vs and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(vs)


def hyperplane_split(g: Graph, u, normal: np.ndarray,
                     tol: float | None = None) -> HyperplaneSplit:
    """Split the vertex set by a hyperplane and evaluate both halfspace
    verdicts: nonempty connected open sides, and every on-hyperplane vertex
    with a neighbour on one side having a neighbour on the other."""
    coords = _coords_of(u)
    normal = np.asarray(normal, dtype=float)
    if np.linalg.norm(normal) == 0:
        raise ZeroNormal("hyperplane normal is zero")
    dots = coords @ normal
    band = (tol if tol is not None else 1e-9) * max(1.0, float(np.abs(dots).max()))
    pos = tuple(i for i in range(g.n) if dots[i] > band)
    neg = tuple(i for i in range(g.n) if dots[i] < -band)
    on = tuple(i for i in range(g.n) if abs(dots[i]) <= band)
    verdict_sides = (bool(pos) and bool(neg)
                     and _induces_connected(g, pos) and _induces_connected(g, neg))
    pos_set, neg_set = set(pos), set(neg)
    adj = g.adjacency_sets()
    failures = []
    for v in on:
        has_pos = any(w in pos_set for w in adj[v])
        has_neg = any(w in neg_set for w in adj[v])
        if has_pos != has_neg:
            failures.append(v)
    return HyperplaneSplit(normal, pos, on, neg, verdict_sides, not failures,
                           tuple(failures))


@dataclass
class VdhReport:
    """Hyperplane-split verdicts over every spanned hyperplane."""

    hyperplane_count: int
    splits: list[HyperplaneSplit]
    all_pass: bool
    failed_indices: tuple[int, ...]


def spanned_hyperplanes(g: Graph, u, tol: float | None = None) -> list[np.ndarray]:
    """Normals of all hyperplanes spanned by (d-1)-subsets of the distinct
    vertex directions, deduplicated."""
    coords = _coords_of(u)
    d = coords.shape[1]
    cx = spanned_complex(g, u, tol)
    dirs = [ln.direction for ln in cx.lines]
    normals: list[np.ndarray] = []
    for subset in itertools.combinations(range(len(dirs)), d - 1):
        mat = np.stack([dirs[k] for k in subset], axis=0)  # (d-1, d)
        if rank_float(mat, 1e-9) < d - 1:
            continue
        null = nullspace_float(mat, 1e-9)
        if null.shape[1] != 1:
            continue
        normal = _canonical_direction(null[:, 0])
        if not any(same_line(normal, m) for m in normals):
            normals.append(normal)
    return normals


def check_vdh_all(g: Graph, m, tol: float | None = None,
                  embedding: NullspaceEmbedding | None = None) -> VdhReport:
    """Run hyperplane_split on every spanned hyperplane and require both
    verdicts to hold on each."""
    if not is_connected(g):
        raise Disconnected("the hyperplane verdicts need a connected graph")
    u = embedding if embedding is not None else nullspace_embedding(m, tol)
    if u.d < 2:
        raise CorankTooSmall(f"corank {u.d} < 2")
    normals = spanned_hyperplanes(g, u, tol)
    splits = [hyperplane_split(g, u, nrm, tol) for nrm in normals]
    failed = tuple(k for k, s in enumerate(splits)
                   if not (s.verdict_sides and s.verdict_crossing))
    return VdhReport(len(splits), splits, not failed, failed)


def _intersection_dim(bases: list[np.ndarray], d: int) -> int:
    """Dimension of the intersection of subspaces given orthonormal bases."""
    rows = []
    eye = np.eye(d)
    for b in bases:
        rows.append(eye - b @ b.T)
    stacked = np.vstack(rows)
    return nullspace_float(stacked, 1e-9).shape[1]


def find_disjoint_planes(g: Graph, u) -> tuple[SpanPlane, SpanPlane] | None:
    """First pair of spanned planes meeting only at the origin, in canonical
    (first supporting edge) order.  Defined for d = 4."""
    coords = _coords_of(u)
    if coords.shape[1] != 4:
        raise WrongDimension(f"need d = 4, got {coords.shape[1]}")
    cx = spanned_complex(g, u)
    planes = cx.planes
    for a, b in itertools.combinations(range(len(planes)), 2):
        stacked = np.hstack([planes[a].basis, planes[b].basis])
        if rank_float(stacked, 1e-9) == 4:
            return planes[a], planes[b]
    return None


def find_plane_configuration(g: Graph, u) -> tuple[SpanPlane, SpanPlane, SpanPlane, SpanPlane] | None:
    """Planes P1..P4 with a common line through P1, P2, P3 and P4 meeting
    P1 only at the origin; first hit in canonical order.  Defined for d = 4."""
    coords = _coords_of(u)
    if coords.shape[1] != 4:
        raise WrongDimension(f"need d = 4, got {coords.shape[1]}")
    cx = spanned_complex(g, u)
    planes = cx.planes
    idx = range(len(planes))
    for i1 in idx:
        b1 = planes[i1].basis
        partners = [i4 for i4 in idx if i4 != i1
                    and rank_float(np.hstack([b1, planes[i4].basis]), 1e-9) == 4]
        if not partners:
            continue
        for i2, i3 in itertools.combinations([k for k in idx if k != i1], 2):
            if _intersection_dim([b1, planes[i2].basis, planes[i3].basis], 4) >= 1:
                for i4 in partners:
                    if i4 in (i2, i3):
                        continue
                    return planes[i1], planes[i2], planes[i3], planes[i4]
    return None


@dataclass
class CoverResult:
    status: str  # "none" | "cover" | "unknown"
    normals: tuple[np.ndarray, np.ndarray] | None = None
    form: SymMatrix | None = None
    quadric: QuadricReport | None = None


def two_hyperplane_cover(g: Graph, u, tol: float | None = None,
                         grid_step: float = 1e-3) -> CoverResult:
    """Decide whether the spanned complex fits inside one or two hyperplanes.

    The quadric kernel decides: an empty kernel means no quadric at all
    contains the complex; a kernel of dimension <= 2 is scanned (grid plus
    golden-section refinement on the third-largest |eigenvalue|) for a
    reducible form; higher-dimensional kernels return "unknown".
    """
    coords = _coords_of(u)
    d = coords.shape[1]
    if d < 2:
        raise WrongDimension(f"need d >= 2, got {d}")
    quad = quadric_kernel(g, coords, tol)
    if quad.kernel_dim == 0:
        return CoverResult("none", quadric=quad)
    if quad.kernel_dim > 2:
        return CoverResult("unknown", quadric=quad)

    def reducible(form: np.ndarray) -> CoverResult | None:
        mat = SymMatrix.from_array(form)
        kind = classify_quadric(mat)
        if kind in ("one_hyperplane", "two_hyperplanes"):
            a, b = split_two_hyperplanes(mat)
            return CoverResult("cover", (a, b), mat, quad)
        return None

    if quad.kernel_dim == 1:
        hit = reducible(quad.witnesses[0].to_array())
        return hit if hit is not None else CoverResult("none", quadric=quad)

    n1 = quad.witnesses[0].to_array()
    n2 = quad.witnesses[1].to_array()
    scale = max(np.abs(n1).max(), np.abs(n2).max())
    rank_tol = 1e-8 * scale

    def third_eig(theta: float) -> float:
        form = math.cos(theta) * n1 + math.sin(theta) * n2
        vals = np.sort(np.abs(eigen_sym(SymMatrix.from_array(form)).eigenvalues))[::-1]
        return float(vals[2]) if d >= 3 else 0.0

    if d < 3:
        hit = reducible(n1)
        if hit is not None:
            return hit
        hit = reducible(n2)
        return hit if hit is not None else CoverResult("none", quadric=quad)

    thetas = np.arange(0.0, math.pi, grid_step)
    values = [third_eig(t) for t in thetas]
    result = None
    for k in range(len(thetas)):
        prev_v = values[k - 1] if k > 0 else values[-1]
        next_v = values[(k + 1) % len(values)]
        if values[k] <= prev_v and values[k] <= next_v:
            lo = thetas[k] - grid_step
            hi = thetas[k] + grid_step
            gr = (math.sqrt(5.0) - 1.0) / 2.0
            a, b = lo, hi
            c = b - gr * (b - a)
            e = a + gr * (b - a)
            for _ in range(60):
                if third_eig(c) < third_eig(e):
                    b = e
                else:
                    a = c
                c = b - gr * (b - a)
                e = a + gr * (b - a)
            t_star = 0.5 * (a + b)
            if third_eig(t_star) <= rank_tol:
                form = math.cos(t_star) * n1 + math.sin(t_star) * n2
                result = reducible(form)
                if result is not None:
                    return result
    return CoverResult("none", quadric=quad)

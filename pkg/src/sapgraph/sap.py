"""Transversality kernels: the Strong Arnold Property as linear algebra.

A matrix M fails the Strong Arnold Property exactly when some nonzero
symmetric X with zero diagonal and zeros on edges satisfies MX = 0.  The
same kernel can be computed on the nullspace-embedding side as symmetric
forms N with u_i^T N u_i = 0 on vertices and u_i^T N u_j = 0 on edges; the
map N -> U^T N U carries one kernel onto the other, and both dimensions
are checked against each other here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DimensionMismatch, EmptyEmbedding, ZeroForm
from .gmatrix import WellSignedMatrix
from .graphs import Graph
from .spectra import (
    SymMatrix,
    default_tol,
    eigen_sym,
    nullspace_exact,
    nullspace_float,
)


@dataclass
class SapReport:
    kernel_dim: int
    witnesses: list[SymMatrix]
    tol: float
    exact: bool = False

    def to_json_dict(self) -> dict:
        return {
            "kernel_dim": self.kernel_dim,
            "witnesses": [w.to_json_dict() for w in self.witnesses],
            "tol": self.tol,
        }


@dataclass
class QuadricReport:
    kernel_dim: int
    witnesses: list[SymMatrix]
    tol: float

    def to_json_dict(self) -> dict:
        return {
            "kernel_dim": self.kernel_dim,
            "witnesses": [w.to_json_dict() for w in self.witnesses],
            "tol": self.tol,
        }


def non_edges(g: Graph) -> list[tuple[int, int]]:
    edge_set = set(g.edges)
    return [(i, j) for i in range(g.n) for j in range(i + 1, g.n)
            if (i, j) not in edge_set]


def _as_matrix(m) -> tuple[Graph | None, SymMatrix]:
    if isinstance(m, WellSignedMatrix):
        return m.graph, m.matrix
    return None, m


def sap_kernel(g: Graph, m, tol: float | None = None) -> SapReport:
    """Kernel of the constraint system MX = 0 over the free entries of X.

    Unknowns are X_ij on non-adjacent pairs i < j (symmetric completion,
    zero diagonal, zero on edges); all n^2 entries of MX contribute
    constraints.  Rational matrices take the exact elimination route.
    """
    _, mat = _as_matrix(m)
    if g.n != mat.n:
        raise DimensionMismatch(f"graph n={g.n} vs matrix n={mat.n}")
    pairs = non_edges(g)
    if not pairs:
        return SapReport(0, [], default_tol(mat) if tol is None else tol, mat.rational)
    if mat.rational:
        return _sap_kernel_exact(g, mat, pairs)
    a = mat.to_array()
    n = g.n
    cols = len(pairs)
    sys_rows = np.zeros((n * n, cols))
    idx = np.arange(n)
    for k, (i, j) in enumerate(pairs):
        sys_rows[idx * n + j, k] += a[:, i]
        sys_rows[idx * n + i, k] += a[:, j]
    if tol is None:
        tol = default_tol(a)
    basis = nullspace_float(sys_rows, tol)
    witnesses = [_sym_from_pairs(n, pairs, basis[:, k]) for k in range(basis.shape[1])]
    return SapReport(basis.shape[1], witnesses, tol, False)


def _sap_kernel_exact(g: Graph, mat: SymMatrix, pairs) -> SapReport:
    n = g.n
    rows = mat.to_fraction_rows()
    sys_rows = [[Fraction(0)] * len(pairs) for _ in range(n * n)]
    for k, (i, j) in enumerate(pairs):
        for r in range(n):
            sys_rows[r * n + j][k] += rows[r][i]
            sys_rows[r * n + i][k] += rows[r][j]
    basis = nullspace_exact(sys_rows, len(pairs))
    witnesses = []
    for vec in basis:
        w = [[Fraction(0)] * n for _ in range(n)]
        for k, (i, j) in enumerate(pairs):
            w[i][j] = w[j][i] = vec[k]
        witnesses.append(SymMatrix.from_rows(w, rational=True))
    return SapReport(len(basis), witnesses, 0.0, True)


def _sym_from_pairs(n: int, pairs, values) -> SymMatrix:
    w = np.zeros((n, n))
    for k, (i, j) in enumerate(pairs):
        w[i, j] = w[j, i] = float(values[k])
    return SymMatrix.from_array(w)


def has_sap(g: Graph, m, tol: float | None = None) -> bool:
    return sap_kernel(g, m, tol).kernel_dim == 0


def quadric_kernel(g: Graph, coords: np.ndarray, tol: float | None = None) -> QuadricReport:
    """Kernel of the homogeneous-quadric containment system.

    coords has one row per vertex (the nullspace embedding); unknowns are
    the d(d+1)/2 entries of a symmetric form N, constrained to vanish on
    every vertex vector and on every edge pair.
    """
    coords = np.asarray(coords, dtype=float)
    if coords.ndim != 2 or coords.shape[0] != g.n:
        raise DimensionMismatch("coords must be (n, d)")
    d = coords.shape[1]
    if d < 1:
        raise EmptyEmbedding("embedding dimension must be >= 1")
    unknowns = [(k, l) for k in range(d) for l in range(k, d)]
    rows = []
    for i in range(g.n):
        u = coords[i]
        rows.append([u[k] * u[k] if k == l else 2.0 * u[k] * u[l] for k, l in unknowns])
    for i, j in g.edges:
        u, v = coords[i], coords[j]
        rows.append([u[k] * v[k] if k == l else u[k] * v[l] + u[l] * v[k]
                     for k, l in unknowns])
    sys_rows = np.array(rows)
    if tol is None:
        tol = default_tol(sys_rows)
    basis = nullspace_float(sys_rows, tol)
    witnesses = []
    for c in range(basis.shape[1]):
        w = np.zeros((d, d))
        for k_idx, (k, l) in enumerate(unknowns):
            w[k, l] = w[l, k] = basis[k_idx, c]
        witnesses.append(SymMatrix.from_array(w))
    return QuadricReport(basis.shape[1], witnesses, tol)


@dataclass
class Prop1Report:
    """Outcome of checking the SAP/quadric kernel correspondence."""

    corank: int
    sap_dim: int
    quadric_dim: int
    dims_equal: bool
    max_mapped_residual: float
    vacuous: bool
    tol: float

    @property
    def consistent(self) -> bool:
        return self.dims_equal and (self.vacuous or self.max_mapped_residual <= self.tol)


def check_prop1(g: Graph, m, tol: float | None = None) -> Prop1Report:
    """Verify the two kernels have equal dimension and that every quadric
    witness N maps to a SAP witness X = U^T N U within tolerance."""
    _, mat = _as_matrix(m)
    fmat = mat.to_float()
    if tol is None:
        tol = default_tol(fmat)
    summary = eigen_sym(fmat, tol)
    sap = sap_kernel(g, fmat, tol)
    if summary.zero_count == 0:
        return Prop1Report(0, sap.kernel_dim, 0, sap.kernel_dim == 0, 0.0, True, tol)
    basis = summary.kernel_basis  # (n, d) orthonormal columns; rows are u_i
    quad = quadric_kernel(g, basis, tol)
    a = fmat.to_array()
    edge_list = list(g.edges)
    worst = 0.0
    for w in quad.witnesses:
        nf = w.to_array()
        scale = np.abs(nf).max()
        if scale > 0:
            nf = nf / scale
        x = basis @ nf @ basis.T
        worst = max(worst, float(np.abs(np.diag(x)).max()))
        for i, j in edge_list:
            worst = max(worst, abs(x[i, j]))
        worst = max(worst, float(np.abs(a @ x).max()))
    return Prop1Report(summary.zero_count, sap.kernel_dim, quad.kernel_dim,
                       sap.kernel_dim == quad.kernel_dim, worst, False, tol)


def classify_quadric(n_form, tol: float | None = None) -> str:
    """Reducibility of the quadric {x : x^T N x = 0}.

    rank 1: one hyperplane; rank 2 with signature (1,1): two hyperplanes;
    anything else contains no hyperplane.
    """
    mat = SymMatrix.from_array(n_form) if isinstance(n_form, np.ndarray) else n_form
    summary = eigen_sym(mat, tol)
    rank = mat.n - summary.zero_count
    if rank == 0:
        raise ZeroForm("zero quadratic form")
    if rank == 1:
        return "one_hyperplane"
    if rank == 2 and summary.neg_count == 1 and summary.pos_count == 1:
        return "two_hyperplanes"
    return "irreducible"


def split_two_hyperplanes(n_form, tol: float | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Factor a reducible form as a b^T + b a^T; the quadric is then the
    union of the hyperplanes a-perp and b-perp."""
    mat = SymMatrix.from_array(n_form) if isinstance(n_form, np.ndarray) else n_form
    kind = classify_quadric(mat, tol)
    summary = eigen_sym(mat, tol)
    vals, vecs = summary.eigenvalues, summary.vectors
    if kind == "one_hyperplane":
        k = int(np.argmax(np.abs(vals)))
        v = vecs[:, k]
        return v, 0.5 * float(vals[k]) * v
    if kind == "two_hyperplanes":
        pos = int(np.argmax(vals))
        neg = int(np.argmin(vals))
        x = np.sqrt(float(vals[pos])) * vecs[:, pos]
        y = np.sqrt(-float(vals[neg])) * vecs[:, neg]
        return (x + y) / np.sqrt(2.0), (x - y) / np.sqrt(2.0)
    raise ZeroForm("form is irreducible; no hyperplane factorization")

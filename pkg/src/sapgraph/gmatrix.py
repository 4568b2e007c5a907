"""Construction and validation of well-signed matrices for a graph.

A matrix is well-signed for G when every off-diagonal entry is strictly
negative on an edge and zero on a non-edge; the diagonal is free.  The
shift construction relies on the smallest eigenvalue of such a matrix
being simple on a connected graph, so subtracting lambda_2 leaves exactly
one negative eigenvalue and a nontrivial kernel.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch, Disconnected
from .graphs import Graph, is_connected
from .spectra import SymMatrix, default_tol, eigen_sym


@dataclass(frozen=True)
class WellSignedMatrix:
    graph: Graph
    matrix: SymMatrix

    def __post_init__(self):
        if self.graph.n != self.matrix.n:
            raise DimensionMismatch(
                f"graph has {self.graph.n} vertices, matrix is {self.matrix.n}x{self.matrix.n}")

    def to_json_dict(self, tol: float | None = None) -> dict:
        return {
            "graph": self.graph.to_json_dict(),
            "matrix": self.matrix.to_json_dict(),
            "tol": default_tol(self.matrix) if tol is None else tol,
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "WellSignedMatrix":
        return cls(Graph.from_json_dict(d["graph"]), SymMatrix.from_json_dict(d["matrix"]))


def validate_well_signed(g: Graph, m: SymMatrix) -> list[str]:
    """Empty list iff m is a well-signed matrix for g; entries name violations."""
    if g.n != m.n:
        raise DimensionMismatch(f"graph n={g.n} vs matrix n={m.n}")
    edge_set = set(g.edges)
    problems = []
    for i in range(m.n):
        for j in range(i + 1, m.n):
            v = m.entry(i, j)
            if (i, j) in edge_set:
                if not v < 0:
                    problems.append(f"entry ({i},{j}) = {v} must be negative on edge")
            elif v != 0:
                problems.append(f"entry ({i},{j}) = {v} must be zero on non-edge")
    return problems


def random_well_signed(g: Graph, seed: int,
                       edge_range: tuple[float, float] = (-2.0, -0.1),
                       diag_range: tuple[float, float] = (-1.0, 1.0)) -> WellSignedMatrix:
    """Seeded random well-signed matrix: uniform edge weights and diagonal."""
    rng = random.Random(seed)
    rows = [[0.0] * g.n for _ in range(g.n)]
    for i in range(g.n):
        rows[i][i] = rng.uniform(*diag_range)
    for a, b in g.edges:
        w = rng.uniform(*edge_range)
        rows[a][b] = rows[b][a] = w
    return WellSignedMatrix(g, SymMatrix.from_rows(rows, rational=False))


def shift_to_one_negative(m: WellSignedMatrix, delta: float = 0.0,
                          tol: float | None = None) -> WellSignedMatrix:
    """Subtract (lambda_2 - delta) I so exactly one eigenvalue stays negative.

    Requires a connected graph (simple smallest eigenvalue) and
    0 <= delta < lambda_2 - lambda_1.  With delta = 0 the shifted matrix has
    corank >= 1.
    """
    if delta < 0:
        raise ValueError("delta must be nonnegative")
    if not is_connected(m.graph):
        raise Disconnected("shift needs a connected graph")
    summary = eigen_sym(m.matrix, tol)
    lam2 = float(summary.eigenvalues[1])
    shifted = m.matrix.to_float().shifted(-(lam2 - delta))
    out = WellSignedMatrix(m.graph, shifted)
    check = eigen_sym(shifted, tol)
    if check.neg_count != 1:
        raise ValueError(
            f"shift by delta={delta} left {check.neg_count} negative eigenvalues; "
            "delta must stay below the spectral gap")
    return out


def certify_one_negative(m: WellSignedMatrix,
                         margin: Fraction = Fraction(1, 10**6)) -> bool:
    """Exact-arithmetic certificate that exactly one eigenvalue sits below
    -margin and none other reaches it.

    Float entries convert to rationals exactly, so the only slack is the
    margin itself: it must exceed the kernel noise of the shift (~1e-12)
    and stay below the spectral gap.  Counts the inertia of M + margin*I.
    """
    from .spectra import inertia_exact

    rows = [[Fraction(m.matrix.entry(i, j)) for j in range(m.matrix.n)]
            for i in range(m.matrix.n)]
    shifted = SymMatrix.from_rows(rows, rational=True).shifted(margin)
    neg, _, _ = inertia_exact(shifted)
    return neg == 1


def k2t_witness(t: int) -> WellSignedMatrix:
    """Rank-2 well-signed matrix for K_{2,t} with inertia (1, t, 1).

    Vertices 0,1 form the degree-t side, 2..t+1 the other side; the matrix
    is -(p q^T + q p^T) with p = e_0 + e_1 and q the indicator of the
    t-side, i.e. -1 exactly on edges.  Rational entries, so the inertia is
    certifiable exactly.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    n = t + 2
    g = Graph(n, tuple(sorted((a, b + 2) for a in (0, 1) for b in range(t))))
    rows = [[Fraction(0)] * n for _ in range(n)]
    for a in (0, 1):
        for b in range(2, n):
            rows[a][b] = rows[b][a] = Fraction(-1)
    return WellSignedMatrix(g, SymMatrix.from_rows(rows, rational=True))

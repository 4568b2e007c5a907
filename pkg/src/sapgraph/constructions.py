"""Circuit matrices from planar vector configurations and the interpolation
experiment that replays the two-negative-eigenvalue contradiction.

A cyclic configuration u: C -> R^2 with consecutive vectors independent
and every vertex's two neighbours on opposite sides of its own line
determines a well-signed circuit matrix with the two coordinate slices in
its kernel: off-diagonal entries -1/|det(u_i, u_j)| and the diagonal fixed
by a_ij u_i + a_jk u_k = -a_jj u_j.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    BadParams,
    DependentConsecutive,
    Disconnected,
    HypothesisViolated,
    KernelNotContained,
    SidesConditionViolated,
    SizeMismatch,
    WalkStuck,
)
from .gmatrix import WellSignedMatrix
from .graphs import Graph, is_connected
from .geometry import SpanPlane, _coords_of, _intersection_dim, spanned_complex
from .spectra import SymMatrix, default_tol, eigen_sym


@dataclass
class CircuitMatrix:
    """Well-signed matrix supported on a circuit, zero rows elsewhere."""

    circuit: tuple[int, ...]
    matrix: SymMatrix
    coords: np.ndarray  # (len(circuit), 2), in circuit order

    @property
    def n(self) -> int:
        return self.matrix.n

    def kernel_slices(self) -> np.ndarray:
        """The two coordinate slices of the configuration, zero off-circuit,
        as columns of an (n, 2) array; both lie in ker(matrix)."""
        out = np.zeros((self.n, 2))
        for t, v in enumerate(self.circuit):
            out[v] = self.coords[t]
        return out


def _det2(a: np.ndarray, b: np.ndarray) -> float:
    return float(a[0] * b[1] - a[1] * b[0])


def circuit_matrix(cycle, u2d, n: int | None = None,
                   tol: float | None = None) -> CircuitMatrix:
    """Build the circuit matrix of a strictly alternating 2D configuration.

    `cycle` lists distinct vertex ids in circuit order; row t of `u2d` is
    the vector of cycle[t].  The matrix is sized n x n (default: large
    enough for the labels) with zero rows off the circuit.
    """
    cycle = tuple(int(v) for v in cycle)
    k = len(cycle)
    if k < 3:
        raise BadParams("a circuit needs at least 3 vertices")
    if len(set(cycle)) != k:
        raise BadParams("circuit vertices must be distinct")
    coords = np.asarray(u2d, dtype=float)
    if coords.shape != (k, 2):
        raise BadParams(f"need one 2D vector per circuit vertex, got {coords.shape}")
    if n is None:
        n = max(cycle) + 1
    if n < max(cycle) + 1:
        raise BadParams("matrix size too small for the circuit labels")
    scale = float(np.abs(coords).max())
    dtol = (tol if tol is not None else 1e-12) * max(1.0, scale * scale)
    if any(np.linalg.norm(coords[t]) <= dtol for t in range(k)):
        raise BadParams("circuit vectors must be nonzero")
    dets = [_det2(coords[t], coords[(t + 1) % k]) for t in range(k)]
    for t, det in enumerate(dets):
        if abs(det) <= dtol:
            raise DependentConsecutive(
                f"vectors of {cycle[t]} and {cycle[(t + 1) % k]} are dependent")
    for t in range(k):
        # neighbours of cycle[t] sit on opposite sides of its line iff the
        # two incident determinants have the same sign around the walk
        if dets[t - 1] * dets[t] <= 0:
            raise SidesConditionViolated(
                f"neighbours of vertex {cycle[t]} lie on the same side of its line")
    rows = [[0.0] * n for _ in range(n)]
    for t in range(k):
        i, j = cycle[t], cycle[(t + 1) % k]
        w = -1.0 / abs(dets[t])
        rows[i][j] = w
        rows[j][i] = w
    for t in range(k):
        j = cycle[t]
        i, l = cycle[t - 1], cycle[(t + 1) % k]
        v = rows[i][j] * coords[t - 1] + rows[j][l] * coords[(t + 1) % k]
        ujj = float(np.dot(coords[t], coords[t]))
        ajj = -float(np.dot(v, coords[t])) / ujj
        rows[j][j] = ajj
        resid = np.linalg.norm(v + ajj * coords[t])
        if resid > 1e-6 * max(1.0, abs(ajj)) * max(1.0, scale):
            raise SidesConditionViolated(
                f"diagonal relation fails at vertex {j}: residual {resid:g}")
    mat = SymMatrix.from_array(np.array(rows))
    return CircuitMatrix(cycle, mat, coords.copy())


def regular_polygon_circuit(k: int, n: int | None = None) -> CircuitMatrix:
    """Circuit matrix of the regular k-gon configuration on vertices 0..k-1."""
    angles = 2.0 * np.pi * np.arange(k) / k
    coords = np.stack([np.cos(angles), np.sin(angles)], axis=1)
    return circuit_matrix(tuple(range(k)), coords, n=n)


def _sides_ok(c_prev: np.ndarray, c_cur: np.ndarray, c_next: np.ndarray,
              dtol: float) -> bool:
    d1 = _det2(c_prev, c_cur)
    d2 = _det2(c_next, c_cur)
    return abs(d1) > dtol and abs(d2) > dtol and d1 * d2 < 0


def find_plane_circuit(g: Graph, u, plane: SpanPlane, tol: float | None = None,
                       enforce_hypothesis: bool = True,
                       max_steps: int | None = None) -> CircuitMatrix:
    """Walk inside a spanned plane and extract a circuit with the
    alternating-sides property, then build its circuit matrix.

    Starting from the plane's first supporting edge, each step moves to the
    lowest-indexed neighbour whose vector lies in the plane on the opposite
    side of the current vertex's line.  The walk stops when it closes a
    valid circuit; a repeated directed edge without one raises WalkStuck.

    With enforce_hypothesis, the shared-line precondition is checked first:
    no line of the plane may lie in two other planes of the complex.
    """
    coords = _coords_of(u)
    d = coords.shape[1]
    if d < 2:
        raise BadParams("plane walks need an embedding of dimension >= 2")
    cx = spanned_complex(g, u, tol)
    if enforce_hypothesis:
        others = [p for p in cx.planes if p.edges != plane.edges]
        for a in range(len(others)):
            for b in range(a + 1, len(others)):
                if _intersection_dim(
                        [plane.basis, others[a].basis, others[b].basis], d) >= 1:
                    raise HypothesisViolated(
                        f"planes through edges {others[a].edges[0]} and "
                        f"{others[b].edges[0]} share a line with the base plane")
    basis = plane.basis
    scale = max(1.0, float(np.abs(coords).max()))
    mtol = (tol if tol is not None else 1e-8) * scale
    proj = coords @ basis            # 2D coordinates within the plane
    resid = coords - proj @ basis.T
    in_plane = [bool(np.linalg.norm(resid[i]) <= mtol
                     and np.linalg.norm(coords[i]) > mtol) for i in range(g.n)]
    dtol = 1e-12 * scale * scale
    adj = g.adjacency_sets()
    start_i, start_j = plane.edges[0]
    if not (in_plane[start_i] and in_plane[start_j]):
        raise WalkStuck("supporting edge endpoints do not lie in the plane")
    seq = [start_i, start_j]
    states = {(start_i, start_j)}
    if max_steps is None:
        max_steps = 4 * g.n * g.n + 16
    for _ in range(max_steps):
        prev, cur = seq[-2], seq[-1]
        nxt = None
        for k in sorted(adj[cur]):
            if not in_plane[k]:
                continue
            if _sides_ok(proj[prev], proj[cur], proj[k], dtol):
                nxt = k
                break
        if nxt is None:
            raise WalkStuck(
                f"no neighbour of {cur} lies in the plane opposite vertex {prev}")
        if nxt in seq:
            m = len(seq) - 1 - seq[::-1].index(nxt)
            candidate = seq[m:]
            if len(candidate) >= 3 and len(set(candidate)) == len(candidate):
                last = candidate[-1]
                after = candidate[1]
                if _sides_ok(proj[last], proj[nxt], proj[after], dtol):
                    c2d = np.array([proj[v] for v in candidate])
                    return circuit_matrix(candidate, c2d, n=g.n, tol=tol)
        state = (cur, nxt)
        if state in states:
            raise WalkStuck("walk cycled without closing a valid circuit")
        states.add(state)
        seq.append(nxt)
    raise WalkStuck(f"no circuit after {max_steps} steps")


def compose_plane_matrices(a_p: CircuitMatrix, a_r: CircuitMatrix,
                           n: int) -> SymMatrix:
    """Sum of two circuit matrices embedded in an n x n frame.

    When the underlying planes meet only at the origin the circuits are
    vertex-disjoint, so the spectrum is the union and the sum has at least
    two negative eigenvalues.
    """
    if a_p.n != n or a_r.n != n:
        raise SizeMismatch(f"matrices are {a_p.n} and {a_r.n}, want {n}")
    return a_p.matrix.plus(a_r.matrix)


@dataclass
class InterpolationTrace:
    """Eigenvalue traces of beta*A + M over an ascending beta grid."""

    beta_grid: np.ndarray
    traces: np.ndarray               # row per beta, eigenvalues ascending
    lambda_minus: list[int]
    coranks: list[int]
    base_corank: int
    transitions: list[tuple[float, float, int, int]]  # (lo, hi, lm_lo, lm_hi)
    corank_floor_ok: bool
    betas_with_two_negatives: list[float]

    def to_csv(self) -> str:
        lines = []
        for b, row in zip(self.beta_grid, self.traces):
            lines.append(",".join([repr(float(b))] + [repr(float(x)) for x in row]))
        return "\n".join(lines) + "\n"


def interpolation_trace(a: SymMatrix, m: WellSignedMatrix, beta_max: float = 10.0,
                        steps: int = 200, refine_iters: int = 30,
                        tol: float | None = None) -> InterpolationTrace:
    """Trace the spectrum of beta*A + M for beta in [0, beta_max].

    Requires ker(M) contained in ker(A) (checked), so the corank never
    drops below corank(M); eigenvalue-count transitions are localized by
    bisection.
    """
    if not is_connected(m.graph):
        raise Disconnected("interpolation needs a connected graph")
    am = a.to_array()
    mm = m.matrix.to_array()
    base = eigen_sym(m.matrix, tol)
    if base.zero_count > 0:
        resid = float(np.abs(am @ base.kernel_basis).max())
        bound = 1e-7 * max(1.0, float(np.abs(am).max()))
        if resid > bound:
            raise KernelNotContained(
                f"kernel residual {resid:g} exceeds {bound:g}")

    def lm_at(beta: float) -> int:
        return eigen_sym(SymMatrix.from_array(beta * am + mm), tol).neg_count

    betas = np.linspace(0.0, beta_max, steps + 1)
    traces = []
    lambda_minus = []
    coranks = []
    for b in betas:
        s = eigen_sym(SymMatrix.from_array(b * am + mm), tol)
        traces.append(s.eigenvalues)
        lambda_minus.append(s.neg_count)
        coranks.append(s.zero_count)
    transitions = []
    for k in range(len(betas) - 1):
        if lambda_minus[k] != lambda_minus[k + 1]:
            lo, hi = float(betas[k]), float(betas[k + 1])
            lm_lo = lambda_minus[k]
            for _ in range(refine_iters):
                mid = 0.5 * (lo + hi)
                if lm_at(mid) == lm_lo:
                    lo = mid
                else:
                    hi = mid
            transitions.append((lo, hi, lambda_minus[k], lambda_minus[k + 1]))
    floor_ok = all(c >= base.zero_count for c in coranks)
    ge2 = [float(b) for b, lm in zip(betas, lambda_minus) if lm >= 2]
    return InterpolationTrace(betas, np.array(traces), lambda_minus, coranks,
                              base.zero_count, transitions, floor_ok, ge2)

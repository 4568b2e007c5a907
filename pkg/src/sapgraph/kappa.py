"""Lower-bound search for the maximum corank over well-signed matrices with
one negative eigenvalue, and consistency reports against the class
thresholds (paths <= 1, outerplanar <= 2, planar <= 3, flat <= 4).

Recognized families use closed-form witnesses (complete: all -1; complete
bipartite with a 2-side: the rank-2 witness; circuits: the regular polygon
matrix).  Everything else starts from shifted random or shifted negative
adjacency matrices and drives the next eigenvalues into the bottom of the
spectrum with damped Gauss-Newton steps on analytic eigenvalue gradients.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

import numpy as np

from .errors import Disconnected
from .gmatrix import (
    WellSignedMatrix,
    k2t_witness,
    random_well_signed,
    shift_to_one_negative,
    validate_well_signed,
)
from .graphs import Graph, generate_named, has_minor, is_connected, is_flat, vertex_connectivity
from .constructions import regular_polygon_circuit
from .sap import has_sap
from .spectra import SymMatrix, default_tol, eigen_sym, inertia_exact

EDGE_CAP = -0.01  # edge weights stay at or below this during the search


@dataclass
class KappaWitness:
    matrix: WellSignedMatrix
    corank: int
    lambda_minus: int
    sap: bool
    method: str            # "closed-form" | "search"
    certified: bool = False  # exact rational inertia backs the counts
    budget_exceeded: bool = False
    seed: int | None = None

    def to_json_dict(self) -> dict:
        neg, zero, pos = (inertia_exact(self.matrix.matrix) if self.matrix.matrix.rational
                          else _float_inertia(self.matrix.matrix))
        return {
            "graph": self.matrix.graph.to_json_dict(),
            "matrix": self.matrix.matrix.to_json_dict(),
            "inertia": [neg, zero, pos],
            "sap": self.sap,
            "method": self.method,
        }


def _float_inertia(m: SymMatrix) -> tuple[int, int, int]:
    s = eigen_sym(m)
    return s.neg_count, s.zero_count, s.pos_count


def _is_complete(g: Graph) -> bool:
    return len(g.edges) == g.n * (g.n - 1) // 2


def _is_cycle(g: Graph) -> bool:
    return (g.n >= 3 and len(g.edges) == g.n and is_connected(g)
            and all(g.degree(v) == 2 for v in range(g.n)))


def _k2t_sides(g: Graph) -> list[int] | None:
    """Vertex order mapping g onto K_{2,t} (the two t-degree vertices first),
    or None when g is not a complete bipartite graph with a side of two."""
    if g.n < 3:
        return None
    t = g.n - 2
    hubs = [v for v in range(g.n) if g.degree(v) == t]
    if t == 2:
        if not _is_cycle(g):
            return None
        # C_4 = K_{2,2}: opposite vertices form the hubs
        a = 0
        b = next(v for v in range(1, 4) if v not in g.neighbors(0))
        rest = [v for v in range(4) if v not in (a, b)]
        return [a, b] + rest
    if len(hubs) != 2:
        return None
    a, b = hubs
    if g.has_edge(a, b):
        return None
    rest = [v for v in range(g.n) if v not in (a, b)]
    edge_set = set(g.edges)
    for u, v in itertools.combinations(rest, 2):
        if (u, v) in edge_set:
            return None
    if any(g.degree(v) != 2 for v in rest):
        return None
    return [a, b] + rest


def _neg_adjacency(g: Graph) -> WellSignedMatrix:
    rows = [[0.0] * g.n for _ in range(g.n)]
    for a, b in g.edges:
        rows[a][b] = rows[b][a] = -1.0
    return WellSignedMatrix(g, SymMatrix.from_rows(rows, rational=False))


def _permuted_witness(g: Graph, base: WellSignedMatrix, order: list[int]) -> WellSignedMatrix:
    """Relabel a witness built on canonical labels back onto g: order[k] is
    the vertex of g playing canonical role k."""
    n = g.n
    inv = [0] * n
    for k, v in enumerate(order):
        inv[v] = k
    rows = [[base.matrix.entry(inv[i], inv[j]) for j in range(n)] for i in range(n)]
    return WellSignedMatrix(g, SymMatrix.from_rows(rows, rational=base.matrix.rational))


def _vector_to_matrix(g: Graph, diag: np.ndarray, weights: np.ndarray) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    np.fill_diagonal(a, diag)
    for k, (i, j) in enumerate(g.edges):
        a[i, j] = a[j, i] = weights[k]
    return a


def _gauss_newton_corank(g: Graph, start: np.ndarray, target: int,
                         eval_budget: int, tol: float | None) -> tuple[np.ndarray, int]:
    """Drive eigenvalues 2..target+1 onto lambda_2; returns (matrix, evals used).

    Residuals are the gaps lambda_{2+i} - lambda_2; the Jacobian uses
    v^T (dM) v for simple eigenvalues with a finite-difference fallback when
    the band clusters.  Edge weights are clamped below EDGE_CAP.
    """
    n = g.n
    edges = list(g.edges)
    m_edges = len(edges)
    diag = np.diag(start).copy()
    weights = np.array([start[i, j] for i, j in edges])
    evals = 0

    def spectrum(dg, wts):
        nonlocal evals
        evals += 1
        return eigen_sym(SymMatrix.from_array(_vector_to_matrix(g, dg, wts)))

    def residuals(summ):
        return np.array([summ.eigenvalues[1 + i] - summ.eigenvalues[1]
                         for i in range(1, target)])

    summ = spectrum(diag, weights)
    best = (float(np.abs(residuals(summ)).max()) if target > 1 else 0.0, diag.copy(), weights.copy())
    if target <= 1:
        return _vector_to_matrix(g, diag, weights), evals
    while evals < eval_budget:
        r = residuals(summ)
        err = float(np.abs(r).max())
        if err < best[0]:
            best = (err, diag.copy(), weights.copy())
        scale = max(1.0, float(np.abs(summ.eigenvalues).max()))
        if err <= 1e-11 * scale:
            break
        clustered = any(abs(summ.eigenvalues[1 + i] - summ.eigenvalues[2 + i]) < 1e-7 * scale
                        for i in range(target - 1))
        jac = np.zeros((target - 1, n + m_edges))
        if not clustered:
            vecs = summ.vectors
            for i in range(1, target):
                va, v2 = vecs[:, 1 + i], vecs[:, 1]
                jac[i - 1, :n] = va * va - v2 * v2
                for k, (a, b) in enumerate(edges):
                    jac[i - 1, n + k] = 2.0 * (va[a] * va[b] - v2[a] * v2[b])
        else:
            h = 1e-6 * scale
            for pidx in range(n + m_edges):
                dg, wts = diag.copy(), weights.copy()
                if pidx < n:
                    dg[pidx] += h
                else:
                    wts[pidx - n] += h
                jac[:, pidx] = (residuals(spectrum(dg, wts)) - r) / h
                if evals >= eval_budget:
                    break
        jtj = jac @ jac.T
        mu = 1e-10 * max(1.0, float(np.trace(jtj)))
        improved = False
        for _ in range(8):
            try:
                y = np.linalg.solve(jtj + mu * np.eye(target - 1), -r)
            except np.linalg.LinAlgError:
                mu *= 100.0
                continue
            step = jac.T @ y
            damp = 1.0
            for _ in range(8):
                dg = diag + damp * step[:n]
                wts = np.minimum(weights + damp * step[n:], EDGE_CAP)
                cand = spectrum(dg, wts)
                if float(np.abs(residuals(cand)).max()) < err:
                    diag, weights, summ = dg, wts, cand
                    improved = True
                    break
                damp *= 0.5
                if evals >= eval_budget:
                    break
            if improved or evals >= eval_budget:
                break
            mu *= 100.0
        if not improved:
            break
    _, diag, weights = best
    return _vector_to_matrix(g, diag, weights), evals


def kappa_lower_bound(g: Graph, budget: int = 3000, seed: int = 0,
                      kmax: int | None = None, tol: float | None = None,
                      restarts: int = 3) -> KappaWitness:
    """Best-corank witness found: closed forms for recognized families,
    otherwise Gauss-Newton search from shifted starts.  The corank is a
    lower bound for the graph's maximum; lambda_minus is always 1."""
    if not is_connected(g):
        raise Disconnected("kappa search needs a connected graph")
    if _is_complete(g) and g.n >= 2:
        rows = [[-1] * g.n for _ in range(g.n)]
        wit = WellSignedMatrix(g, SymMatrix.from_rows(rows, rational=True))
        neg, zero, _ = inertia_exact(wit.matrix)
        return KappaWitness(wit, zero, neg, has_sap(g, wit.matrix.to_float(), tol),
                            "closed-form", certified=True, seed=seed)
    sides = _k2t_sides(g)
    if sides is not None:
        base = k2t_witness(g.n - 2)
        wit = _permuted_witness(g, base, sides)
        neg, zero, _ = inertia_exact(wit.matrix)
        return KappaWitness(wit, zero, neg, has_sap(g, wit.matrix.to_float(), tol),
                            "closed-form", certified=True, seed=seed)
    if _is_cycle(g):
        order = _cycle_order(g)
        base = regular_polygon_circuit(g.n)
        wit = _permuted_witness(g, WellSignedMatrix(generate_named("cycle", g.n), base.matrix), order)
        s = eigen_sym(wit.matrix, tol)
        return KappaWitness(wit, s.zero_count, s.neg_count,
                            has_sap(g, wit.matrix, tol), "closed-form", seed=seed)
    if kmax is None:
        kmax = min(g.n - 2, 4)
    starts: list[WellSignedMatrix] = []
    starts.append(shift_to_one_negative(_neg_adjacency(g), 0.0, tol))
    for r in range(restarts):
        starts.append(shift_to_one_negative(random_well_signed(g, seed + 1000 * r), 0.0, tol))

    def witness_of(shifted: WellSignedMatrix) -> KappaWitness:
        s = eigen_sym(shifted.matrix, tol)
        return KappaWitness(shifted, s.zero_count, s.neg_count,
                            has_sap(g, shifted.matrix, tol), "search", seed=seed)

    best = max((witness_of(s) for s in starts), key=lambda w: w.corank)
    evals_left = budget
    exceeded = False
    slice_budget = max(60, budget // (2 * max(1, kmax) * len(starts)))
    for target in range(kmax, best.corank, -1):
        for start in starts:
            if evals_left <= 0:
                exceeded = True
                break
            driven, used = _gauss_newton_corank(
                g, start.matrix.to_array(), target, min(slice_budget, evals_left), tol)
            evals_left -= used
            try:
                shifted = shift_to_one_negative(
                    WellSignedMatrix(g, SymMatrix.from_array(driven)), 0.0, tol)
            except ValueError:
                continue
            if validate_well_signed(g, shifted.matrix):
                continue
            cand = witness_of(shifted)
            if cand.corank > best.corank:
                best = cand
            if best.corank >= target:
                break
        if best.corank >= target:
            break
        if evals_left <= 0:
            exceeded = True
            break
    best.budget_exceeded = exceeded
    return best


def _cycle_order(g: Graph) -> list[int]:
    adj = g.adjacency_sets()
    order = [0]
    prev = None
    cur = 0
    while len(order) < g.n:
        nxt = min(v for v in adj[cur] if v != prev)
        order.append(nxt)
        prev, cur = cur, nxt
    return order


@dataclass
class MuReport:
    """Witness summary plus consistency with the class thresholds."""

    witness: KappaWitness
    connectivity: int
    flat: bool
    paths_union: bool
    outerplanar: bool
    planar: bool
    threshold: int | None
    consistent: bool
    notes: str = ""

    def to_json_dict(self) -> dict:
        return {
            "witness": self.witness.to_json_dict(),
            "connectivity": self.connectivity,
            "classes": {
                "paths_union": self.paths_union,
                "outerplanar": self.outerplanar,
                "planar": self.planar,
                "flat": self.flat,
            },
            "threshold": self.threshold,
            "consistent": self.consistent,
            "notes": self.notes,
        }


def _is_paths_union(g: Graph) -> bool:
    if any(g.degree(v) > 2 for v in range(g.n)):
        return False
    comps = 0
    seen: set[int] = set()
    adj = g.adjacency_sets()
    for v in range(g.n):
        if v in seen:
            continue
        comps += 1
        stack = [v]
        seen.add(v)
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return len(g.edges) == g.n - comps


def mu_report(g: Graph, budget: int = 3000, seed: int = 0,
              tol: float | None = None) -> MuReport:
    """Bundle a kappa witness with the graph classes and flag a witness
    whose corank with the transversality property exceeds the threshold of
    the smallest class containing the graph."""
    wit = kappa_lower_bound(g, budget=budget, seed=seed, tol=tol)
    k4 = generate_named("complete", 4)
    k23 = generate_named("complete_bipartite", 2, 3)
    k5 = generate_named("complete", 5)
    k33 = generate_named("complete_bipartite", 3, 3)
    paths = _is_paths_union(g)
    outer = (has_minor(g, k4) is None) and (has_minor(g, k23) is None)
    planar = (has_minor(g, k5) is None) and (has_minor(g, k33) is None)
    flat = is_flat(g)
    threshold = 1 if paths else 2 if outer else 3 if planar else 4 if flat else None
    consistent = (not wit.sap) or threshold is None or wit.corank <= threshold
    conn = vertex_connectivity(g) if g.n >= 2 else 0
    notes = "" if consistent else (
        f"witness corank {wit.corank} with the transversality property exceeds "
        f"threshold {threshold}")
    return MuReport(wit, conn, flat, paths, outer, planar, threshold, consistent, notes)

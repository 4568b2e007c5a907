"""Graph representation, generators, connectivity, minor search, and flatness.

Vertices are always 0..n-1.  The flatness test is a forbidden-minor check
against the seven-member delta-wye closure of K_6; minor containment is an
exhaustive branch-set search intended for hosts of at most ~16 vertices.
"""

from __future__ import annotations

import functools
import itertools
import random
from dataclasses import dataclass

from .errors import (
    BadParams,
    DuplicateEdge,
    LoopEdge,
    SearchBudgetExceeded,
    TooSmall,
    UnknownFamily,
    VertexOutOfRange,
)

DEFAULT_MINOR_BUDGET = 10_000_000


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: vertex count plus sorted edge tuples (i < j)."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def neighbors(self, v: int) -> set[int]:
        out = set()
        for a, b in self.edges:
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return out

    def adjacency_sets(self) -> list[set[int]]:
        adj = [set() for _ in range(self.n)]
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def has_edge(self, i: int, j: int) -> bool:
        if i > j:
            i, j = j, i
        return (i, j) in set(self.edges)

    def to_json_dict(self) -> dict:
        return {"n": self.n, "edges": [[a, b] for a, b in self.edges]}

    @classmethod
    def from_json_dict(cls, d: dict) -> "Graph":
        return build_graph(int(d["n"]), [tuple(e) for e in d["edges"]])


def build_graph(n: int, edges) -> Graph:
    """Validate and normalize an edge list into a Graph."""
    if n < 0:
        raise BadParams("vertex count must be nonnegative")
    seen = set()
    norm = []
    for e in edges:
        a, b = e
        if a == b:
            raise LoopEdge(f"loop at vertex {a}")
        if a > b:
            a, b = b, a
        if not (0 <= a < n and 0 <= b < n):
            raise VertexOutOfRange(f"edge ({a},{b}) outside 0..{n - 1}")
        if (a, b) in seen:
            raise DuplicateEdge(f"edge ({a},{b}) repeated")
        seen.add((a, b))
        norm.append((a, b))
    return Graph(n, tuple(sorted(norm)))


def _adj_masks(g: Graph) -> list[int]:
    adj = [0] * g.n
    for a, b in g.edges:
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    return adj


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    adj = _adj_masks(g)
    seen = 1
    stack = [0]
    while stack:
        v = stack.pop()
        rest = adj[v] & ~seen
        while rest:
            w = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            seen |= 1 << w
            stack.append(w)
    return seen == (1 << g.n) - 1


# ---------------------------------------------------------------------------
# named generators
# ---------------------------------------------------------------------------

def generate_named(name: str, *params) -> Graph:
    """Build a canonical member of a named family.

    Labellings: path/cycle vertices in walk order; complete_bipartite(s, t)
    puts the s-side first; complete_tripartite(a, b, c) labels parts
    consecutively; petersen has the outer 5-cycle on 0..4, spokes i--i+5,
    inner pentagram i+5--(i+2)%5+5; icosahedron is apex 0, upper pentagon
    1..5, lower pentagon 6..10 (antiprism between them), apex 11.
    """
    try:
        if name == "path":
            (k,) = params
            if k < 1:
                raise BadParams("path needs >= 1 vertex")
            return build_graph(k, [(i, i + 1) for i in range(k - 1)])
        if name == "cycle":
            (k,) = params
            if k < 3:
                raise BadParams("cycle needs >= 3 vertices")
            return build_graph(k, [(i, (i + 1) % k) for i in range(k)])
        if name == "complete":
            (k,) = params
            if k < 1:
                raise BadParams("complete needs >= 1 vertex")
            return build_graph(k, list(itertools.combinations(range(k), 2)))
        if name == "complete_bipartite":
            s, t = params
            if s < 1 or t < 1:
                raise BadParams("bipartite sides must be >= 1")
            return build_graph(s + t, [(i, s + j) for i in range(s) for j in range(t)])
        if name == "complete_tripartite":
            a, b, c = params
            if min(a, b, c) < 1:
                raise BadParams("tripartite parts must be >= 1")
            parts = [list(range(a)), list(range(a, a + b)), list(range(a + b, a + b + c))]
            edges = []
            for p, q in itertools.combinations(range(3), 2):
                edges.extend((i, j) for i in parts[p] for j in parts[q])
            return build_graph(a + b + c, edges)
        if name == "petersen":
            if params:
                raise BadParams("petersen takes no parameters")
            edges = [(i, (i + 1) % 5) for i in range(5)]
            edges += [(i, i + 5) for i in range(5)]
            edges += [(i + 5, (i + 2) % 5 + 5) for i in range(5)]
            return build_graph(10, edges)
        if name == "icosahedron":
            if params:
                raise BadParams("icosahedron takes no parameters")
            edges = [(0, i) for i in range(1, 6)]
            edges += [(i, i % 5 + 1) for i in range(1, 6)]
            edges += [(11, i) for i in range(6, 11)]
            edges += [(i, (i - 5) % 5 + 6) for i in range(6, 11)]
            upper = list(range(1, 6))
            lower = list(range(6, 11))
            for i in range(5):
                edges.append((upper[i], lower[i]))
                edges.append((upper[i], lower[(i + 1) % 5]))
            return build_graph(12, edges)
        if name == "random_4connected_planar_triangulation":
            n, seed = params
            return random_4connected_planar_triangulation(n, seed)
    except ValueError as exc:
        raise BadParams(f"wrong parameter count for {name}: {params}") from exc
    raise UnknownFamily(name)


def _stacked_triangulation(n: int, rng: random.Random):
    """Random triangulation of the sphere by repeated face subdivision."""
    faces = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    edges = {(a, b) for a, b in itertools.combinations(range(4), 2)}
    for v in range(4, n):
        a, b, c = faces.pop(rng.randrange(len(faces)))
        faces.extend([(a, b, v), (a, c, v), (b, c, v)])
        edges.update([(a, v), (b, v), (c, v)])
    return faces, edges


def _random_flips(n: int, faces, edges, rng: random.Random, rounds: int):
    """Random diagonal flips; keeps the face complex a simple triangulation."""
    deg = {v: 0 for v in range(n)}
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    for _ in range(rounds):
        a, b = rng.choice(sorted(edges))
        apexes = [f for f in faces if a in f and b in f]
        if len(apexes) != 2:
            continue
        (c,) = [v for v in apexes[0] if v not in (a, b)]
        (d,) = [v for v in apexes[1] if v not in (a, b)]
        if c == d or tuple(sorted((c, d))) in edges:
            continue
        if deg[a] <= 3 or deg[b] <= 3:
            continue
        faces.remove(apexes[0])
        faces.remove(apexes[1])
        faces.append(tuple(sorted((a, c, d))))
        faces.append(tuple(sorted((b, c, d))))
        edges.remove((a, b) if a < b else (b, a))
        edges.add(tuple(sorted((c, d))))
        deg[a] -= 1
        deg[b] -= 1
        deg[c] += 1
        deg[d] += 1
    return faces, edges


def random_4connected_planar_triangulation(n: int, seed: int,
                                           max_attempts: int = 5000) -> Graph:
    """Seeded random planar triangulation with no separating triangle.

    Face subdivisions alone always leave a degree-3 vertex, so each attempt
    shuffles the triangulation with random diagonal flips before testing
    vertex connectivity >= 4.
    """
    if n < 6:
        raise BadParams("4-connected triangulations need >= 6 vertices")
    rng = random.Random(seed)
    for _ in range(max_attempts):
        faces, edges = _stacked_triangulation(n, rng)
        faces, edges = _random_flips(n, faces, edges, rng, 14 * n)
        g = build_graph(n, sorted(edges))
        if vertex_connectivity(g) >= 4:
            return g
    raise SearchBudgetExceeded(
        f"no 4-connected triangulation on {n} vertices after {max_attempts} attempts")


# ---------------------------------------------------------------------------
# vertex connectivity via vertex-capacitated max-flow (Menger)
# ---------------------------------------------------------------------------

def _local_vertex_connectivity(g: Graph, s: int, t: int) -> int:
    """Max number of internally disjoint s-t paths, s and t non-adjacent."""
    n = g.n
    big = n + 1
    size = 2 * n
    cap = [[0] * size for _ in range(size)]
    for v in range(n):
        cap[2 * v][2 * v + 1] = big if v in (s, t) else 1
    for a, b in g.edges:
        cap[2 * a + 1][2 * b] = big
        cap[2 * b + 1][2 * a] = big
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        prev = [-1] * size
        prev[source] = source
        queue = [source]
        while queue and prev[sink] == -1:
            u = queue.pop(0)
            for w in range(size):
                if prev[w] == -1 and cap[u][w] > 0:
                    prev[w] = u
                    queue.append(w)
        if prev[sink] == -1:
            return flow
        w = sink
        bottleneck = big
        while w != source:
            u = prev[w]
            bottleneck = min(bottleneck, cap[u][w])
            w = u
        w = sink
        while w != source:
            u = prev[w]
            cap[u][w] -= bottleneck
            cap[w][u] += bottleneck
            w = u
        flow += bottleneck


def vertex_connectivity(g: Graph) -> int:
    """Minimum vertex cut size; n-1 for complete graphs, 0 if disconnected."""
    if g.n < 2:
        raise TooSmall("connectivity needs >= 2 vertices")
    if not is_connected(g):
        return 0
    edge_set = set(g.edges)
    best = g.n - 1
    found_pair = False
    for s, t in itertools.combinations(range(g.n), 2):
        if (s, t) in edge_set:
            continue
        found_pair = True
        best = min(best, _local_vertex_connectivity(g, s, t))
        if best == 0:
            break
    return best if found_pair else g.n - 1


# ---------------------------------------------------------------------------
# minor containment: exhaustive branch-set search
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MinorModel:
    """Witness for minor containment: pattern vertex -> host branch set."""

    branch_sets: tuple[frozenset, ...]  # indexed by pattern vertex


def validate_minor_model(host: Graph, pattern: Graph, model: MinorModel) -> list[str]:
    """Machine-check disjointness, connectivity, and edge coverage."""
    problems = []
    sets = model.branch_sets
    if len(sets) != pattern.n:
        return ["wrong number of branch sets"]
    used = set()
    for p, bs in enumerate(sets):
        if not bs:
            problems.append(f"branch set {p} empty")
            continue
        if used & bs:
            problems.append(f"branch set {p} overlaps another")
        used |= bs
        if any(not 0 <= v < host.n for v in bs):
            problems.append(f"branch set {p} outside host")
            continue
        sub = build_graph(host.n, [e for e in host.edges if e[0] in bs and e[1] in bs])
        seen = {min(bs)}
        stack = [min(bs)]
        adj = sub.adjacency_sets()
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if seen != set(bs):
            problems.append(f"branch set {p} not connected")
    host_adj = _adj_masks(host)
    for a, b in pattern.edges:
        mask_b = 0
        for v in sets[b]:
            mask_b |= 1 << v
        if not any(host_adj[v] & mask_b for v in sets[a]):
            problems.append(f"pattern edge ({a},{b}) not covered")
    return problems


def _swap_equivalence_classes(pattern: Graph) -> list[int]:
    """Class id per pattern vertex; swapping two same-class vertices is an
    automorphism.  Used to break branch-set symmetry during minor search."""
    padj = pattern.adjacency_sets()
    cls = list(range(pattern.n))

    def find(x):
        while cls[x] != x:
            cls[x] = cls[cls[x]]
            x = cls[x]
        return x

    for p, q in itertools.combinations(range(pattern.n), 2):
        if padj[p] - {q} == padj[q] - {p}:
            cls[find(p)] = find(q)
    return [find(p) for p in range(pattern.n)]


def _connected_subsets(hadj: list[int], n: int, max_size: int):
    """All connected vertex subsets of size <= max_size, as bitmasks.

    Each subset is produced exactly once via anchored growth with banning.
    Returns (masks, adjacency masks, outgoing degree sums).
    """
    masks: list[int] = []
    adjs: list[int] = []
    outs: list[int] = []
    hdeg = [hadj[v].bit_count() for v in range(n)]

    def grow(s: int, size: int, cand: int, ban: int, sadj: int, degsum: int, inner: int):
        masks.append(s)
        adjs.append(sadj & ~s)
        outs.append(degsum - inner)
        if size >= max_size:
            return
        c = cand
        b = ban
        while c:
            vb = c & -c
            c &= c - 1
            v = vb.bit_length() - 1
            grow(s | vb, size + 1, (c | hadj[v]) & ~(s | vb) & ~b, b,
                 sadj | hadj[v], degsum + hdeg[v],
                 inner + 2 * (hadj[v] & s).bit_count())
            b |= vb

    ban = 0
    for a in range(n):
        ab = 1 << a
        grow(ab, 1, hadj[a] & ~ban, ban, hadj[a], hdeg[a], 0)
        ban |= ab
    return masks, adjs, outs


def has_minor(host: Graph, pattern: Graph,
              budget: int = DEFAULT_MINOR_BUDGET) -> MinorModel | None:
    """Exhaustive search for a minor model of `pattern` inside `host`.

    All connected host subsets up to the feasible branch-set size are
    enumerated once; candidate domains are then kept as bitsets over that
    universe, so forward checking (disjointness, adjacency coverage, degree
    sums, canonical minimum-vertex order between interchangeable pattern
    vertices) costs one big-integer AND per constraint.  Branches on the
    unassigned pattern vertex with the smallest domain and prunes states
    whose free-region components cannot host the remaining pattern blocks.
    Raises SearchBudgetExceeded past `budget` search nodes.
    """
    if pattern.n == 0:
        return MinorModel(())
    if pattern.n > host.n or len(pattern.edges) > len(host.edges):
        return None

    hadj = _adj_masks(host)
    padj = pattern.adjacency_sets()
    pdeg = [len(s) for s in padj]
    pclass = _swap_equivalence_classes(pattern)
    max_size = host.n - pattern.n + 1
    m_list, a_list, o_list = _connected_subsets(hadj, host.n, max_size)
    order = sorted(range(len(m_list)), key=lambda i: (m_list[i].bit_count(), m_list[i]))
    masks = [m_list[i] for i in order]
    adjs = [a_list[i] for i in order]
    outs = [o_list[i] for i in order]
    sizes = [m.bit_count() for m in masks]
    uni = len(masks)
    all_ones = (1 << uni) - 1

    touch = [0] * host.n          # universe entries containing host vertex v
    lsb_is = [0] * host.n         # universe entries whose minimum vertex is v
    for i, m in enumerate(masks):
        t = m
        while t:
            v = (t & -t).bit_length() - 1
            t &= t - 1
            touch[v] |= 1 << i
        lsb_is[(m & -m).bit_length() - 1] |= 1 << i
    allow = [all_ones ^ t for t in touch]
    minbit_gt = [0] * host.n      # entries with minimum vertex > v
    minbit_lt = [0] * host.n
    acc = 0
    for v in range(host.n - 1, -1, -1):
        minbit_gt[v] = acc
        acc |= lsb_is[v]
    acc = 0
    for v in range(host.n):
        minbit_lt[v] = acc
        acc |= lsb_is[v]
    size_le = [0] * (host.n + 2)  # entries of size <= k (universe is size-sorted)
    for k in range(host.n + 2):
        hi = 0
        for i in range(uni):
            if sizes[i] <= k:
                hi = i + 1
            else:
                break
        size_le[k] = (1 << hi) - 1

    disjoint_pre = [0] * uni     # entries disjoint from entry i
    adjacent_pre = [0] * uni     # entries with an edge into entry i
    for i in range(uni):
        d = all_ones
        t = masks[i]
        while t:
            v = (t & -t).bit_length() - 1
            t &= t - 1
            d &= allow[v]
        disjoint_pre[i] = d
        a = 0
        t = adjs[i]
        while t:
            w = (t & -t).bit_length() - 1
            t &= t - 1
            a |= touch[w]
        adjacent_pre[i] = a

    domains = [0] * pattern.n
    for p in range(pattern.n):
        d = 0
        for i in range(uni):
            if outs[i] >= pdeg[p]:
                d |= 1 << i
        domains[p] = d

    assigned_mask = [0] * pattern.n
    assigned_adj = [0] * pattern.n
    nodes = 0

    def components_of(mask: int) -> list[int]:
        comps = []
        rest = mask
        while rest:
            comp = rest & -rest
            frontier = comp
            while frontier:
                nxt = 0
                m = frontier
                while m:
                    v = (m & -m).bit_length() - 1
                    m &= m - 1
                    nxt |= hadj[v]
                frontier = nxt & mask & ~comp
                comp |= frontier
            comps.append(comp)
            rest &= ~comp
        return comps

    def feasible(avail: int) -> bool:
        """Each connected block of unassigned pattern vertices must fit inside
        a single free-region component compatible with its placed frontiers."""
        for r in range(pattern.n):
            if assigned_mask[r] and not assigned_adj[r] & avail:
                if any(not assigned_mask[q] for q in padj[r]):
                    return False
        comps = components_of(avail)
        if len(comps) == 1:
            return True
        blocks = []
        seen: set[int] = set()
        for q in range(pattern.n):
            if assigned_mask[q] or q in seen:
                continue
            blk = [q]
            seen.add(q)
            stack = [q]
            while stack:
                x = stack.pop()
                for y in padj[x]:
                    if not assigned_mask[y] and y not in seen:
                        seen.add(y)
                        blk.append(y)
                        stack.append(y)
            blocks.append(blk)
        demands = []
        for blk in blocks:
            cands = []
            for ci, comp in enumerate(comps):
                if comp.bit_count() < len(blk):
                    continue
                ok = True
                for q in blk:
                    for r in padj[q]:
                        if assigned_mask[r] and not assigned_adj[r] & comp:
                            ok = False
                            break
                    if not ok:
                        break
                if ok:
                    cands.append(ci)
            if not cands:
                return False
            demands.append((len(blk), cands))
        caps = [c.bit_count() for c in comps]
        demands.sort(key=lambda d: -d[0])

        def pack(i: int) -> bool:
            if i == len(demands):
                return True
            size, cands = demands[i]
            for ci in cands:
                if caps[ci] >= size:
                    caps[ci] -= size
                    if pack(i + 1):
                        caps[ci] += size
                        return True
                    caps[ci] += size
            return False

        return pack(0)

    def rec(avail: int, remaining: int, doms: list[int]) -> MinorModel | None:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise SearchBudgetExceeded(f"minor search exceeded {budget} nodes")
        if remaining == 0:
            return MinorModel(tuple(
                frozenset(v for v in range(host.n) if assigned_mask[p] >> v & 1)
                for p in range(pattern.n)))
        if not feasible(avail):
            return None
        p, best = -1, None
        for q in range(pattern.n):
            if assigned_mask[q]:
                continue
            size = doms[q].bit_count()
            if size == 0:
                return None
            if best is None or size < best:
                best, p = size, q
        room = avail.bit_count() - (remaining - 1)
        cand = doms[p] & size_le[min(room, host.n + 1)]
        p_nbrs = padj[p]
        p_cls = pclass[p]
        while cand:
            ib = cand & -cand
            cand ^= ib
            i = ib.bit_length() - 1
            nodes += 1
            if nodes > budget:
                raise SearchBudgetExceeded(f"minor search exceeded {budget} nodes")
            s = masks[i]
            sadj = adjs[i]
            vmin = (s & -s).bit_length() - 1
            adj_bits = adjacent_pre[i]
            base = disjoint_pre[i] & size_le[max(0, min(room - sizes[i] + 1, host.n + 1))]
            new_doms = doms[:]
            ok = True
            for q in range(pattern.n):
                if q == p or assigned_mask[q]:
                    continue
                nd = doms[q] & base
                if q in p_nbrs:
                    nd &= adj_bits
                if pclass[q] == p_cls:
                    nd &= minbit_gt[vmin] if q > p else minbit_lt[vmin]
                if nd == 0:
                    ok = False
                    break
                new_doms[q] = nd
            if ok:
                assigned_mask[p] = s
                assigned_adj[p] = sadj
                got = rec(avail & ~s, remaining - 1, new_doms)
                if got is not None:
                    return got
                assigned_mask[p] = 0
                assigned_adj[p] = 0
        return None

    return rec((1 << host.n) - 1, pattern.n, domains)


# ---------------------------------------------------------------------------
# canonical forms and the delta-wye closure of K_6
# ---------------------------------------------------------------------------

def canonical_form(g: Graph) -> tuple:
    """Isomorphism-invariant key: lexicographically maximal adjacency rows.

    Exhaustive permutation search with prefix pruning; row k records the
    edges from the vertex in position k back to positions 0..k-1.
    """
    n = g.n
    adj = _adj_masks(g)
    best: list[int] | None = None
    perm: list[int] = []
    cur: list[int] = []
    used = [False] * n

    def rec():
        nonlocal best
        k = len(perm)
        if k == n:
            if best is None:
                best = cur[:]
            return
        cands = []
        for v in range(n):
            if used[v]:
                continue
            row = 0
            for i in range(k):
                if adj[v] >> perm[i] & 1:
                    row |= 1 << i
            cands.append((row, v))
        cands.sort(reverse=True)
        for row, v in cands:
            if best is not None:
                if row < best[k]:
                    break
                if row > best[k]:
                    best = None
            used[v] = True
            perm.append(v)
            cur.append(row)
            rec()
            used[v] = False
            perm.pop()
            cur.pop()

    rec()
    return (n, tuple(best if best is not None else ()))


def delta_to_wye(g: Graph, triangle: tuple[int, int, int]) -> Graph:
    """Replace a triangle by a new degree-3 vertex; edge count is preserved."""
    a, b, c = sorted(triangle)
    tri_edges = {(a, b), (a, c), (b, c)}
    if not tri_edges <= set(g.edges):
        raise BadParams(f"{triangle} is not a triangle")
    edges = [e for e in g.edges if e not in tri_edges]
    w = g.n
    edges += [(a, w), (b, w), (c, w)]
    return build_graph(g.n + 1, edges)


def wye_to_delta(g: Graph, v: int) -> Graph:
    """Replace a degree-3 vertex with independent neighbourhood by a triangle."""
    nbrs = sorted(g.neighbors(v))
    if len(nbrs) != 3:
        raise BadParams(f"vertex {v} does not have degree 3")
    edge_set = set(g.edges)
    for x, y in itertools.combinations(nbrs, 2):
        if (x, y) in edge_set:
            raise BadParams(f"neighbours of {v} are not independent")
    relabel = lambda w: w if w < v else w - 1
    edges = [(relabel(a), relabel(b)) for a, b in g.edges if v not in (a, b)]
    edges += [tuple(sorted((relabel(x), relabel(y))))
              for x, y in itertools.combinations(nbrs, 2)]
    return build_graph(g.n - 1, edges)


@functools.lru_cache(maxsize=1)
def petersen_family() -> tuple[Graph, ...]:
    """Delta-wye / wye-delta closure of K_6 up to isomorphism.

    Only edge-count-preserving moves are applied (wye-delta requires an
    independent neighbourhood), so every member keeps 15 edges; the closure
    has exactly seven members.
    """
    k6 = generate_named("complete", 6)
    members = {canonical_form(k6): k6}
    frontier = [k6]
    while frontier:
        g = frontier.pop()
        moves = []
        edge_set = set(g.edges)
        for tri in itertools.combinations(range(g.n), 3):
            a, b, c = tri
            if (a, b) in edge_set and (a, c) in edge_set and (b, c) in edge_set:
                moves.append(delta_to_wye(g, tri))
        for v in range(g.n):
            nbrs = sorted(g.neighbors(v))
            if len(nbrs) != 3:
                continue
            if any((x, y) in edge_set for x, y in itertools.combinations(nbrs, 2)):
                continue
            moves.append(wye_to_delta(g, v))
        for h in moves:
            key = canonical_form(h)
            if key not in members:
                members[key] = h
                frontier.append(h)
    return tuple(sorted(members.values(), key=lambda g: (g.n, g.edges)))


@functools.lru_cache(maxsize=256)
def is_flat(g: Graph, budget: int = DEFAULT_MINOR_BUDGET) -> bool:
    """True iff no member of the K_6 delta-wye closure is a minor of g."""
    for member in petersen_family():
        if member.n <= g.n and has_minor(g, member, budget=budget) is not None:
            return False
    return True

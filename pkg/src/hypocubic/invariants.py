"""Structural invariants: girth, face vectors, cyclic edge connectivity, automorphisms."""

from __future__ import annotations

import re
from collections import Counter, deque
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from itertools import combinations

from hypocubic.embedding import PlanarEmbedding, trace_faces
from hypocubic.graph import Graph, GraphError, cherries, connected

Edge = tuple[int, int]

_SUPERSCRIPTS = str.maketrans("⁰¹²³⁴⁵⁶⁷⁸⁹", "0123456789")


@dataclass(frozen=True)
class FaceVector:
    """Multiset of face sizes, stored as sorted ``(size, count)`` pairs."""

    items: tuple[tuple[int, int], ...]

    @classmethod
    def from_sizes(cls, sizes: Iterable[int]) -> FaceVector:
        return cls.from_counts(Counter(sizes))

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> FaceVector:
        return cls(tuple(sorted((k, c) for k, c in counts.items() if c)))

    @classmethod
    def parse(cls, text: str) -> FaceVector:
        """Parse ``"5^30 7^5 8^4 11"`` (superscript digits are accepted too)."""
        counts: Counter[int] = Counter()
        text = re.sub(r"[⁰¹²³⁴⁵⁶⁷⁸⁹]+", lambda m: "^" + m.group().translate(_SUPERSCRIPTS) + " ", text)
        for tok in text.replace(",", " ").split():
            m = re.fullmatch(r"(\d+)(?:\^(\d+))?", tok)
            if not m:
                raise ValueError(f"bad face-vector token {tok!r}")
            counts[int(m.group(1))] += int(m.group(2) or 1)
        return cls.from_counts(counts)

    def as_dict(self) -> dict[int, int]:
        return dict(self.items)

    @property
    def face_count(self) -> int:
        return sum(c for _, c in self.items)

    @property
    def size_sum(self) -> int:
        return sum(k * c for k, c in self.items)

    def identities_hold(self, vertex_count: int, edge_count: int, cubic: bool = True) -> bool:
        """Handshake, Euler, and (for cubic graphs) the curvature identity."""
        ok = self.size_sum == 2 * edge_count and self.face_count == edge_count - vertex_count + 2
        if cubic:
            ok = ok and sum((k - 2) * c for k, c in self.items) == 2 * (vertex_count - 2)
        return ok

    def __str__(self) -> str:
        return " ".join(str(k) if c == 1 else f"{k}^{c}" for k, c in self.items)


def faces(e: PlanarEmbedding) -> FaceVector:
    return FaceVector.from_sizes(len(f) for f in trace_faces(e.graph))


def shortest_cycle(g: Graph) -> list[int] | None:
    """A shortest cycle as a vertex list, or None for a forest."""
    adj = g.adjacency
    n = g.vertex_count
    best = n + 1
    best_cycle = None
    for root in range(n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            dx = dist[x]
            if 2 * dx + 1 >= best:
                break
            for y in adj[x]:
                if y == parent[x]:
                    continue
                if y in dist:
                    length = dx + dist[y] + 1
                    if length < best:
                        best = length
                        best_cycle = _close_walk(parent, x, y)
                else:
                    dist[y] = dx + 1
                    parent[y] = x
                    queue.append(y)
    return best_cycle


def _close_walk(parent: dict[int, int], x: int, y: int) -> list[int]:
    px = [x]
    while parent[px[-1]] != -1:
        px.append(parent[px[-1]])
    py = [y]
    while parent[py[-1]] != -1:
        py.append(parent[py[-1]])
    # both end at the root
    return px[::-1] + py[:-1]


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle; None if ``g`` is acyclic."""
    c = shortest_cycle(g)
    return None if c is None else len(c)


def _incidence(g: Graph) -> tuple[list[Edge], list[list[tuple[int, int]]]]:
    edges = g.edges()
    inc: list[list[tuple[int, int]]] = [[] for _ in range(g.vertex_count)]
    for i, (u, v) in enumerate(edges):
        inc[u].append((v, i))
        inc[v].append((u, i))
    return edges, inc


def _max_flow(
    edges: list[Edge], inc: list[list[tuple[int, int]]], sources: set[int], sinks: set[int], cap: int
) -> tuple[int, set[int] | None]:
    """Unit-capacity undirected max flow between contracted vertex sets.

    Stops after ``cap + 1`` augmentations.  When the flow value is ``<= cap``
    the source side of a minimum cut is returned as well.
    """
    flow = [0] * len(edges)  # +1: low -> high endpoint, -1: high -> low
    value = 0
    while True:
        pred: dict[int, tuple[int, int]] = {s: (-1, -1) for s in sources}
        queue = deque(sources)
        hit = -1
        while queue and hit < 0:
            x = queue.popleft()
            for y, e in inc[x]:
                if y in pred:
                    continue
                residual = 1 - flow[e] if x < y else 1 + flow[e]
                if residual <= 0:
                    continue
                pred[y] = (x, e)
                if y in sinks:
                    hit = y
                    break
                queue.append(y)
        if hit < 0:
            return value, set(pred)
        value += 1
        if value > cap:
            return value, None
        y = hit
        while y not in sources:
            x, e = pred[y]
            flow[e] += 1 if x < y else -1
            y = x


def mincut_between(g: Graph, a: Iterable[int], b: Iterable[int], cap: int) -> int:
    """Minimum number of edges separating vertex sets ``a`` and ``b``.

    Values above ``cap`` are reported as ``cap + 1``.
    """
    sa, sb = set(a), set(b)
    if not sa or not sb:
        raise ValueError("both vertex sets must be nonempty")
    if sa & sb:
        raise ValueError(f"vertex sets overlap in {sorted(sa & sb)}")
    edges, inc = _incidence(g)
    value, _ = _max_flow(edges, inc, sa, sb, cap)
    return value


def boundary(g: Graph, side: Iterable[int]) -> list[Edge]:
    """Edges with exactly one endpoint in ``side``."""
    s = set(side)
    return [(u, v) for u, v in g.edges() if (u in s) != (v in s)]


def is_cycle_separating(g: Graph, cut: Iterable[Edge]) -> bool:
    """True if deleting ``cut`` leaves at least two components that contain cycles."""
    removed = {(min(u, v), max(u, v)) for u, v in cut}
    n = g.vertex_count
    comp = [-1] * n
    cyclic = 0
    for s in range(n):
        if comp[s] >= 0:
            continue
        comp[s] = s
        stack = [s]
        verts = 0
        degree_sum = 0
        while stack:
            x = stack.pop()
            verts += 1
            for y in g.adjacency[x]:
                if (min(x, y), max(x, y)) in removed:
                    continue
                degree_sum += 1
                if comp[y] < 0:
                    comp[y] = s
                    stack.append(y)
        if degree_sum // 2 >= verts:
            cyclic += 1
    return cyclic >= 2


@dataclass(frozen=True)
class CyclicConnectivity:
    """Cyclic edge connectivity, exact up to 5.

    ``value`` is None when no cycle-separating cut with at most five edges
    exists (this includes graphs with no cycle-separating cut at all).
    ``cut`` is a witness cut of size ``value``.
    """

    value: int | None
    cut: tuple[Edge, ...] = field(default=(), compare=False)

    @property
    def is_exact(self) -> bool:
        return self.value is not None

    def __str__(self) -> str:
        return "NoCycleSeparatingCut" if self.value is None else f"Exact({self.value})"


NO_CUT = CyclicConnectivity(None)


def _require_connected_cubic(g: Graph) -> None:
    if not connected(g):
        raise GraphError("cyclic connectivity needs a connected graph")
    if not g.is_cubic():
        raise GraphError("cyclic connectivity is implemented for cubic graphs only")


def _exact_cut(g: Graph, side: set[int]) -> CyclicConnectivity:
    cut = tuple(boundary(g, side))
    return CyclicConnectivity(len(cut), cut)


def _confirm_five(g: Graph, edges, inc) -> CyclicConnectivity:
    """Decide whether a cycle-separating 5-cut exists, given none of size <= 4 does."""
    cyc = shortest_cycle(g)
    if cyc is not None and len(cyc) == 5:
        cut = boundary(g, cyc)
        if len(cut) == 5 and is_cycle_separating(g, cut):
            return CyclicConnectivity(5, tuple(cut))
    # A forest side holding a 4-vertex path has at least 6 boundary edges in
    # a cubic graph, so a 5-cut between two disjoint such paths separates cycles.
    paths = []
    adj = g.adjacency
    for b, c in edges:
        for a in adj[b]:
            if a == c:
                continue
            for d in adj[c]:
                if d != b and d != a:
                    paths.append(frozenset((a, b, c, d)))
    paths = sorted(set(paths), key=sorted)
    for i, p in enumerate(paths):
        for q in paths[i + 1 :]:
            if p & q:
                continue
            value, side = _max_flow(edges, inc, set(p), set(q), 5)
            if value <= 5:
                return _exact_cut(g, side)
    return NO_CUT


def cyclic_connectivity(g: Graph) -> CyclicConnectivity:
    """Cyclic edge connectivity of a connected cubic graph via cherry-pair flows.

    In a cubic graph a side that is a forest and contains a cherry has at
    least five boundary edges, so the minimum flow over vertex-disjoint cherry
    pairs equals ``min(cyclic connectivity, 5)``.  A value of 5 is confirmed
    separately because a 5-cut may just isolate a cherry.
    """
    _require_connected_cubic(g)
    edges, inc = _incidence(g)
    chs = cherries(g)
    best = 6
    best_side: set[int] | None = None
    for i, c1 in enumerate(chs):
        s1 = set(c1.vertices)
        for c2 in chs[i + 1 :]:
            s2 = set(c2.vertices)
            if s1 & s2:
                continue
            value, side = _max_flow(edges, inc, s1, s2, best - 1)
            if value < best:
                best, best_side = value, side
    if best <= 4:
        return _exact_cut(g, best_side)
    if best == 5:
        return _confirm_five(g, edges, inc)
    return NO_CUT


def _dart_faces(g: Graph) -> tuple[list[list[int]], list[list[int]]]:
    """Face index of every dart ``(v, i)``, and each face's vertex sequence."""
    adj = g.adjacency
    face_of = [[-1] * len(a) for a in adj]
    boundaries = []
    for v0, nbrs in enumerate(adj):
        for i0 in range(len(nbrs)):
            if face_of[v0][i0] >= 0:
                continue
            f = len(boundaries)
            walk = []
            v, i = v0, i0
            while face_of[v][i] < 0:
                face_of[v][i] = f
                walk.append(v)
                w = adj[v][i]
                j = adj[w].index(v) + 1
                v, i = w, (j if j < len(adj[w]) else 0)
            boundaries.append(walk)
    return face_of, boundaries


def planar_cyclic_connectivity(e: PlanarEmbedding) -> CyclicConnectivity:
    """Cyclic edge connectivity of a cubic plane graph via short dual cycles.

    A minimal edge cut of a plane graph is a cycle of the dual.  A dual
    triangle is trivial exactly when its three edges meet at one vertex.
    Once no nontrivial triangle exists, a dual 4-cycle is trivial (it
    surrounds one edge) exactly when it has a chord.  Falls back to
    :func:`cyclic_connectivity` when the dual is not simple or when the
    answer is not settled by a pentagonal face.
    """
    g = e.graph
    _require_connected_cubic(g)
    adj = g.adjacency
    face_of, boundaries = _dart_faces(g)
    nf = len(boundaries)
    nbr: list[dict[int, Edge]] = [{} for _ in range(nf)]
    for u, nbrs in enumerate(adj):
        for i, v in enumerate(nbrs):
            if u > v:
                continue
            f1 = face_of[u][i]
            f2 = face_of[v][adj[v].index(u)]
            if f1 == f2 or f2 in nbr[f1]:
                return cyclic_connectivity(g)
            nbr[f1][f2] = nbr[f2][f1] = (u, v)
    mask = [sum(1 << h for h in d) for d in nbr]

    for f in range(nf):
        for h, e_fh in nbr[f].items():
            if h < f:
                continue
            common = mask[f] & mask[h] & ~((1 << (h + 1)) - 1)
            while common:
                k = (common & -common).bit_length() - 1
                common &= common - 1
                cut = (e_fh, nbr[h][k], nbr[k][f])
                if not set(cut[0]) & set(cut[1]) & set(cut[2]):
                    return CyclicConnectivity(3, tuple(sorted(cut)))

    for f in range(nf):
        mf = mask[f]
        for h in range(f + 1, nf):
            if mf >> h & 1:
                continue
            common = mf & mask[h]
            if common & (common - 1) == 0:
                continue
            ks = [k for k in nbr[f] if common >> k & 1]
            for g1, g2 in combinations(ks, 2):
                if not mask[g1] >> g2 & 1:
                    cut = (nbr[f][g1], nbr[g1][h], nbr[h][g2], nbr[g2][f])
                    return CyclicConnectivity(4, tuple(sorted(cut)))

    for face in boundaries:
        if len(face) == 5:
            # chordless pentagon: 5 boundary edges; for n >= 10 the outside has
            # (3n - 20) / 2 edges on n - 5 vertices, so it contains a cycle
            on = set(face)
            cut = [(min(x, w), max(x, w)) for x in face for w in adj[x] if w not in on]
            if len(cut) == 5 and (g.vertex_count >= 10 or is_cycle_separating(g, cut)):
                return CyclicConnectivity(5, tuple(sorted(cut)))
            break
    return cyclic_connectivity(g)


def is_three_connected(g: Graph) -> bool:
    """Vertex 3-connectivity by deleting every pair of vertices."""
    n = g.vertex_count
    if n < 4 or not connected(g):
        return False
    adj = g.adjacency
    for a, b in combinations(range(n), 2):
        start = next(v for v in range(n) if v != a and v != b)
        seen = {a, b, start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != n:
            return False
    return True


class Unsupported(ValueError):
    pass


def _extend_dart_map(adj, pos, u0: int, i0: int, x0: int, j0: int, step: int) -> bool:
    """Try to extend dart ``(u0, i0) -> (x0, j0)`` to a rotation-system isomorphism.

    ``step`` is +1 to preserve the rotation and -1 to reverse it.
    """
    n = len(adj)
    vmap = [-1] * n
    used = [False] * n
    offset = [0] * n  # image of dart (u, i) is (vmap[u], (offset[u] + step * i) % deg)
    vmap[u0] = x0
    used[x0] = True
    offset[u0] = (j0 - step * i0) % len(adj[u0])
    queue = deque([u0])
    while queue:
        u = queue.popleft()
        x = vmap[u]
        d = len(adj[u])
        for i, w in enumerate(adj[u]):
            j = (offset[u] + step * i) % d
            y = adj[x][j]
            if vmap[w] < 0:
                if used[y] or len(adj[y]) != len(adj[w]):
                    return False
                vmap[w] = y
                used[y] = True
                # reverse dart (w -> u) must land on (y -> x)
                offset[w] = (pos[y][x] - step * pos[w][u]) % len(adj[w])
                queue.append(w)
            elif vmap[w] != y or (offset[w] + step * pos[w][u]) % len(adj[w]) != pos[y][x]:
                return False
    return True


def automorphism_order(e: PlanarEmbedding) -> int:
    """Order of the automorphism group of a 3-connected plane graph.

    By Whitney's theorem every automorphism preserves or reverses the
    rotation system, so it is determined by the image of one dart and an
    orientation; each of the ``2 * 2m`` candidates is tried.
    """
    g = e.graph
    if not is_three_connected(g):
        raise Unsupported("automorphism_order needs a 3-connected graph")
    adj = g.adjacency
    pos = [{w: i for i, w in enumerate(a)} for a in adj]
    d0 = len(adj[0])
    count = 0
    for x, nbrs in enumerate(adj):
        if len(nbrs) != d0:
            continue
        for j in range(len(nbrs)):
            for step in (1, -1):
                if _extend_dart_map(adj, pos, 0, 0, x, j, step):
                    count += 1
    return count

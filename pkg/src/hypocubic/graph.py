"""Sub-cubic simple graphs and the small helpers every other module uses."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from itertools import combinations

MAX_DEGREE = 3


class GraphError(ValueError):
    """Raised when an edge list or adjacency table is not a simple sub-cubic graph."""

    def __init__(self, message: str, edge: tuple[int, int] | None = None):
        super().__init__(message)
        self.edge = edge


@dataclass(frozen=True, slots=True)
class Graph:
    """Immutable simple graph with maximum degree 3.

    ``adjacency[v]`` is the ordered neighbour tuple of ``v``.  When the graph
    came from a plane embedding the order is the clockwise rotation.
    """

    adjacency: tuple[tuple[int, ...], ...]

    @property
    def vertex_count(self) -> int:
        return len(self.adjacency)

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return sorted((u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v)

    def is_cubic(self) -> bool:
        return all(len(a) == 3 for a in self.adjacency)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed ``perm[v]``; neighbour order is kept."""
        n = len(self.adjacency)
        adj: list[tuple[int, ...]] = [()] * n
        for v, nbrs in enumerate(self.adjacency):
            adj[perm[v]] = tuple(perm[u] for u in nbrs)
        return Graph(tuple(adj))


def build_graph(vertex_count: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; adjacency order follows insertion order."""
    if vertex_count < 0:
        raise GraphError(f"negative vertex count {vertex_count}")
    adj: list[list[int]] = [[] for _ in range(vertex_count)]
    for u, v in edges:
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{vertex_count - 1}", (u, v))
        if u == v:
            raise GraphError(f"loop at vertex {u}", (u, v))
        if v in adj[u]:
            raise GraphError(f"duplicate edge ({u}, {v})", (u, v))
        if len(adj[u]) == MAX_DEGREE or len(adj[v]) == MAX_DEGREE:
            raise GraphError(f"edge ({u}, {v}) pushes a degree above {MAX_DEGREE}", (u, v))
        adj[u].append(v)
        adj[v].append(u)
    return Graph(tuple(tuple(a) for a in adj))


def graph_from_adjacency(adjacency: Sequence[Sequence[int]]) -> Graph:
    """Validate an adjacency table (symmetric, simple, degree <= 3) and freeze it."""
    n = len(adjacency)
    adj = tuple(tuple(a) for a in adjacency)
    for v, nbrs in enumerate(adj):
        if len(nbrs) > MAX_DEGREE:
            raise GraphError(f"vertex {v} has degree {len(nbrs)} > {MAX_DEGREE}")
        if len(set(nbrs)) != len(nbrs):
            raise GraphError(f"vertex {v} lists a neighbour twice")
        for u in nbrs:
            if not 0 <= u < n:
                raise GraphError(f"vertex {v} has out-of-range neighbour {u}", (v, u))
            if u == v:
                raise GraphError(f"loop at vertex {v}", (v, v))
            if v not in adj[u]:
                raise GraphError(f"asymmetric adjacency: {u} in list of {v} but not vice versa", (v, u))
    return Graph(adj)


def swap_remove_labels(vertex_count: int, v: int) -> list[int]:
    """Original label of each vertex of ``delete_vertex(g, v)``.

    The last vertex moves into the hole left by ``v``; all others keep their index.
    """
    labels = list(range(vertex_count))
    labels[v] = vertex_count - 1
    labels.pop()
    return labels


def delete_vertex(g: Graph, v: int) -> Graph:
    """Remove ``v``; vertex ``n-1`` is renumbered ``v`` (swap-remove).

    Use :func:`swap_remove_labels` to translate results back to ``g``'s labels.
    """
    n = g.vertex_count
    if not 0 <= v < n:
        raise GraphError(f"vertex {v} out of range for a graph on {n} vertices")
    last = n - 1

    def rename(u: int) -> int:
        return v if u == last else u

    adj = []
    for old in swap_remove_labels(n, v):
        adj.append(tuple(rename(u) for u in g.adjacency[old] if u != v))
    return Graph(tuple(adj))


@dataclass(frozen=True, slots=True, order=True)
class Cherry:
    """A 2-edge path ``arms[0] - center - arms[1]`` with ``arms[0] < arms[1]``."""

    center: int
    arms: tuple[int, int]

    @property
    def vertices(self) -> tuple[int, int, int]:
        return (self.center, *self.arms)


def cherries(g: Graph) -> list[Cherry]:
    """All cherries, sorted by ``(center, arms)``."""
    out = []
    for c, nbrs in enumerate(g.adjacency):
        for a, b in combinations(sorted(nbrs), 2):
            out.append(Cherry(c, (a, b)))
    return out


def connected(g: Graph) -> bool:
    n = g.vertex_count
    if n == 0:
        return True
    forest = DisjointSetForest(n)
    for u, v in g.edges():
        forest.union(u, v)
    return forest.component_count == 1


class DisjointSetForest:
    """Union-find over ``0..size-1`` with union by rank and path halving."""

    def __init__(self, size: int):
        self._parent = list(range(size))
        self._rank = [0] * size
        self.component_count = size

    def __len__(self) -> int:
        return len(self._parent)

    def find(self, x: int) -> int:
        parent = self._parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        """Merge the sets of ``a`` and ``b``; False if they were already one set."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self._rank[ra] < self._rank[rb]:
            ra, rb = rb, ra
        self._parent[rb] = ra
        if self._rank[ra] == self._rank[rb]:
            self._rank[ra] += 1
        self.component_count -= 1
        return True

    def same(self, a: int, b: int) -> bool:
        return self.find(a) == self.find(b)

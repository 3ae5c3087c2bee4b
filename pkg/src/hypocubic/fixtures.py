"""Small named graphs used in tests, demos and the ``fixtures`` subcommand.

Plane fixtures carry clockwise rotation systems (as plantri emits them).
The Petersen graph is not planar, so only its adjacency is meaningful.
"""

from __future__ import annotations

from hypocubic.embedding import PlanarEmbedding
from hypocubic.graph import Graph, build_graph, graph_from_adjacency


def k4() -> PlanarEmbedding:
    return PlanarEmbedding(graph_from_adjacency([[1, 2, 3], [0, 3, 2], [0, 1, 3], [0, 2, 1]]))


def prism() -> PlanarEmbedding:
    return PlanarEmbedding(
        graph_from_adjacency([[1, 2, 3], [0, 4, 5], [0, 5, 3], [0, 2, 4], [1, 3, 5], [1, 4, 2]])
    )


def cube() -> PlanarEmbedding:
    return PlanarEmbedding(
        graph_from_adjacency(
            [[1, 2, 3], [0, 4, 5], [0, 5, 6], [0, 6, 4], [1, 3, 7], [1, 7, 2], [2, 7, 3], [4, 6, 5]]
        )
    )


_DODECAHEDRON_1BASED = [
    [2, 3, 4], [1, 5, 6], [1, 7, 8], [1, 9, 10], [2, 10, 11],
    [2, 12, 7], [3, 6, 13], [3, 14, 9], [4, 8, 15], [4, 16, 5],
    [5, 17, 12], [6, 11, 18], [7, 18, 14], [8, 13, 19], [9, 19, 16],
    [10, 15, 17], [11, 16, 20], [12, 20, 13], [14, 20, 15], [17, 19, 18],
]  # fmt: skip


def dodecahedron() -> PlanarEmbedding:
    return PlanarEmbedding(graph_from_adjacency([[u - 1 for u in row] for row in _DODECAHEDRON_1BASED]))


def petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return build_graph(10, edges)


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


PLANE_FIXTURES = {
    "k4": k4,
    "prism": prism,
    "cube": cube,
    "dodecahedron": dodecahedron,
}

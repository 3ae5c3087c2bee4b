"""Rotation systems and face tracing."""

from __future__ import annotations

from dataclasses import dataclass

from hypocubic.graph import Graph, connected


class NotSphereEmbedding(ValueError):
    """The rotation system does not describe a connected plane graph."""


def trace_faces(g: Graph) -> list[list[int]]:
    """Face boundaries of the rotation system stored in ``g.adjacency``.

    A face is the orbit of darts under ``(u, v) -> (v, w)`` where ``w`` is the
    neighbour following ``u`` in the rotation at ``v``.  Each face is returned
    as its vertex sequence.  Reversing the convention mirrors every face but
    leaves the multiset of face sizes unchanged.
    """
    adj = g.adjacency
    # dart (v, i) is v -> adj[v][i]
    seen = [[False] * len(a) for a in adj]
    out = []
    for v0, nbrs in enumerate(adj):
        for i0 in range(len(nbrs)):
            if seen[v0][i0]:
                continue
            face = []
            v, i = v0, i0
            while not seen[v][i]:
                seen[v][i] = True
                face.append(v)
                w = adj[v][i]
                aw = adj[w]
                j = aw.index(v) + 1
                if j == len(aw):
                    j = 0
                v, i = w, j
            out.append(face)
    return out


@dataclass(frozen=True, slots=True)
class PlanarEmbedding:
    """A graph whose adjacency order is a clockwise rotation system of the sphere."""

    graph: Graph

    def __post_init__(self):
        g = self.graph
        if g.vertex_count <= 1:
            return
        if not connected(g):
            raise NotSphereEmbedding("embedded graph is disconnected")
        f = len(trace_faces(g))
        euler = g.vertex_count - g.edge_count + f
        if euler != 2:
            raise NotSphereEmbedding(
                f"V - E + F = {g.vertex_count} - {g.edge_count} + {f} = {euler}, expected 2"
            )

    @property
    def rotation(self) -> tuple[tuple[int, ...], ...]:
        return self.graph.adjacency

    @property
    def vertex_count(self) -> int:
        return self.graph.vertex_count

    def face_boundaries(self) -> list[list[int]]:
        return trace_faces(self.graph)

"""Complete hamiltonian cycle search for sub-cubic graphs.

Each edge is Unknown, Required or Excluded.  After every decision the state
is closed under four rules:

* a vertex with two Required edges excludes its remaining edge;
* a vertex with only two non-Excluded edges requires both;
* an edge joining the two ends of one Required path is Excluded, unless that
  path already covers every vertex, in which case it closes the cycle;
* a vertex left with fewer than two non-Excluded edges is a contradiction.

Required paths are tracked by their end points: ``other[x]`` is the far end
of the path ending at ``x``.  When propagation stalls the search branches on
an Unknown edge at a path end (Required first, then Excluded).  Every
decision is logged on a trail so that backtracking just replays it in
reverse.
"""

from __future__ import annotations

import sys
from collections.abc import Sequence
from dataclasses import dataclass

from hypocubic.graph import Graph, GraphError

UNKNOWN, REQUIRED, EXCLUDED = 0, 1, 2


class UnsupportedGraph(GraphError):
    pass


@dataclass(frozen=True)
class HamResult:
    """``cycle`` is a hamiltonian cycle, or None when none exists."""

    cycle: tuple[int, ...] | None
    nodes_searched: int = 0

    @property
    def is_hamiltonian(self) -> bool:
        return self.cycle is not None

    def __str__(self) -> str:
        return "H" if self.cycle is not None else "N"


class _Contradiction(Exception):
    pass


class HamiltonSearch:
    """Search state for one graph, optionally with one vertex deleted.

    ``reverse_ties`` flips the branching tie-break (highest edge index wins);
    it gives an independent second run for cross-checking.  A connectivity
    check on the non-Excluded edges runs every ``prune_interval`` nodes.
    """

    def __init__(
        self,
        g: Graph,
        skip: int | None = None,
        *,
        reverse_ties: bool = False,
        prune_interval: int = 64,
    ):
        adj = g.adjacency
        n = len(adj)
        self.n = n
        self.active = [v for v in range(n) if v != skip]
        self.target = len(self.active)
        if self.target < 3:
            raise UnsupportedGraph(f"hamiltonicity needs at least 3 vertices, got {self.target}")
        edges = sorted((u, v) for u in self.active for v in adj[u] if u < v and v != skip)
        self.eu = [u for u, _ in edges]
        self.ev = [v for _, v in edges]
        self.inc: list[list[int]] = [[] for _ in range(n)]
        self.edge_at: list[dict[int, int]] = [{} for _ in range(n)]
        for e, (u, v) in enumerate(edges):
            self.inc[u].append(e)
            self.inc[v].append(e)
            self.edge_at[u][v] = e
            self.edge_at[v][u] = e
        self.state = bytearray(len(edges))
        self.nreq = [0] * n
        self.navail = [len(self.inc[v]) for v in range(n)]
        self.other = list(range(n))
        self.required = 0
        self.closed = False
        self.trail: list = []
        self.queue: list[int] = []
        self.nodes = 0
        self.reverse_ties = reverse_ties
        self.prune_interval = max(1, prune_interval)

    # -- primitive moves, each recorded on the trail --

    def _require(self, e: int) -> None:
        if self.state[e] == REQUIRED:
            return
        if self.state[e] == EXCLUDED:
            raise _Contradiction
        u, v = self.eu[e], self.ev[e]
        nreq = self.nreq
        if nreq[u] == 2 or nreq[v] == 2:
            raise _Contradiction
        other = self.other
        a, b = other[u], other[v]
        if a == v:
            # u and v are the two ends of one path
            if self.required + 1 != self.target:
                raise _Contradiction
            self.closed = True
        self.state[e] = REQUIRED
        nreq[u] += 1
        nreq[v] += 1
        self.required += 1
        self.trail.append((e, a, other[a], b, other[b]))
        if not self.closed:
            other[a] = b
            other[b] = a
            self.queue.append(u)
            self.queue.append(v)
            self._check_ends(a, b)

    def _exclude(self, e: int) -> None:
        if self.state[e] == EXCLUDED:
            return
        if self.state[e] == REQUIRED:
            raise _Contradiction
        self.state[e] = EXCLUDED
        u, v = self.eu[e], self.ev[e]
        self.navail[u] -= 1
        self.navail[v] -= 1
        self.trail.append(e)
        self.queue.append(u)
        self.queue.append(v)

    def _check_ends(self, a: int, b: int) -> None:
        """Path now runs a..b: its closing edge is either forbidden or final."""
        e = self.edge_at[a].get(b)
        if self.required == self.target - 1:
            if e is None:
                raise _Contradiction
            self._require(e)
        elif e is not None and self.state[e] == UNKNOWN:
            self._exclude(e)

    def _undo(self, mark: int) -> None:
        trail = self.trail
        state, nreq, navail, other, eu, ev = self.state, self.nreq, self.navail, self.other, self.eu, self.ev
        while len(trail) > mark:
            t = trail.pop()
            if type(t) is int:
                state[t] = UNKNOWN
                navail[eu[t]] += 1
                navail[ev[t]] += 1
            else:
                e, a, oa, b, ob = t
                state[e] = UNKNOWN
                nreq[eu[e]] -= 1
                nreq[ev[e]] -= 1
                self.required -= 1
                other[a] = oa
                other[b] = ob
        self.closed = False

    def _propagate(self) -> None:
        queue = self.queue
        state, inc, nreq, navail = self.state, self.inc, self.nreq, self.navail
        while queue and not self.closed:
            x = queue.pop()
            if navail[x] < 2:
                raise _Contradiction
            if nreq[x] == 2:
                if navail[x] > 2:
                    for e in inc[x]:
                        if state[e] == UNKNOWN:
                            self._exclude(e)
            elif navail[x] == 2:
                for e in inc[x]:
                    if state[e] == UNKNOWN:
                        self._require(e)
                        if self.closed:
                            return

    def _disconnected(self) -> bool:
        inc, state, eu, ev = self.inc, self.state, self.eu, self.ev
        start = self.active[0]
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for e in inc[x]:
                if state[e] != EXCLUDED:
                    y = ev[e] if eu[e] == x else eu[e]
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
        return len(seen) != self.target

    def _choose(self) -> int:
        """Unknown edge at a path end with fewest alternatives; -1 if none left."""
        state, inc, nreq = self.state, self.inc, self.nreq
        best = -1
        best_key = None
        rev = self.reverse_ties
        for x in self.active:
            if nreq[x] != 1:
                continue
            unknown = [e for e in inc[x] if state[e] == UNKNOWN]
            if not unknown:
                continue
            for e in unknown:
                key = (len(unknown), -e if rev else e)
                if best_key is None or key < best_key:
                    best_key, best = key, e
        if best >= 0:
            return best
        free = [e for e in range(len(state)) if state[e] == UNKNOWN]
        if not free:
            return -1
        return max(free) if rev else min(free)

    def _attempt(self, move, e: int) -> bool:
        mark = len(self.trail)
        try:
            move(e)
            self._propagate()
            if self.closed or self._search():
                return True
        except _Contradiction:
            pass
        self.queue.clear()
        self._undo(mark)
        return False

    def _search(self) -> bool:
        self.nodes += 1
        if self.nodes % self.prune_interval == 0 and self._disconnected():
            return False
        e = self._choose()
        if e < 0:
            return False
        return self._attempt(self._require, e) or self._attempt(self._exclude, e)

    def run(self) -> HamResult:
        if self._disconnected():
            return HamResult(None, 0)
        self.queue.extend(self.active)
        try:
            self._propagate()
            found = self.closed or self._search()
        except _Contradiction:
            found = False
        cycle = self._extract_cycle() if found else None
        return HamResult(cycle, self.nodes)

    def _extract_cycle(self) -> tuple[int, ...]:
        nbr: dict[int, list[int]] = {v: [] for v in self.active}
        for e, s in enumerate(self.state):
            if s == REQUIRED:
                nbr[self.eu[e]].append(self.ev[e])
                nbr[self.ev[e]].append(self.eu[e])
        start = self.active[0]
        cycle = [start]
        prev, cur = start, nbr[start][0]
        while cur != start:
            cycle.append(cur)
            a, b = nbr[cur]
            prev, cur = cur, (b if a == prev else a)
        return tuple(cycle)


def _ensure_depth(g: Graph) -> None:
    need = 4 * g.edge_count + 200
    if sys.getrecursionlimit() < need:
        sys.setrecursionlimit(need)


def find_hamiltonian(g: Graph, *, reverse_ties: bool = False, prune_interval: int = 64) -> HamResult:
    """Decide hamiltonicity; the returned cycle is always verified."""
    _ensure_depth(g)
    result = HamiltonSearch(g, reverse_ties=reverse_ties, prune_interval=prune_interval).run()
    if result.cycle is not None and not verify_cycle(g, result.cycle):
        raise AssertionError(f"solver produced an invalid cycle {result.cycle}")
    return result


def find_hamiltonian_avoiding(
    g: Graph, v: int, *, reverse_ties: bool = False, prune_interval: int = 64
) -> HamResult:
    """Hamiltonicity of ``g - v``; the cycle uses ``g``'s labels."""
    if not 0 <= v < g.vertex_count:
        raise GraphError(f"vertex {v} out of range for a graph on {g.vertex_count} vertices")
    _ensure_depth(g)
    result = HamiltonSearch(g, skip=v, reverse_ties=reverse_ties, prune_interval=prune_interval).run()
    if result.cycle is not None and not verify_cycle(g, result.cycle, skip=v):
        raise AssertionError(f"solver produced an invalid cycle {result.cycle} avoiding {v}")
    return result


def verify_cycle(g: Graph, cycle: Sequence[int], skip: int | None = None) -> bool:
    """True iff ``cycle`` visits every vertex (except ``skip``) once along edges of ``g``."""
    expected = g.vertex_count - (skip is not None)
    if len(cycle) != expected or len(cycle) < 3:
        return False
    if len(set(cycle)) != len(cycle) or skip in cycle:
        return False
    if not all(0 <= v < g.vertex_count for v in cycle):
        return False
    return all(g.has_edge(cycle[i - 1], cycle[i]) for i in range(len(cycle)))


def reference_is_hamiltonian(g: Graph) -> bool:
    """Plain path-extension backtracking, kept deliberately naive as an oracle."""
    n = g.vertex_count
    if n < 3:
        return False
    adj = g.adjacency
    visited = [False] * n
    visited[0] = True

    def extend(v: int, depth: int) -> bool:
        if depth == n:
            return 0 in adj[v]
        for w in adj[v]:
            if not visited[w]:
                visited[w] = True
                if extend(w, depth + 1):
                    return True
                visited[w] = False
        return False

    return extend(0, 1)

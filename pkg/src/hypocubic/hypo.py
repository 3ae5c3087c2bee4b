"""Hypohamiltonicity: not hamiltonian, but hamiltonian after deleting any vertex."""

from __future__ import annotations

from dataclasses import dataclass

from hypocubic.graph import Graph
from hypocubic.hamilton import HamResult, find_hamiltonian, find_hamiltonian_avoiding, verify_cycle

HAMILTONIAN = "hamiltonian"
NOT_HYPO = "not_hypo"
HYPOHAMILTONIAN = "hypohamiltonian"


@dataclass(frozen=True)
class HypoResult:
    """Outcome with its certificate.

    * ``hamiltonian``: ``cycle`` is a hamiltonian cycle of the graph.
    * ``not_hypo``: the graph is not hamiltonian and neither is ``g - witness``
      (``proof`` holds that search result).
    * ``hypohamiltonian``: ``certificates[v]`` is a hamiltonian cycle of ``g - v``.
    """

    kind: str
    cycle: tuple[int, ...] | None = None
    witness: int | None = None
    proof: HamResult | None = None
    certificates: tuple[tuple[int, ...], ...] = ()

    @property
    def is_hypohamiltonian(self) -> bool:
        return self.kind == HYPOHAMILTONIAN

    @property
    def is_hamiltonian(self) -> bool:
        return self.kind == HAMILTONIAN

    def verify(self, g: Graph) -> bool:
        if self.kind == HAMILTONIAN:
            return self.cycle is not None and verify_cycle(g, self.cycle)
        if self.kind == HYPOHAMILTONIAN:
            return len(self.certificates) == g.vertex_count and all(
                verify_cycle(g, c, skip=v) for v, c in enumerate(self.certificates)
            )
        return self.witness is not None and self.proof is not None and not self.proof.is_hamiltonian

    def __str__(self) -> str:
        if self.kind == NOT_HYPO:
            return f"{self.kind}(witness={self.witness})"
        return self.kind


def classify_hypohamiltonian(g: Graph, *, known_nonhamiltonian: HamResult | None = None, **solver) -> HypoResult:
    """Classify ``g``; deletions are tried in ascending vertex order.

    ``known_nonhamiltonian`` lets a caller that already ran the solver on ``g``
    in this process skip the repeat.  ``solver`` options go to the search.
    """
    if known_nonhamiltonian is not None and not known_nonhamiltonian.is_hamiltonian:
        base = known_nonhamiltonian
    else:
        base = find_hamiltonian(g, **solver)
    if base.is_hamiltonian:
        return HypoResult(HAMILTONIAN, cycle=base.cycle)
    certs = []
    for v in range(g.vertex_count):
        r = find_hamiltonian_avoiding(g, v, **solver)
        if not r.is_hamiltonian:
            return HypoResult(NOT_HYPO, witness=v, proof=r)
        certs.append(r.cycle)
    return HypoResult(HYPOHAMILTONIAN, certificates=tuple(certs))

"""Grinberg's face-weight condition as a numeric feasibility test.

A hamiltonian cycle of a plane graph splits the faces into an inside and an
outside set with equal total weight, where a ``k``-face weighs ``k - 2``.
If no proper nonempty subset of faces carries half the total weight, the
graph cannot be hamiltonian.
"""

from __future__ import annotations

from hypocubic.embedding import PlanarEmbedding
from hypocubic.invariants import FaceVector, faces


def grinberg_feasible(fv: FaceVector) -> bool:
    total = sum((k - 2) * c for k, c in fv.items)
    if total % 2:
        return False
    half = total // 2
    if half == 0:
        return fv.face_count >= 2
    # bounded knapsack over face weights as a bitset of reachable sums
    reachable = 1
    limit = (1 << (half + 1)) - 1
    for k, c in fv.items:
        w = k - 2
        if w == 0:
            continue
        for _ in range(c):
            grown = (reachable | (reachable << w)) & limit
            if grown == reachable:
                break
            reachable = grown
    return bool(reachable >> half & 1)


def grinberg_certifies_nonhamiltonian(e: PlanarEmbedding) -> bool:
    return not grinberg_feasible(faces(e))

"""Census toolkit for planar cubic graphs: girth, cyclic connectivity,
hamiltonicity and hypohamiltonicity with checkable certificates."""

from hypocubic.graph import (
    Cherry,
    DisjointSetForest,
    Graph,
    GraphError,
    build_graph,
    cherries,
    connected,
    delete_vertex,
    graph_from_adjacency,
)
from hypocubic.embedding import NotSphereEmbedding, PlanarEmbedding
from hypocubic.codec import (
    PlanarCodeError,
    TextFormatError,
    read_planar_code,
    read_text_adjacency,
    write_planar_code,
    write_text_adjacency,
)
from hypocubic.invariants import (
    CyclicConnectivity,
    FaceVector,
    automorphism_order,
    cyclic_connectivity,
    faces,
    girth,
    mincut_between,
    planar_cyclic_connectivity,
)
from hypocubic.grinberg import grinberg_certifies_nonhamiltonian, grinberg_feasible
from hypocubic.hamilton import (
    HamResult,
    find_hamiltonian,
    find_hamiltonian_avoiding,
    reference_is_hamiltonian,
    verify_cycle,
)
from hypocubic.hypo import HypoResult, classify_hypohamiltonian

__version__ = "0.1.0"

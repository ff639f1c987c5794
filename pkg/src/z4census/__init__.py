"""Census toolkit for small graphs with cyclic automorphism group of order 4.

The package enumerates, exactly and exhaustively, the isomorphism classes of
10-vertex graphs whose full automorphism group is cyclic of order 4, and
computes exact structural invariants (degrees, girth, clique and chromatic
numbers, connectivity, metric data, planarity, Eulerian/Hamiltonian
properties, transitivity, homomorphism core, characteristic polynomial)
for arbitrary graphs on up to 32 vertices.
"""

from .graphs import (
    Graph,
    GraphError,
    Graph6Error,
    UnsupportedSizeError,
    make_graph,
    complement,
    induced_subgraph,
    relabel,
    graph6_encode,
    graph6_decode,
)
from .perms import (
    Perm,
    perm_from_cycles,
    element_order,
    pair_orbits,
    order4_representatives,
    group_order,
    vertex_orbits,
)
from .aut import (
    AutResult,
    CanonicalForm,
    refine,
    automorphism_group,
    canonical_form,
    are_isomorphic,
)
from .census import (
    ScanConfig,
    FamilyResult,
    scan_generator,
    enumerate_family,
    complement_pairs,
    verify_structure_claim,
)
from .invariants import InvariantProfile, profile

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "GraphError",
    "Graph6Error",
    "UnsupportedSizeError",
    "make_graph",
    "complement",
    "induced_subgraph",
    "relabel",
    "graph6_encode",
    "graph6_decode",
    "Perm",
    "perm_from_cycles",
    "element_order",
    "pair_orbits",
    "order4_representatives",
    "group_order",
    "vertex_orbits",
    "AutResult",
    "CanonicalForm",
    "refine",
    "automorphism_group",
    "canonical_form",
    "are_isomorphic",
    "ScanConfig",
    "FamilyResult",
    "scan_generator",
    "enumerate_family",
    "complement_pairs",
    "verify_structure_claim",
    "InvariantProfile",
    "profile",
]

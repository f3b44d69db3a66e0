"""Walk-length persistence for weighted directed graphs.

Thin Python layer over the C++ core: filtrations (walk-length, Dowker
sink/source, Rips), persistent homology over GF(2), bottleneck and network
distances with exact brute-force minimizers, cycle-network generators, and
the simulated place-cell experiment.
"""

from ._core import (
    DomainError,
    FilteredComplex,
    betti,
    bottleneck_distance,
    cycle_network,
    distance_matrix,
    dowker_sink_filtration,
    dowker_source_filtration,
    is_strongly_connected,
    knn_classify,
    modified_cycle_network,
    network_distance,
    paper_fixture,
    persistence,
    preprocess,
    rips_filtration,
    shortest_distance,
    simulate_trial,
    single_linkage,
    symmetrize,
    validate,
    walk_length_filtration,
    walk_length_oracle,
)

__all__ = [
    "DomainError",
    "FilteredComplex",
    "betti",
    "bottleneck_distance",
    "cycle_network",
    "distance_matrix",
    "dowker_sink_filtration",
    "dowker_source_filtration",
    "is_strongly_connected",
    "knn_classify",
    "modified_cycle_network",
    "network_distance",
    "paper_fixture",
    "persistence",
    "preprocess",
    "rips_filtration",
    "shortest_distance",
    "simulate_trial",
    "single_linkage",
    "symmetrize",
    "validate",
    "walk_length_filtration",
    "walk_length_oracle",
]

__version__ = "0.1.0"

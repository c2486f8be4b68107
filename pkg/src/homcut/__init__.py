"""homcut: exact workbench for surjective graph homomorphisms and factor cuts.

The package ships five exact homomorphism solvers, a factor-cut engine,
executable hardness-gadget constructions with provenance, a complexity
classifier for small targets, and seeded verification suites tying them all
together.  Everything is exact and brute-force-verified at desk scale.
"""
from ._kernels import BACKEND
from .cuts import (
    FactorCut,
    are_factor_roots,
    check_factor_cut,
    enumerate_factor_cuts,
    find_factor_cut,
)
from .dichotomy import Classification, classify, recognize_lifted_target
from .gadgets import (
    GadgetInstance,
    TargetAnalysis,
    TargetRejected,
    analyze_target,
    build_factorcut,
    build_factorcut_case1,
    build_factorcut_case2,
    build_surjective_instance,
    lift_target,
)
from .generator import random_connected_graph
from .graph import (
    Graph,
    GraphParseError,
    add_true_twin,
    are_isomorphic,
    connected_components,
    distances_from,
    identify_vertices,
    induced_subgraph,
    is_bipartite,
    is_loop_connected,
    max_clique_size,
    parse_graph,
    serialize_graph,
    true_twin_classes,
)
from .hom import (
    COMPACTION,
    PLAIN,
    SURJECTIVE,
    ListHom,
    Retraction,
    check_witness,
    enumerate_all,
    solve,
)

__all__ = [
    "BACKEND",
    "COMPACTION",
    "Classification",
    "FactorCut",
    "GadgetInstance",
    "Graph",
    "GraphParseError",
    "ListHom",
    "PLAIN",
    "Retraction",
    "SURJECTIVE",
    "TargetAnalysis",
    "TargetRejected",
    "add_true_twin",
    "analyze_target",
    "are_factor_roots",
    "are_isomorphic",
    "build_factorcut",
    "build_factorcut_case1",
    "build_factorcut_case2",
    "build_surjective_instance",
    "check_factor_cut",
    "check_witness",
    "classify",
    "connected_components",
    "distances_from",
    "enumerate_all",
    "enumerate_factor_cuts",
    "find_factor_cut",
    "identify_vertices",
    "induced_subgraph",
    "is_bipartite",
    "is_loop_connected",
    "lift_target",
    "max_clique_size",
    "parse_graph",
    "random_connected_graph",
    "recognize_lifted_target",
    "serialize_graph",
    "solve",
    "true_twin_classes",
]

__version__ = "0.1.0"

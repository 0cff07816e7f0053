"""Acyclic subgraphs of oriented graphs with high chromatic number.

Exact f(G), the destroyer and six-block orderings, the grid tournament G_n
with its transitive covers, inconsistent odd cycles in 4-chromatic
orientations, and random-tournament experiments.
"""

from .chromatic import Coloring, chromatic_number, is_k_colorable, longest_monotone_subsequence, max_clique
from .core import (
    LinearOrder,
    OrientedGraph,
    SplitMix64,
    Tournament,
    UndirectedGraph,
    random_tournament,
    transitive_tournament,
    underlying_graph,
)
from .destroyer import DestroyerTrace, destroyer_ordering
from .errors import (
    AntisymmetryViolation,
    ChromaticTooLow,
    DimensionMismatch,
    FormatError,
    NoOddCycle,
    NotAPermutation,
    PreconditionViolated,
    SizeLimitExceeded,
    Timeout,
    VerificationFailed,
)
from .formats import parse_graph_file, serialize_graph_file
from .gn import build_gn, cover_by_transitive, find_interval_quadruple, find_large_transitive
from .oddk4 import acyclic_3chromatic_subgraph, find_inconsistent_odd_cycle, find_odd_k4_subdivision
from .orderings import f_exact, f_lower_heuristic, left_subgraph, right_subgraph
from .randexp import ExperimentConfig, run_experiment
from .theorem1 import theorem1_ordering, verify_theorem1
from .triangles import cyclic_triangle_counts, max_transitive_subtournament, min_cyclic_edge

__version__ = "0.1.0"

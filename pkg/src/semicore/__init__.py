"""Digraph peeling for dense subgraphs.

Greedy removal of minimum-semidegree vertices finds, exactly, the
largest value c such that some induced subgraph keeps every vertex's
outdegree and indegree at or above c. The package pairs that with an
extremal tournament construction showing the d(d+1)/(2n) guarantee is
nearly tight, and with exact evaluation of the threshold formulas used
for dense graphs.
"""

from ._dispatch import backend
from .digraph import (
    DiGraph,
    build_digraph,
    degrees,
    gen_complete_bidirected,
    gen_random_min_outdegree,
    gen_transitive_tournament,
    induced_subgraph,
    parse_digraph,
    serialize_digraph,
)
from .dense import (
    DensePeelReport,
    dense_peel,
    digraph_envelope,
    envelope_crossover,
    envelope_crossover_oriented,
    indegree_threshold_peel,
    oriented_envelope,
    sweep,
    threshold_ratio_digraph,
    threshold_ratio_oriented,
)
from .errors import SemicoreError
from .extremal import TournamentParams, extremal_tournament, sharpness_cap
from .oracle import brute_max_min_semidegree
from .peel import (
    PeelTrace,
    guarantee_holds,
    max_min_semidegree,
    peel_diagnostics,
    peel_semidegree,
    peel_semidegree_reference,
    semidegree_core,
    semidegree_guarantee,
)

__version__ = "0.1.0"

__all__ = [
    "DiGraph",
    "DensePeelReport",
    "PeelTrace",
    "SemicoreError",
    "TournamentParams",
    "backend",
    "brute_max_min_semidegree",
    "build_digraph",
    "degrees",
    "dense_peel",
    "digraph_envelope",
    "envelope_crossover",
    "envelope_crossover_oriented",
    "extremal_tournament",
    "gen_complete_bidirected",
    "gen_random_min_outdegree",
    "gen_transitive_tournament",
    "guarantee_holds",
    "indegree_threshold_peel",
    "induced_subgraph",
    "max_min_semidegree",
    "oriented_envelope",
    "parse_digraph",
    "peel_diagnostics",
    "peel_semidegree",
    "peel_semidegree_reference",
    "semidegree_core",
    "semidegree_guarantee",
    "serialize_digraph",
    "sharpness_cap",
    "sweep",
    "threshold_ratio_digraph",
    "threshold_ratio_oriented",
]

"""Unoriented genus and crosscap number of prime alternating knots and links.

The minimal-genus state of an alternating diagram is found by rewriting its
unsigned Gauss code: 1-gons and bigons are smoothed greedily, triangles fork
into two branches.  ``compute_invariants`` is the main entry point.

>>> from stategenus import parse_gauss, compute_invariants
>>> rep = compute_invariants(parse_gauss("[[1,2,3,1,2,3]]"))
>>> rep.unoriented_genus, rep.crosscap
(1, 1)
"""

from .codec import GaussCode, canonical_relabel, crossing_count, dt_to_gauss, parse_gauss, serialize_gauss
from .engine import BranchResult, StateCode, minimal_genus_states, optimal_state
from .invariants import InvariantReport, build_state_graph, compute_invariants, is_bipartite, is_simple
from .oracle import brute_force_invariants, brute_force_max_circles, count_circles
from .smoothing import GaussStateCode, detect_smallest_mgon

__all__ = [
    "GaussCode",
    "parse_gauss",
    "serialize_gauss",
    "canonical_relabel",
    "crossing_count",
    "dt_to_gauss",
    "GaussStateCode",
    "detect_smallest_mgon",
    "StateCode",
    "BranchResult",
    "minimal_genus_states",
    "optimal_state",
    "InvariantReport",
    "build_state_graph",
    "is_simple",
    "is_bipartite",
    "compute_invariants",
    "count_circles",
    "brute_force_max_circles",
    "brute_force_invariants",
]

__version__ = "0.1.0"

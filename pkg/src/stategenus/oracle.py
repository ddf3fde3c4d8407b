"""Exhaustive Kauffman-state enumeration straight from the Gauss word.

Independent of the rewriting engine.  A state is traced over the edges of
the diagram (the stretches between consecutive word positions).  Arriving
at an appearance of crossing x, the strand switches to the other
appearance of x; the oriented smoothing keeps the direction of travel, the
unoriented one reverses it.  Each closed trace is one state circle; the
crossings at which it switches form its circle tuple.
"""

from __future__ import annotations

from itertools import product
from typing import Mapping

from .codec import GaussCode
from .engine import StateCode
from .invariants import InvariantReport, crosscap_from_state, is_bipartite, is_simple

__all__ = [
    "ORIENTED",
    "UNORIENTED",
    "OracleBoundError",
    "OracleInconsistencyError",
    "trace_state",
    "count_circles",
    "brute_force_max_circles",
    "brute_force_invariants",
    "DEFAULT_BOUND",
]

ORIENTED = "oriented"
UNORIENTED = "unoriented"
DEFAULT_BOUND = 16


class OracleBoundError(ValueError):
    pass


class OracleInconsistencyError(RuntimeError):
    """Optimal states disagree on the simple-and-bipartite verdict."""


class _Word:
    def __init__(self, g: GaussCode):
        self.labels = g.labels
        self.slots = []  # (component, position) in reading order
        self.index = {}
        for ci, comp in enumerate(g.components):
            for p in range(len(comp)):
                self.index[(ci, p)] = len(self.slots)
                self.slots.append((ci, p))
        n = len(self.slots)
        self.label = [g.components[ci][p] for ci, p in self.slots]
        self.succ = [0] * n
        self.pred = [0] * n
        for ci, comp in enumerate(g.components):
            m = len(comp)
            for p in range(m):
                k = self.index[(ci, p)]
                self.succ[k] = self.index[(ci, (p + 1) % m)]
                self.pred[k] = self.index[(ci, (p - 1) % m)]
        first: dict[int, int] = {}
        self.partner = [0] * n
        for k, x in enumerate(self.label):
            if x in first:
                self.partner[k] = first[x]
                self.partner[first[x]] = k
            else:
                first[x] = k

    def trace(self, oriented: Mapping[int, bool]) -> list[tuple[int, ...]]:
        # an edge is named by its tail slot: edge k runs from slot k to succ[k]
        n = len(self.slots)
        seen = [False] * n
        circles = []
        for start in range(n):
            if seen[start]:
                continue
            circ = []
            edge, forward = start, True
            while True:
                seen[edge] = True
                at = self.succ[edge] if forward else edge
                x = self.label[at]
                circ.append(x)
                q = self.partner[at]
                if not oriented[x]:
                    forward = not forward
                edge = q if forward else self.pred[q]
                if edge == start and forward:
                    break
                if seen[edge]:  # pragma: no cover - guarded by construction
                    raise RuntimeError("state trace revisited an edge")
            circles.append(tuple(circ))
        return circles


def _as_flags(g: GaussCode, a) -> dict[int, bool]:
    flags = {}
    for x in g.labels:
        v = a[x]
        if isinstance(v, str):
            if v not in (ORIENTED, UNORIENTED):
                raise ValueError(f"unknown smoothing {v!r} for crossing {x}")
            flags[x] = v == ORIENTED
        else:
            flags[x] = bool(v)
    return flags


def trace_state(g: GaussCode, a: Mapping[int, object]) -> StateCode:
    """Circles of the state ``a`` (crossing -> "oriented"/"unoriented")."""
    return StateCode(tuple(_Word(g).trace(_as_flags(g, a))))


def count_circles(g: GaussCode, a: Mapping[int, object]) -> int:
    return len(trace_state(g, a))


def _enumerate(g: GaussCode, bound: int, adequate_only: bool):
    c = g.crossing_count
    if c > bound:
        raise OracleBoundError(f"{c} crossings exceeds the exhaustive bound {bound}")
    w = _Word(g)
    labels = g.labels
    for bits in product((True, False), repeat=len(labels)):
        flags = dict(zip(labels, bits))
        circles = w.trace(flags)
        if adequate_only and any(len(set(ci)) != len(ci) for ci in circles):
            continue
        yield flags, circles


def _assignment(flags: dict[int, bool]) -> dict[int, str]:
    return {x: ORIENTED if f else UNORIENTED for x, f in flags.items()}


def brute_force_max_circles(
    g: GaussCode, bound: int = DEFAULT_BOUND, adequate_only: bool = False
) -> tuple[int, list[dict[int, str]]]:
    """Maximum circle count over all 2^c states, and every maximizer."""
    best = 0
    winners: list[dict[int, str]] = []
    for flags, circles in _enumerate(g, bound, adequate_only):
        s = len(circles)
        if s > best:
            best, winners = s, [_assignment(flags)]
        elif s == best:
            winners.append(_assignment(flags))
    return best, winners


def optimal_states(g: GaussCode, bound: int = DEFAULT_BOUND) -> list[StateCode]:
    """State codes of every maximal state."""
    best = 0
    out: list[StateCode] = []
    for _, circles in _enumerate(g, bound, False):
        s = len(circles)
        if s > best:
            best, out = s, [StateCode(tuple(circles))]
        elif s == best:
            out.append(StateCode(tuple(circles)))
    return out


def brute_force_invariants(g: GaussCode, bound: int = DEFAULT_BOUND) -> InvariantReport:
    c = g.crossing_count
    if c < 2:
        raise ValueError(f"need at least 2 crossings, got {c}")
    states = optimal_states(g, bound)
    verdicts = {is_simple(x) and is_bipartite(x) for x in states}
    if len(verdicts) != 1:
        raise OracleInconsistencyError(
            f"{g}: optimal states disagree on simple-and-bipartite ({len(states)} states)"
        )
    return crosscap_from_state(c, states[0])

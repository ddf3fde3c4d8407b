"""State graphs, simplicity/bipartiteness, and the genus/crosscap rule.

For a reduced alternating diagram with c crossings whose optimal state has
s circles, the unoriented genus is ``1 + c - s``.  The crosscap number is
one more than that exactly when the optimal state graph is simple and
bipartite (every optimal state gives the same verdict for prime diagrams
with c >= 3).  The 2-crossing Hopf diagram is the exception and is
special-cased on crossing count.

Primality and reducedness are preconditions and are not checked.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations, product

from .codec import GaussCode
from .engine import DEFAULT_BUDGET, StateCode, minimal_genus_states

__all__ = [
    "StateGraph",
    "InvariantReport",
    "build_state_graph",
    "is_simple",
    "is_bipartite",
    "has_balanced_partition",
    "crosscap_from_state",
    "compute_invariants",
]


def _circles(x) -> tuple[tuple[int, ...], ...]:
    return x.circles if isinstance(x, StateCode) else tuple(tuple(c) for c in x)


@dataclass(frozen=True)
class StateGraph:
    """Multigraph: vertex i is circle i; one edge ``(u, v, label)`` per crossing."""

    vertex_count: int
    edges: tuple[tuple[int, int, int], ...]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def loops(self):
        return [e for e in self.edges if e[0] == e[1]]

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v, _ in self.edges:
            adj[u].append(v)
            if u != v:
                adj[v].append(u)
        return adj


def build_state_graph(x) -> StateGraph:
    circles = _circles(x)
    where: dict[int, list[int]] = {}
    for i, circ in enumerate(circles):
        for lab in circ:
            where.setdefault(lab, []).append(i)
    bad = sorted(lab for lab, vs in where.items() if len(vs) != 2)
    if bad:
        raise ValueError(f"labels not occurring exactly twice: {bad}")
    edges = tuple((vs[0], vs[1], lab) for lab, vs in sorted(where.items()))
    return StateGraph(len(circles), edges)


def is_simple(x) -> bool:
    """No circle meets a crossing twice and no two circles share two crossings."""
    circles = _circles(x)
    sets = []
    for circ in circles:
        s = set(circ)
        if len(s) != len(circ):
            return False
        sets.append(s)
    return all(len(a & b) <= 1 for a, b in combinations(sets, 2))


def is_bipartite(x) -> bool:
    """2-colour the state graph by BFS; a loop makes it non-bipartite."""
    graph = build_state_graph(x)
    if graph.loops():
        return False
    adj = graph.adjacency()
    colour = [-1] * graph.vertex_count
    for root in range(graph.vertex_count):
        if colour[root] >= 0:
            continue
        colour[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if colour[v] < 0:
                    colour[v] = 1 - colour[u]
                    queue.append(v)
                elif colour[v] == colour[u]:
                    return False
    return True


def has_balanced_partition(x, limit: int = 20) -> bool:
    """Exhaustive check: split the circles into two classes so that every
    crossing label occurs exactly once in each class.

    Equivalent to :func:`is_bipartite`; kept as an independent cross-check
    for small states (``len(x) <= limit``).
    """
    circles = _circles(x)
    n = len(circles)
    if n > limit:
        raise ValueError(f"{n} circles exceeds the exhaustive partition limit {limit}")
    if n == 0:
        return True
    for bits in product((0, 1), repeat=n - 1):
        side = (0,) + bits
        seen: dict[int, list[int]] = {}
        for i, circ in enumerate(circles):
            for lab in circ:
                seen.setdefault(lab, []).append(side[i])
        if all(sorted(v) == [0, 1] for v in seen.values()):
            return True
    return False


@dataclass(frozen=True)
class InvariantReport:
    crossing_count: int
    circle_count: int
    unoriented_genus: int
    crosscap: int
    bipartite: bool
    simple: bool
    witness: StateCode

    @property
    def defect(self) -> bool:
        return self.crosscap > self.unoriented_genus


def crosscap_from_state(c: int, x) -> InvariantReport:
    """Genus and crosscap from an optimal state ``x`` of a c-crossing diagram."""
    circles = _circles(x)
    s = len(circles)
    genus = 1 + c - s
    simple = is_simple(circles)
    bip = is_bipartite(circles)
    if c == 2:
        genus, crosscap = 1, 2
    else:
        crosscap = genus + 1 if (simple and bip) else genus
    witness = x if isinstance(x, StateCode) else StateCode(circles)
    return InvariantReport(c, s, genus, crosscap, bip, simple, witness)


def compute_invariants(
    g: GaussCode, budget: int = DEFAULT_BUDGET, best_only: bool = True
) -> InvariantReport:
    c = g.crossing_count
    if c < 2:
        raise ValueError(f"need at least 2 crossings, got {c}")
    res = minimal_genus_states(g, budget, best_only=best_only)
    return crosscap_from_state(c, res.best)

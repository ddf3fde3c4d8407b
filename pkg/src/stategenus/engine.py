"""Depth-first driver for the minimal genus search.

Each node is harvested, then the smallest m-gon is found and smoothed.
1-gons and bigons have a single successor.  A triangle forks: the triangle
smoothing is explored first, the anti-triangle smoothing second.  Leaves
are state codes; the best leaf is the first one (in DFS order) with the
most circles.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .codec import GaussCode
from .smoothing import (
    Bigon,
    GaussStateCode,
    OneGon,
    detect_smallest_mgon,
    format_circles,
    harvest_closed_components,
    smooth_anti_triangle,
    smooth_bigon,
    smooth_one_gon,
    smooth_triangle,
)

__all__ = [
    "StateCode",
    "BranchResult",
    "NoMgonError",
    "BranchBudgetExceeded",
    "DEFAULT_BUDGET",
    "minimal_genus_states",
    "optimal_state",
    "walk",
]

DEFAULT_BUDGET = 1_000_000


class NoMgonError(ValueError):
    """No 1-gon, bigon or triangle with crossings left: the word is not a diagram."""

    def __init__(self, state: GaussStateCode):
        super().__init__(f"no m-gon (m <= 3) in {state}")
        self.state = state


class BranchBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class StateCode:
    """One tuple of crossing labels per state circle, in discovery order."""

    circles: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.circles)

    def __iter__(self):
        return iter(self.circles)

    def __str__(self) -> str:
        return format_circles(self.circles)

    def check(self) -> None:
        counts: dict[int, int] = {}
        for circ in self.circles:
            for x in circ:
                counts[x] = counts.get(x, 0) + 1
        bad = sorted(x for x, n in counts.items() if n != 2)
        if bad:
            raise ValueError(f"labels not occurring exactly twice: {bad}")


@dataclass
class BranchResult:
    best: StateCode
    all_leaves: list[StateCode] = field(default_factory=list)
    branch_count: int = 1
    node_count: int = 0


def walk(g: GaussCode, budget: int = DEFAULT_BUDGET):
    """Yield ``(node, finding)`` for every node in DFS order.

    ``node`` is the harvested Gauss-state code; ``finding`` is ``None`` at a
    leaf.  Used by the engine and by the invariant tests.
    """
    stack = [GaussStateCode.initial(g)]
    nodes = 0
    while stack:
        nodes += 1
        if nodes > budget:
            raise BranchBudgetExceeded(f"more than {budget} search nodes")
        gs = harvest_closed_components(stack.pop())
        if not gs.gauss:
            yield gs, None
            continue
        f = detect_smallest_mgon(gs)
        if f is None:
            raise NoMgonError(gs)
        yield gs, f
        if isinstance(f, OneGon):
            stack.append(smooth_one_gon(gs, f))
        elif isinstance(f, Bigon):
            stack.append(smooth_bigon(gs, f))
        else:
            stack.append(smooth_anti_triangle(gs, f))
            stack.append(smooth_triangle(gs, f))


def minimal_genus_states(
    g: GaussCode, budget: int = DEFAULT_BUDGET, best_only: bool = False
) -> BranchResult:
    best = None
    leaves = []
    nodes = 0
    branches = 0
    for gs, f in walk(g, budget):
        nodes += 1
        if f is not None:
            continue
        branches += 1
        leaf = StateCode(gs.circles)
        if best is None or len(leaf) > len(best):
            best = leaf
        if not best_only:
            leaves.append(leaf)
    assert best is not None
    return BranchResult(best, leaves, branches, nodes)


def optimal_state(g: GaussCode, budget: int = DEFAULT_BUDGET) -> StateCode:
    return minimal_genus_states(g, budget, best_only=True).best

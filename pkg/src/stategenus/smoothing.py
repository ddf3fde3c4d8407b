"""Gauss-state codes and the m-gon rewrites (m <= 3).

A Gauss-state code is the working triple ``(gauss, circles, smoothed)``:

* ``gauss`` -- a near-Gauss code.  Smoothed crossings stay in it as arc
  markers (points where a crossing arc touches the strand) and are ignored
  by detection.
* ``circles`` -- state circles found so far, one tuple per circle.
* ``smoothed`` -- labels of the crossings already resolved.

Every crossing label occurs exactly twice across ``gauss`` and ``circles``
at every stage.  Detection is purely word based: two unsmoothed
appearances are *effectively consecutive* when only markers separate them
in the cyclic reading of a component.

Scan order, used for every tie-break: components in order; within a
component the arcs between consecutive unsmoothed appearances are taken by
start position, the wrap-around arc last.  1-gons are the exception: they
are scanned by the *closing* appearance, so ``[1,3,2,3]`` with 1 and 2
smoothed reports the loop ``3,1,3``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Union

from .codec import GaussCode

__all__ = [
    "GaussStateCode",
    "OneGon",
    "Bigon",
    "Triangle",
    "MgonFinding",
    "StaleFindingError",
    "MalformedWalkError",
    "BIGON_CASES",
    "detect_smallest_mgon",
    "smooth_one_gon",
    "smooth_bigon",
    "smooth_triangle",
    "smooth_anti_triangle",
    "harvest_closed_components",
    "format_circles",
    "canonical_circle",
]

Word = tuple[int, ...]
# (component index, start position, end position) of an arc between two
# effectively consecutive unsmoothed appearances
Arc = tuple[int, int, int]
Appearance = tuple[int, int]

BIGON_CASES = {
    1: "oriented-knot",
    2: "unoriented-knot",
    3: "oriented-link",
    4: "unoriented-link",
}


class StaleFindingError(ValueError):
    """A finding does not match the Gauss-state code it is applied to."""


class MalformedWalkError(RuntimeError):
    """A triangle walk failed to consume its pieces; the input is not a diagram."""


@dataclass(frozen=True)
class GaussStateCode:
    gauss: tuple[Word, ...]
    circles: tuple[Word, ...] = ()
    smoothed: frozenset[int] = frozenset()

    @classmethod
    def initial(cls, g: GaussCode) -> "GaussStateCode":
        return cls(g.components, (), frozenset())

    @property
    def live_count(self) -> int:
        """Number of unsmoothed crossings."""
        return len({x for comp in self.gauss for x in comp if x not in self.smoothed})

    def is_terminal(self) -> bool:
        return not self.gauss

    def check(self) -> None:
        """Raise ``ValueError`` unless the twice-per-label invariants hold."""
        counts: dict[int, int] = {}
        in_gauss: dict[int, int] = {}
        for comp in self.gauss:
            for x in comp:
                counts[x] = counts.get(x, 0) + 1
                in_gauss[x] = in_gauss.get(x, 0) + 1
        for circ in self.circles:
            for x in circ:
                counts[x] = counts.get(x, 0) + 1
        bad = sorted(x for x, n in counts.items() if n != 2)
        if bad:
            raise ValueError(f"labels not occurring exactly twice: {bad}")
        for x, n in in_gauss.items():
            if x not in self.smoothed and n != 2:
                raise ValueError(f"unsmoothed crossing {x} occurs {n} time(s) in the Gauss part")
        stray = sorted(x for x in self.smoothed if x not in counts)
        if stray:
            raise ValueError(f"smoothed labels missing from the code: {stray}")
        for circ in self.circles:
            for x in circ:
                if x not in self.smoothed:
                    raise ValueError(f"circle contains unsmoothed crossing {x}")

    def __str__(self) -> str:
        g = "[" + ",".join("[" + ",".join(map(str, c)) + "]" for c in self.gauss) + "]"
        return "[" + g + "," + format_circles(self.circles) + "," + (
            "[" + ",".join(map(str, sorted(self.smoothed))) + "]"
        ) + "]"


def format_circles(circles) -> str:
    """``[(1,2),(1,3),(3,2)]`` -- the state-code text form."""
    return "[" + ",".join("(" + ",".join(map(str, c)) + ")" for c in circles) + "]"


def canonical_circle(circle) -> Word:
    """Least representative of a circle tuple under rotation and reversal."""
    t = tuple(circle)
    if not t:
        return t
    reps = []
    for seq in (t, t[::-1]):
        for i in range(len(seq)):
            reps.append(seq[i:] + seq[:i])
    return min(reps)


# ---------------------------------------------------------------- findings


@dataclass(frozen=True)
class OneGon:
    """Loop ``a, s0, a`` in component ``comp`` from ``start`` to ``end``."""

    comp: int
    start: int
    end: int
    crossing: int
    s0: Word
    w0: Word

    kind = "1-gon"


@dataclass(frozen=True)
class Bigon:
    case: int
    a: int
    b: int
    first: Arc
    second: Arc
    s0: Word
    s1: Word
    w0: Word
    w1: Word

    kind = "bigon"

    @property
    def case_name(self) -> str:
        return BIGON_CASES[self.case]


@dataclass(frozen=True)
class Triangle:
    """Three pairwise effectively consecutive crossings.

    ``arcs`` are the three s-segments in scan order.  ``segments`` holds
    the matching ``(x_i0, s_i, x_i1)`` triples and ``pairings`` the
    ``(left crossing, w_i, right crossing)`` triples, where ``w_i`` is the
    stretch following segment ``i`` in its component.
    """

    crossings: tuple[int, int, int]
    arcs: tuple[Arc, Arc, Arc]
    segments: tuple = field(default=(), compare=False)
    pairings: tuple = field(default=(), compare=False)

    kind = "triangle"


MgonFinding = Union[OneGon, Bigon, Triangle]


# ------------------------------------------------------------ word helpers


def _interior(comp: Word, start: int, end: int) -> Word:
    """Entries strictly between ``start`` and ``end`` reading forward cyclically."""
    if start < end:
        return comp[start + 1:end]
    return comp[start + 1:] + comp[:end]


def _rotate(comp: Word, start: int) -> Word:
    return comp[start:] + comp[:start]


class _Index:
    """Live positions and occurrence lookup for one Gauss-state code."""

    def __init__(self, gs: GaussStateCode):
        self.gs = gs
        sm = gs.smoothed
        self.live: list[list[int]] = []
        self.occ: dict[int, list[Appearance]] = {}
        for ci, comp in enumerate(gs.gauss):
            lp = [p for p, x in enumerate(comp) if x not in sm]
            self.live.append(lp)
            for p in lp:
                self.occ.setdefault(comp[p], []).append((ci, p))
        # position -> index within its component's live list
        self.rank = {(ci, p): k for ci, lp in enumerate(self.live) for k, p in enumerate(lp)}

    def label(self, app: Appearance) -> int:
        return self.gs.gauss[app[0]][app[1]]

    def other(self, app: Appearance) -> Appearance:
        a, b = self.occ[self.label(app)]
        return b if a == app else a

    def next_live(self, app: Appearance) -> Appearance:
        ci, _ = app
        lp = self.live[ci]
        return ci, lp[(self.rank[app] + 1) % len(lp)]

    def prev_live(self, app: Appearance) -> Appearance:
        ci, _ = app
        lp = self.live[ci]
        return ci, lp[(self.rank[app] - 1) % len(lp)]

    def arcs(self) -> Iterator[Arc]:
        """Arcs between consecutive live appearances, in scan order."""
        for ci, lp in enumerate(self.live):
            n = len(lp)
            for k in range(n):
                p, q = lp[k], lp[(k + 1) % n]
                if p != q:
                    yield ci, p, q

    def arc_key(self, arc: Arc) -> tuple[int, int]:
        return arc[0], self.rank[(arc[0], arc[1])]

    def arc_between(self, u: Appearance, v: Appearance) -> Arc | None:
        """First arc in scan order joining appearances ``u`` and ``v``."""
        if u[0] != v[0] or u == v:
            return None
        cands = []
        if self.next_live(u) == v:
            cands.append((u[0], u[1], v[1]))
        if self.next_live(v) == u:
            cands.append((v[0], v[1], u[1]))
        if not cands:
            return None
        return min(cands, key=self.arc_key)


# --------------------------------------------------------------- detection


def _find_one_gon(ix: _Index) -> OneGon | None:
    g = ix.gs.gauss
    for ci, lp in enumerate(ix.live):
        n = len(lp)
        for k in range(n):
            q, p = lp[k], lp[k - 1]
            if p != q and g[ci][p] == g[ci][q]:
                comp = g[ci]
                return OneGon(ci, p, q, comp[p], _interior(comp, p, q), _interior(comp, q, p))
    return None


def _make_bigon(ix: _Index, alpha: Arc, beta: Arc) -> Bigon:
    g = ix.gs.gauss
    ci, p, q = alpha
    cj, p2, q2 = beta
    a, b = g[ci][p], g[ci][q]
    oriented = g[cj][p2] == b
    same = ci == cj
    case = (1 if oriented else 2) if same else (3 if oriented else 4)
    s0 = _interior(g[ci], p, q)
    s1 = _interior(g[cj], p2, q2)
    if same:
        w0 = _interior(g[ci], q, p2)
        w1 = _interior(g[ci], q2, p)
    else:
        w0 = _interior(g[ci], q, p)
        w1 = _interior(g[cj], q2, p2)
    return Bigon(case, a, b, alpha, beta, s0, s1, w0, w1)


def _find_bigon(ix: _Index) -> Bigon | None:
    g = ix.gs.gauss
    for alpha in ix.arcs():
        ci, p, q = alpha
        if g[ci][p] == g[ci][q]:
            continue
        beta = ix.arc_between(ix.other((ci, p)), ix.other((ci, q)))
        if beta is not None:
            return _make_bigon(ix, alpha, beta)
    return None


def _make_triangle(ix: _Index, arcs: list[Arc]) -> Triangle:
    g = ix.gs.gauss
    arcs = sorted(arcs, key=ix.arc_key)
    segments = tuple((g[c][p], _interior(g[c], p, q), g[c][q]) for c, p, q in arcs)
    pairings = []
    for c, p, q in arcs:
        nxt = min(
            (a for a in arcs if a[0] == c),
            key=lambda a: ((a[1] - q) % len(g[c])),
        )
        pairings.append((g[c][q], _interior(g[c], q, nxt[1]), g[c][nxt[1]]))
    labels = []
    for c, p, q in arcs:
        for x in (g[c][p], g[c][q]):
            if x not in labels:
                labels.append(x)
    return Triangle(tuple(labels), tuple(arcs), segments, tuple(pairings))


def _find_triangle(ix: _Index) -> Triangle | None:
    g = ix.gs.gauss
    for alpha in ix.arcs():
        ci, p, q = alpha
        a, b = g[ci][p], g[ci][q]
        if a == b:
            continue
        a2, b2 = ix.other((ci, p)), ix.other((ci, q))
        # arc leaving a' first, then the arc arriving at a'
        for z1, beta in (
            (ix.next_live(a2), (a2[0], a2[1], ix.next_live(a2)[1])),
            (ix.prev_live(a2), (a2[0], ix.prev_live(a2)[1], a2[1])),
        ):
            if z1 == a2:
                continue
            z = ix.label(z1)
            if z in (a, b):
                continue
            gamma = ix.arc_between(b2, ix.other(z1))
            if gamma is not None:
                return _make_triangle(ix, [alpha, beta, gamma])
    return None


def detect_smallest_mgon(gs: GaussStateCode) -> MgonFinding | None:
    """Return the first 1-gon, else bigon, else triangle, else ``None``."""
    ix = _Index(gs)
    return _find_one_gon(ix) or _find_bigon(ix) or _find_triangle(ix)


# ----------------------------------------------------------------- rewrites


def _check_arc(gs: GaussStateCode, arc: Arc, labels: tuple[int, int]) -> None:
    ci, p, q = arc
    try:
        comp = gs.gauss[ci]
        ok = (comp[p], comp[q]) == labels
    except IndexError:
        ok = False
    if not ok or any(x in gs.smoothed for x in labels):
        raise StaleFindingError(f"arc {arc} does not join live crossings {labels}")
    if any(x not in gs.smoothed for x in _interior(comp, p, q)):
        raise StaleFindingError(f"arc {arc} passes a live crossing")


def _rest(gs: GaussStateCode, used) -> tuple[Word, ...]:
    return tuple(c for i, c in enumerate(gs.gauss) if i not in used)


def smooth_one_gon(gs: GaussStateCode, f: OneGon) -> GaussStateCode:
    """``[a, s0, a, w0]`` becomes ``[a, w0]`` plus the circle ``(a, s0)``.

    The circle is written in the stored reading order of the component, so
    a loop that wraps past position 0 comes out rotated, e.g. ``(1,3)``
    rather than ``(3,1)``.
    """
    _check_arc(gs, (f.comp, f.start, f.end), (f.crossing, f.crossing))
    comp = gs.gauss[f.comp]
    a = f.crossing
    s0 = _interior(comp, f.start, f.end)
    w0 = _interior(comp, f.end, f.start)
    circle = (a,) + s0
    if f.end < f.start:  # wraps: read from position 0
        cut = len(comp) - f.start
        circle = circle[cut:] + circle[:cut]
    return GaussStateCode(
        ((a,) + w0,) + _rest(gs, {f.comp}),
        gs.circles + (circle,),
        gs.smoothed | {a},
    )


def smooth_bigon(gs: GaussStateCode, f: Bigon) -> GaussStateCode:
    """Apply the rewrite for bigon case 1-4.

    1. ``[a,s0,b,w0,b,s1,a,w1]        -> [a,w1],[b,w0]``
    2. ``[a,s0,b,w0,a,s1,b,w1]        -> [a,~w0,b,w1]``
    3. ``[a,s0,b,w0],[b,s1,a,w1]      -> [a,w1,b,w0]``
    4. ``[a,s0,b,w0],[a,s1,b,w1]      -> [a,~w1,b,w0]``

    (``~`` is reversal.)  The circle is ``(a,s0,b,s1)`` for the oriented
    cases and ``(a,s0,b,~s1)`` otherwise.
    """
    a, b = f.a, f.b
    _check_arc(gs, f.first, (a, b))
    second = (b, a) if f.case in (1, 3) else (a, b)
    _check_arc(gs, f.second, second)
    ci, cj = f.first[0], f.second[0]
    if (ci == cj) != (f.case in (1, 2)):
        raise StaleFindingError("bigon case does not match its components")
    rebuilt = _make_bigon(_Index(gs), f.first, f.second)
    s0, s1, w0, w1 = rebuilt.s0, rebuilt.s1, rebuilt.w0, rebuilt.w1
    if f.case == 1:
        new = ((a,) + w1, (b,) + w0)
    elif f.case == 2:
        new = ((a,) + w0[::-1] + (b,) + w1,)
    elif f.case == 3:
        new = ((a,) + w1 + (b,) + w0,)
    else:
        new = ((a,) + w1[::-1] + (b,) + w0,)
    circle = (a,) + s0 + (b,) + (s1 if f.case in (1, 3) else s1[::-1])
    return GaussStateCode(
        new + _rest(gs, {ci, cj}),
        gs.circles + (circle,),
        gs.smoothed | {a, b},
    )


class _Pieces:
    """A triangle cut into three s-pieces and three w-pieces.

    Each of the six appearances is the end of exactly one s-piece and one
    w-piece.  Pieces are ``(left appearance, interior, right appearance)``
    read forward.
    """

    def __init__(self, gs: GaussStateCode, f: Triangle):
        labels = set(f.crossings)
        if len(labels) != 3:
            raise StaleFindingError("a triangle needs three distinct crossings")
        for arc in f.arcs:
            ci, p, q = arc
            try:
                pair = (gs.gauss[ci][p], gs.gauss[ci][q])
            except IndexError:
                raise StaleFindingError(f"arc {arc} out of range") from None
            if pair[0] == pair[1] or not set(pair) <= labels:
                raise StaleFindingError(f"arc {arc} does not join two triangle crossings")
            _check_arc(gs, arc, pair)
        ix = _Index(gs)
        apps = [(c, p) for c, p, _ in f.arcs] + [(c, q) for c, _, q in f.arcs]
        if len(set(apps)) != 6 or {ix.label(x) for x in apps} != labels:
            raise StaleFindingError("triangle arcs must use all six appearances once")
        self.ix = ix
        g = gs.gauss
        self.s = [((c, p), _interior(g[c], p, q), (c, q)) for c, p, q in f.arcs]
        self.w = []
        for c, p, q in f.arcs:
            starts = sorted(a[1] for a in f.arcs if a[0] == c)
            nxt = min(starts, key=lambda s: (s - q) % len(g[c]))
            self.w.append(((c, q), _interior(g[c], q, nxt), (c, nxt)))
        self.s_end = {}
        self.w_end = {}
        for i, (l, _, r) in enumerate(self.s):
            self.s_end[l] = (i, True)
            self.s_end[r] = (i, False)
        for j, (l, _, r) in enumerate(self.w):
            self.w_end[l] = (j, True)
            self.w_end[r] = (j, False)
        self.touched = {c for c, _, _ in f.arcs}

    def label(self, app):
        return self.ix.label(app)

    def other(self, app):
        return self.ix.other(app)


def _triangle_circle(pc: _Pieces) -> Word:
    out: list[int] = []
    left, interior, right = pc.s[0]
    out.append(pc.label(left))
    out.extend(interior)
    exit_app = right
    for _ in range(3):
        nxt = pc.other(exit_app)
        i, at_left = pc.s_end[nxt]
        if i == 0:
            return tuple(out)
        l, interior, r = pc.s[i]
        out.append(pc.label(nxt))
        if at_left:
            out.extend(interior)
            exit_app = r
        else:
            out.extend(interior[::-1])
            exit_app = l
    raise MalformedWalkError("triangle segments do not close into one circle")


def smooth_triangle(gs: GaussStateCode, f: Triangle) -> GaussStateCode:
    """Smooth the triangle into a state circle.

    The three s-segments are glued into one circle.  The w-pieces are
    re-linked by the pairing walk: take the last unprocessed pairing, write
    its word and the crossing after it, jump to the other occurrence of
    that crossing and continue through the pairing found there (its word
    reversed when entered from the right).  A component closes on reaching
    a processed pairing and is rotated to begin at its first written
    crossing.
    """
    pc = _Pieces(gs, f)
    circle = _triangle_circle(pc)
    processed: set[int] = set()
    new = []
    while len(processed) < 3:
        start = max(j for j in range(3) if j not in processed)
        comp: list[int] = []
        j, forward = start, True
        for _ in range(4):
            processed.add(j)
            l, interior, r = pc.w[j]
            if forward:
                comp.extend(interior)
                exit_app = r
            else:
                comp.extend(interior[::-1])
                exit_app = l
            comp.append(pc.label(exit_app))
            k, at_left = pc.w_end[pc.other(exit_app)]
            if k in processed:
                if (k, at_left) != (start, True):
                    raise MalformedWalkError("triangle walk re-entered a processed pairing")
                break
            j, forward = k, at_left
        else:
            raise MalformedWalkError("triangle walk did not close")
        lead = len(pc.w[start][1])
        new.append(tuple(comp[lead:] + comp[:lead]))
    return GaussStateCode(
        tuple(new) + _rest(gs, pc.touched),
        gs.circles + (circle,),
        gs.smoothed | set(f.crossings),
    )


def smooth_anti_triangle(gs: GaussStateCode, f: Triangle) -> GaussStateCode:
    """Smooth all three triangle crossings the other way; no circle forms.

    Walk: start at the first unwritten s-segment, write its crossing and the
    segment, jump at the far crossing, write that crossing and the adjacent
    word (reversed when it lies to the left), jump at the word's far
    crossing; close when the next segment is already written.
    """
    pc = _Pieces(gs, f)
    used: set[int] = set()
    new = []
    while len(used) < 3:
        i = min(k for k in range(3) if k not in used)
        start_app = pc.s[i][0]
        comp: list[int] = []
        forward = True
        for _ in range(4):
            used.add(i)
            l, interior, r = pc.s[i]
            if forward:
                comp.append(pc.label(l))
                comp.extend(interior)
                exit_app = r
            else:
                comp.append(pc.label(r))
                comp.extend(interior[::-1])
                exit_app = l
            w_app = pc.other(exit_app)
            j, at_left = pc.w_end[w_app]
            wl, winterior, wr = pc.w[j]
            comp.append(pc.label(w_app))
            if at_left:
                comp.extend(winterior)
                far = wr
            else:
                comp.extend(winterior[::-1])
                far = wl
            nxt = pc.other(far)
            k, at_start = pc.s_end[nxt]
            if k in used:
                if nxt != start_app:
                    raise MalformedWalkError("anti-triangle walk re-entered a written segment")
                break
            i, forward = k, at_start
        else:
            raise MalformedWalkError("anti-triangle walk did not close")
        new.append(tuple(comp))
    return GaussStateCode(
        tuple(new) + _rest(gs, pc.touched),
        gs.circles,
        gs.smoothed | set(f.crossings),
    )


def harvest_closed_components(gs: GaussStateCode) -> GaussStateCode:
    """Move every all-smoothed component into the circle list."""
    sm = gs.smoothed
    closed = [c for c in gs.gauss if all(x in sm for x in c)]
    if not closed:
        return gs
    live = tuple(c for c in gs.gauss if not all(x in sm for x in c))
    return GaussStateCode(live, gs.circles + tuple(closed), sm)

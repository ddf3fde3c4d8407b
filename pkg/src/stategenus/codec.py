"""Gauss codes: parsing, validation, canonical relabeling, DT conversion.

A Gauss code here is *unsigned*: for an alternating diagram the over/under
pattern is forced, so a code is just a list of cyclic words in which every
crossing label occurs exactly twice.  Text form::

    [[1,2,3,1,4,3,2,4]]
    [[1,2,3,4,2,5],[3,5,1,4]]
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "GaussCode",
    "GaussSyntaxError",
    "GaussValidityError",
    "DTCodeError",
    "parse_gauss",
    "serialize_gauss",
    "canonical_relabel",
    "crossing_count",
    "parse_dt",
    "dt_to_gauss",
]


class GaussSyntaxError(ValueError):
    """Malformed Gauss code text."""


class GaussValidityError(ValueError):
    """Well-formed text that does not describe a double-occurrence word."""


class DTCodeError(ValueError):
    """Invalid Dowker-Thistlethwaite code."""


@dataclass(frozen=True)
class GaussCode:
    """Immutable unsigned Gauss code.

    ``components`` is a tuple of tuples of positive ints.  Construction
    validates the double-occurrence condition.
    """

    components: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        comps = tuple(tuple(int(x) for x in comp) for comp in self.components)
        object.__setattr__(self, "components", comps)
        _validate(comps)

    @classmethod
    def from_lists(cls, components: Iterable[Sequence[int]]) -> "GaussCode":
        return cls(tuple(tuple(c) for c in components))

    @property
    def crossing_count(self) -> int:
        return sum(len(c) for c in self.components) // 2

    @property
    def labels(self) -> list[int]:
        return sorted({x for comp in self.components for x in comp})

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __str__(self) -> str:
        return serialize_gauss(self)


def _validate(comps: tuple[tuple[int, ...], ...]) -> None:
    if not comps:
        raise GaussValidityError("a Gauss code needs at least one component")
    for i, comp in enumerate(comps):
        if not comp:
            raise GaussValidityError(f"component {i} is empty")
        for x in comp:
            if x < 1:
                raise GaussValidityError(f"crossing labels must be positive, got {x}")
    counts = Counter(x for comp in comps for x in comp)
    bad = sorted(x for x, n in counts.items() if n != 2)
    if bad:
        detail = ", ".join(f"{x} occurs {counts[x]} time(s)" for x in bad)
        raise GaussValidityError(f"every crossing must occur exactly twice: {detail}")


_TOKEN = re.compile(r"\s*(?:(\[)|(\])|(,)|(\d+)|(\S))")


def _tokens(text: str):
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        pos = m.end()
        if m.group(5) is not None:
            raise GaussSyntaxError(f"unexpected character {m.group(5)!r} at offset {m.start(5)}")
        for kind, grp in (("[", 1), ("]", 2), (",", 3), ("int", 4)):
            if m.group(grp) is not None:
                yield kind, m.group(grp), m.start(grp)
                break


def parse_gauss(text: str) -> GaussCode:
    """Parse ``[[a,b,...],[...]]`` into a validated :class:`GaussCode`.

    Whitespace between tokens is ignored.  Signed entries are rejected:
    only unsigned codes are meaningful here.
    """
    toks = list(_tokens(text))
    i = 0

    def expect(kind):
        nonlocal i
        if i >= len(toks):
            raise GaussSyntaxError(f"unexpected end of input, expected {kind!r}")
        k, val, off = toks[i]
        if k != kind:
            raise GaussSyntaxError(f"expected {kind!r} at offset {off}, got {val!r}")
        i += 1
        return val

    def peek():
        return toks[i][0] if i < len(toks) else None

    expect("[")
    comps = []
    while True:
        expect("[")
        comp = []
        while True:
            val = expect("int")
            if val.startswith("0"):
                raise GaussSyntaxError(f"crossing label {val!r} is not a positive integer")
            comp.append(int(val))
            if peek() == ",":
                expect(",")
                continue
            expect("]")
            break
        comps.append(tuple(comp))
        if peek() == ",":
            expect(",")
            continue
        expect("]")
        break
    if i != len(toks):
        raise GaussSyntaxError(f"trailing input at offset {toks[i][2]}")
    return GaussCode(tuple(comps))


def serialize_gauss(g: GaussCode | Sequence[Sequence[int]]) -> str:
    comps = g.components if isinstance(g, GaussCode) else g
    return "[" + ",".join("[" + ",".join(str(x) for x in comp) + "]" for comp in comps) + "]"


def canonical_relabel(g: GaussCode) -> GaussCode:
    """Rename crossings to 1..c in order of first appearance."""
    mapping: dict[int, int] = {}
    for comp in g.components:
        for x in comp:
            if x not in mapping:
                mapping[x] = len(mapping) + 1
    return GaussCode(tuple(tuple(mapping[x] for x in comp) for comp in g.components))


def crossing_count(g: GaussCode) -> int:
    return g.crossing_count


def parse_dt(text: str) -> tuple[int, ...]:
    """Parse DT text: space/comma separated even ints, optional brackets."""
    body = text.strip().strip("[]()")
    parts = [p for p in re.split(r"[\s,]+", body) if p]
    if not parts:
        raise DTCodeError("empty DT code")
    try:
        return tuple(int(p) for p in parts)
    except ValueError as exc:
        raise DTCodeError(f"DT entries must be integers: {text!r}") from exc


def dt_to_gauss(dt: Sequence[int] | str) -> GaussCode:
    """Convert a knot DT code to a canonical unsigned Gauss code.

    Entry k pairs traversal position 2k-1 with position |entry_k|; signs
    are ignored.  Entries that pair cyclically adjacent positions describe
    a nugatory kink and are rejected, as are multi-component DT codes
    (anything that is not a flat list of ints).
    """
    if isinstance(dt, str):
        if dt.count("[") > 1 or dt.count("(") > 1:
            raise DTCodeError("multi-component DT codes are not supported")
        entries = parse_dt(dt)
    else:
        entries = tuple(dt)
        if any(not isinstance(e, int) for e in entries):
            raise DTCodeError("multi-component DT codes are not supported")
    n = len(entries)
    if n == 0:
        raise DTCodeError("empty DT code")
    length = 2 * n
    evens = [abs(e) for e in entries]
    for e in evens:
        if e % 2 or not 2 <= e <= length:
            raise DTCodeError(f"DT entry {e} is not an even integer in [2, {length}]")
    if len(set(evens)) != n:
        raise DTCodeError("DT entries must be distinct")
    word = [0] * length
    for k, e in enumerate(evens, start=1):
        odd = 2 * k - 1
        if abs(odd - e) == 1 or {odd, e} == {1, length}:
            raise DTCodeError(
                f"DT entry {e} pairs adjacent positions {odd} and {e} (nugatory crossing)"
            )
        word[odd - 1] = k
        word[e - 1] = k
    return canonical_relabel(GaussCode((tuple(word),)))

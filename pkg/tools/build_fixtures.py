"""Regenerate the bundled census fixtures from the KnotInfo/LinkInfo snapshot.

Needs the ``database_knotinfo`` package (not a runtime dependency):

    pip install database_knotinfo
    python tools/build_fixtures.py --max-knot 12 --max-link 11

Writes ``src/stategenus/data/knots.csv`` and ``links.csv`` with columns
``Name,Gauss Code``.  Signs are stripped after checking that they
alternate, and labels are renumbered by first appearance.
"""

import argparse
import re
from pathlib import Path

import database_knotinfo

from stategenus.census import CensusRecord, emit_records
from stategenus.codec import GaussCode, canonical_relabel

DATA = Path(__file__).resolve().parents[1] / "src" / "stategenus" / "data"


def unsigned(text: str) -> GaussCode:
    comps = []
    for body in re.findall(r"[\[{]([^\[\]{}]*)[\]}]", text):
        vals = [int(v) for v in re.split(r"[\s,]+", body.strip()) if v]
        if vals:
            comps.append(vals)
    # alternating diagram: over/under must alternate along every component
    for comp in comps:
        for u, v in zip(comp, comp[1:] + comp[:1]):
            if (u > 0) == (v > 0):
                raise ValueError(f"non-alternating code {text}")
    return canonical_relabel(GaussCode.from_lists([[abs(v) for v in c] for c in comps]))


def knots(max_c: int):
    for row in database_knotinfo.link_list():
        c = row.get("crossing_number", "")
        if not c.isdigit() or not 3 <= int(c) <= max_c or row["alternating"] != "Y":
            continue
        yield int(c), CensusRecord(row["name"], unsigned(row["gauss_notation"]))


def links(max_c: int):
    seen = set()
    for row in database_knotinfo.link_list(True):
        c = row.get("crossing_number", "")
        if not c.isdigit() or int(c) > max_c or row["alternating"] != "Y":
            continue
        name = row["name_unoriented"]
        if name in seen:
            continue
        seen.add(name)
        yield int(c), CensusRecord(name, unsigned(row["gauss_notation"]))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-knot", type=int, default=12)
    ap.add_argument("--max-link", type=int, default=11)
    args = ap.parse_args()
    DATA.mkdir(parents=True, exist_ok=True)
    for fname, gen, cap in (("knots.csv", knots, args.max_knot), ("links.csv", links, args.max_link)):
        recs = [r for _, r in sorted(gen(cap), key=lambda t: t[0])]
        with open(DATA / fname, "w", encoding="utf-8", newline="") as fh:
            emit_records(recs, fh)
        print(f"{fname}: {len(recs)} records")


if __name__ == "__main__":
    main()

"""Batch pipeline: ingest Gauss-code CSVs, compute invariants, tabulate.

Input CSV needs a name column (``Name``, ``Knot`` or ``Link``) and a
``Gauss Code`` column; extra columns are ignored.  Output CSV::

    Name,Gauss Code,State Code,Unoriented Genus,Crosscap Number
    3_1,"[[1,2,3,1,2,3]]","[(1,2),(1,3),(3,2)]",1,1
"""

from __future__ import annotations

import csv
import io
import os
import statistics
from collections import Counter
from dataclasses import dataclass, field
from importlib import resources
from multiprocessing import get_context
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .codec import GaussCode, parse_gauss, serialize_gauss
from .engine import DEFAULT_BUDGET
from .invariants import compute_invariants

__all__ = [
    "CensusRecord",
    "ResultRow",
    "RecordList",
    "IngestError",
    "SummaryRow",
    "DefectRow",
    "ingest_csv",
    "load_fixture",
    "emit_records",
    "process_batch",
    "emit_csv",
    "read_results",
    "summarize",
    "defect_report",
    "fit_exponential_decay",
    "render_summary",
    "render_defects",
    "summary_csv",
    "defects_csv",
    "OUTPUT_HEADER",
    "NAME_COLUMNS",
]

OUTPUT_HEADER = ("Name", "Gauss Code", "State Code", "Unoriented Genus", "Crosscap Number")
NAME_COLUMNS = ("Name", "Knot", "Link")


class IngestError(ValueError):
    """The source cannot be read as a census CSV at all."""


@dataclass(frozen=True)
class CensusRecord:
    name: str
    gauss: GaussCode


@dataclass(frozen=True)
class ResultRow:
    name: str
    gauss: str
    state: str = ""
    genus: int | None = None
    crosscap: int | None = None
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.error is None

    @property
    def crossing_count(self) -> int:
        return parse_gauss(self.gauss).crossing_count


class RecordList(list):
    """Records in file order; ``errors`` holds ``(line number, message)``."""

    def __init__(self, records=(), errors=()):
        super().__init__(records)
        self.errors: list[tuple[int, str]] = list(errors)


# ------------------------------------------------------------------ input


def _open_text(source):
    if isinstance(source, (str, os.PathLike)):
        try:
            return open(source, encoding="utf-8", newline=""), True
        except OSError as exc:
            raise IngestError(f"cannot read {source}: {exc}") from exc
    return source, False


def _reader(source):
    fh, owned = _open_text(source)
    try:
        text = fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise IngestError(f"cannot read census source: {exc}") from exc
    finally:
        if owned:
            fh.close()
    reader = csv.DictReader(io.StringIO(text))
    if not reader.fieldnames:
        raise IngestError("census CSV has no header row")
    reader.fieldnames = [f.strip() for f in reader.fieldnames]
    return reader


def _name_column(fields) -> str:
    for col in NAME_COLUMNS:
        if col in fields:
            return col
    raise IngestError(f"no name column (one of {', '.join(NAME_COLUMNS)}) in header {fields}")


def ingest_csv(source) -> RecordList:
    """Read census records; bad rows are collected in ``.errors``, not raised."""
    reader = _reader(source)
    fields = reader.fieldnames
    name_col = _name_column(fields)
    if "Gauss Code" not in fields:
        raise IngestError(f"no 'Gauss Code' column in header {fields}")
    out = RecordList()
    seen = set()
    for row in reader:
        line = reader.line_num
        name = (row.get(name_col) or "").strip()
        if not name:
            out.errors.append((line, "empty name"))
            continue
        if name in seen:
            out.errors.append((line, f"duplicate name {name!r}"))
            continue
        try:
            g = parse_gauss(row.get("Gauss Code") or "")
        except ValueError as exc:
            out.errors.append((line, f"{name}: {exc}"))
            continue
        seen.add(name)
        out.append(CensusRecord(name, g))
    return out


def load_fixture(kind: str, max_crossings: int | None = None) -> RecordList:
    """Bundled census: ``"knots"`` (c <= 12) or ``"links"`` (c <= 11)."""
    if kind not in ("knots", "links"):
        raise ValueError(f"unknown fixture {kind!r}")
    ref = resources.files("stategenus") / "data" / f"{kind}.csv"
    with ref.open("r", encoding="utf-8", newline="") as fh:
        recs = ingest_csv(fh)
    if max_crossings is not None:
        recs = RecordList([r for r in recs if r.gauss.crossing_count <= max_crossings], recs.errors)
    return recs


# ------------------------------------------------------------- processing


def _process_one(args) -> ResultRow:
    rec, budget = args
    text = serialize_gauss(rec.gauss)
    try:
        rep = compute_invariants(rec.gauss, budget=budget)
    except Exception as exc:  # per-record failures become error rows
        return ResultRow(rec.name, text, error=f"{type(exc).__name__}: {exc}")
    return ResultRow(rec.name, text, str(rep.witness), rep.unoriented_genus, rep.crosscap)


def process_batch(
    records: Sequence[CensusRecord], jobs: int | None = None, budget: int = DEFAULT_BUDGET
) -> list[ResultRow]:
    """One row per record, in input order whatever the worker count."""
    jobs = jobs or os.cpu_count() or 1
    work = [(r, budget) for r in records]
    if jobs <= 1 or len(work) < 2 * jobs:
        return [_process_one(w) for w in work]
    chunk = max(1, len(work) // (jobs * 8))
    with get_context("spawn" if os.name == "nt" else "fork").Pool(jobs) as pool:
        return list(pool.imap(_process_one, work, chunksize=chunk))


# ----------------------------------------------------------------- output


def _quote_name(name: str) -> str:
    if any(ch in name for ch in ',"\n\r'):
        return '"' + name.replace('"', '""') + '"'
    return name


def emit_csv(rows: Iterable[ResultRow], sink) -> int:
    """Write the results CSV; error rows are skipped.  Returns rows written."""
    n = 0
    sink.write(",".join(OUTPUT_HEADER) + "\n")
    for r in rows:
        if not r.ok:
            continue
        sink.write(f'{_quote_name(r.name)},"{r.gauss}","{r.state}",{r.genus},{r.crosscap}\n')
        n += 1
    return n


def emit_records(records: Iterable[CensusRecord], sink) -> None:
    sink.write("Name,Gauss Code\n")
    for r in records:
        sink.write(f'{_quote_name(r.name)},"{serialize_gauss(r.gauss)}"\n')


def read_results(source) -> list[ResultRow]:
    """Parse a results CSV written by :func:`emit_csv`."""
    reader = _reader(source)
    name_col = _name_column(reader.fieldnames)
    missing = [h for h in OUTPUT_HEADER[1:] if h not in reader.fieldnames]
    if missing:
        raise IngestError(f"results CSV lacks columns {missing}")
    rows = []
    for row in reader:
        try:
            genus = int(row["Unoriented Genus"])
            crosscap = int(row["Crosscap Number"])
            parse_gauss(row["Gauss Code"])
        except (TypeError, ValueError) as exc:
            raise IngestError(f"line {reader.line_num}: {exc}") from exc
        rows.append(ResultRow(row[name_col], row["Gauss Code"], row["State Code"], genus, crosscap))
    return rows


# ------------------------------------------------------------- statistics


@dataclass(frozen=True)
class Stats:
    counts: dict[int, int]
    mean: float
    median: float
    modes: tuple[int, ...]
    maximum: int

    @classmethod
    def of(cls, values: Sequence[int]) -> "Stats":
        return cls(
            dict(sorted(Counter(values).items())),
            statistics.fmean(values),
            statistics.median(values),
            tuple(sorted(statistics.multimode(values))),
            max(values),
        )


@dataclass(frozen=True)
class SummaryRow:
    c: int
    count: int
    genus: Stats
    crosscap: Stats


def _by_crossings(rows: Iterable[ResultRow]) -> dict[int, list[ResultRow]]:
    groups: dict[int, list[ResultRow]] = {}
    for r in rows:
        if r.ok:
            groups.setdefault(r.crossing_count, []).append(r)
    return dict(sorted(groups.items()))


def summarize(rows: Iterable[ResultRow]) -> dict[int, SummaryRow]:
    """Per crossing number: distributions and mean/median/mode/max of Γ and γ."""
    out = {}
    for c, grp in _by_crossings(rows).items():
        out[c] = SummaryRow(
            c,
            len(grp),
            Stats.of([r.genus for r in grp]),
            Stats.of([r.crosscap for r in grp]),
        )
    if not out:
        raise ValueError("no successful rows to summarize")
    return out


@dataclass(frozen=True)
class DefectRow:
    c: int
    by_crosscap: dict[int, int]
    total: int
    population: int
    proportion: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "proportion", self.total / self.population)


def defect_report(rows: Iterable[ResultRow]) -> dict[int, DefectRow]:
    """Per crossing number: how many rows have crosscap > genus, by crosscap."""
    out = {}
    for c, grp in _by_crossings(rows).items():
        hits = Counter(r.crosscap for r in grp if r.crosscap > r.genus)
        out[c] = DefectRow(c, dict(sorted(hits.items())), sum(hits.values()), len(grp))
    if not out:
        raise ValueError("no successful rows for a defect table")
    return out


def fit_exponential_decay(points: Iterable[tuple[float, float]]) -> tuple[float, float]:
    """Least-squares fit of ``ln p = ln A - k c``; returns ``(A, k)``."""
    pts = list(points)
    if len(pts) < 2:
        raise ValueError("need at least two points")
    cs = np.array([p[0] for p in pts], dtype=float)
    ps = np.array([p[1] for p in pts], dtype=float)
    if np.any(ps <= 0):
        raise ValueError("proportions must be positive to take logarithms")
    if np.ptp(cs) == 0:
        raise ValueError("need at least two distinct crossing numbers")
    slope, intercept = np.polyfit(cs, np.log(ps), 1)
    return float(np.exp(intercept)), float(-slope)


# -------------------------------------------------------------- rendering


def _fmt_num(x: float) -> str:
    return f"{x:.2f}"


def _fmt_median(x: float) -> str:
    return str(int(x)) if float(x).is_integer() else f"{x:.1f}"


def _stat_cells(st: Stats, values: Sequence[int]) -> list[str]:
    cells = [str(st.counts.get(v, 0)) for v in values]
    return cells + [
        _fmt_num(st.mean),
        _fmt_median(st.median),
        ",".join(map(str, st.modes)),
        str(st.maximum),
    ]


def _value_range(table: dict[int, SummaryRow]) -> list[int]:
    vals = set()
    for row in table.values():
        vals |= set(row.genus.counts) | set(row.crosscap.counts)
    return list(range(min(vals), max(vals) + 1))


def summary_csv(table: dict[int, SummaryRow], sink) -> None:
    values = _value_range(table)
    w = csv.writer(sink, lineterminator="\n")
    w.writerow(["c", "invariant"] + [str(v) for v in values] + ["mean", "median", "mode", "max"])
    for c, row in table.items():
        w.writerow([c, "genus"] + _stat_cells(row.genus, values))
        w.writerow([c, "crosscap"] + _stat_cells(row.crosscap, values))


def _aligned(rows: list[list[str]]) -> str:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(cell.rjust(w) for cell, w in zip(r, widths)).rstrip() for r in rows) + "\n"


def render_summary(table: dict[int, SummaryRow]) -> str:
    values = _value_range(table)
    rows = [["c", "inv"] + [str(v) for v in values] + ["mean", "median", "mode", "max"]]
    for c, row in table.items():
        rows.append([str(c), "Γ"] + _stat_cells(row.genus, values))
        rows.append(["", "γ"] + _stat_cells(row.crosscap, values))
    return _aligned(rows)


def _defect_columns(table: dict[int, DefectRow]) -> list[int]:
    return sorted({g for row in table.values() for g in row.by_crosscap})


def defects_csv(table: dict[int, DefectRow], sink) -> None:
    cols = _defect_columns(table)
    w = csv.writer(sink, lineterminator="\n")
    w.writerow(["c"] + [f"gamma{g}" for g in cols] + ["total", "population", "proportion"])
    for c, row in table.items():
        w.writerow(
            [c]
            + [row.by_crosscap.get(g, 0) for g in cols]
            + [row.total, row.population, f"{row.proportion:.5f}"]
        )


def render_defects(table: dict[int, DefectRow]) -> str:
    cols = _defect_columns(table)
    rows = [["c"] + [f"γ={g}" for g in cols] + ["total", "population", "proportion"]]
    for c, row in table.items():
        rows.append(
            [str(c)]
            + [str(row.by_crosscap[g]) if g in row.by_crosscap else "" for g in cols]
            + [str(row.total), str(row.population), f"{row.proportion:.5f}"]
        )
    return _aligned(rows)


def write_text(path: str | Path, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)

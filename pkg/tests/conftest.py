import csv
import os
import random
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from stategenus.census import load_fixture, process_batch
from stategenus.codec import GaussCode

DATA = Path(__file__).parent / "data"

settings.register_profile(
    "default", max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

TREFOIL = "[[1,2,3,1,2,3]]"
FIGURE8 = "[[1,2,3,1,4,3,2,4]]"
HOPF = "[[1,2],[1,2]]"
WHITEHEAD = "[[1,2,3,4,2,5],[3,5,1,4]]"
FIVE_TWO = "[[1,2,3,1,4,5,2,3,5,4]]"
EIGHT_18 = "[[1,2,3,4,5,6,2,7,4,8,6,1,7,3,8,5]]"


def read_golden(name):
    with open(DATA / name, newline="", encoding="utf-8") as fh:
        return list(csv.DictReader(fh))


def random_transform(g: GaussCode, rng: random.Random) -> GaussCode:
    """Rotate and maybe reverse every component, shuffle components, relabel."""
    comps = []
    for comp in g.components:
        k = rng.randrange(len(comp))
        comp = comp[k:] + comp[:k]
        if rng.random() < 0.5:
            comp = comp[::-1]
        comps.append(comp)
    rng.shuffle(comps)
    labels = g.labels
    image = rng.sample(range(1, 3 * len(labels) + 1), len(labels))
    mapping = dict(zip(labels, image))
    return GaussCode(tuple(tuple(mapping[x] for x in comp) for comp in comps))


@pytest.fixture(scope="session")
def knots():
    return load_fixture("knots")


@pytest.fixture(scope="session")
def links():
    return load_fixture("links")


@pytest.fixture(scope="session")
def small_census(knots, links):
    """Every bundled knot and link with c <= 10."""
    return [r for r in list(knots) + list(links) if r.gauss.crossing_count <= 10]


@pytest.fixture(scope="session")
def knot_results(knots):
    return process_batch(knots)


@pytest.fixture(scope="session")
def link_results(links):
    return process_batch(links)


# -- acceptance reporting: one line per criterion at the end of the run


@pytest.fixture
def acceptance(request):
    lines = request.config.__dict__.setdefault("_acceptance_lines", {})

    def record(number, title, ok, detail=""):
        lines[number] = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}" + (
            f" ({detail})" if detail else ""
        )

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.__dict__.get("_acceptance_lines")
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(lines):
        terminalreporter.write_line(lines[n])

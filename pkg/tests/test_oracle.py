import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from stategenus.codec import parse_gauss
from stategenus.engine import minimal_genus_states
from stategenus.invariants import compute_invariants
from stategenus.oracle import (
    ORIENTED,
    UNORIENTED,
    OracleBoundError,
    brute_force_invariants,
    brute_force_max_circles,
    count_circles,
    optimal_states,
    trace_state,
)
from stategenus.smoothing import canonical_circle

from conftest import EIGHT_18, FIGURE8, HOPF, TREFOIL, WHITEHEAD, random_transform


def canon(x):
    return tuple(sorted(canonical_circle(c) for c in x))


def all_of(g, choice):
    return {x: choice for x in g.labels}


def test_trefoil_seifert_state():
    g = parse_gauss(TREFOIL)
    assert count_circles(g, all_of(g, ORIENTED)) == 2
    assert count_circles(g, all_of(g, UNORIENTED)) == 3


def test_single_crossing():
    g = parse_gauss("[[1,1]]")
    a, b = count_circles(g, {1: ORIENTED}), count_circles(g, {1: UNORIENTED})
    assert {a, b} == {1, 2}


def test_bool_assignments_accepted():
    g = parse_gauss(TREFOIL)
    assert count_circles(g, {1: True, 2: True, 3: True}) == 2
    with pytest.raises(ValueError):
        count_circles(g, {1: "sideways", 2: ORIENTED, 3: ORIENTED})


@pytest.mark.parametrize("code, best", [(TREFOIL, 3), (HOPF, 2), (FIGURE8, 3), (EIGHT_18, 5)])
def test_max_circles(code, best):
    assert brute_force_max_circles(parse_gauss(code))[0] == best


def test_maximizers_listed():
    best, winners = brute_force_max_circles(parse_gauss(TREFOIL))
    assert best == 3 and winners == [{1: UNORIENTED, 2: UNORIENTED, 3: UNORIENTED}]


def test_adequate_only():
    g = parse_gauss(EIGHT_18)
    assert brute_force_max_circles(g, adequate_only=True)[0] == brute_force_max_circles(g)[0]


def test_invariants():
    rep = brute_force_invariants(parse_gauss(TREFOIL))
    assert (rep.unoriented_genus, rep.crosscap) == (1, 1)
    rep = brute_force_invariants(parse_gauss(WHITEHEAD))
    assert (rep.unoriented_genus, rep.crosscap) == (2, 2)
    rep = brute_force_invariants(parse_gauss(HOPF))
    assert (rep.unoriented_genus, rep.crosscap) == (1, 2)


def test_bound():
    with pytest.raises(OracleBoundError):
        brute_force_max_circles(parse_gauss(EIGHT_18), bound=7)


def test_engine_best_state_is_a_real_state():
    g = parse_gauss(EIGHT_18)
    best = minimal_genus_states(g).best
    assert canon(best) in {canon(x) for x in optimal_states(g)}


def test_engine_matches_oracle_small(small_census):
    for rec in small_census:
        if rec.gauss.crossing_count > 8:
            continue
        a, b = compute_invariants(rec.gauss), brute_force_invariants(rec.gauss)
        assert (a.circle_count, a.unoriented_genus, a.crosscap) == (
            b.circle_count,
            b.unoriented_genus,
            b.crosscap,
        ), rec.name


@given(data=st.data())
def test_flip_changes_count_by_one(data, knots):
    rec = data.draw(st.sampled_from([r for r in knots if r.gauss.crossing_count <= 12]))
    g = rec.gauss
    a = {x: data.draw(st.sampled_from([ORIENTED, UNORIENTED])) for x in g.labels}
    x = data.draw(st.sampled_from(g.labels))
    b = dict(a)
    b[x] = UNORIENTED if a[x] == ORIENTED else ORIENTED
    na, nb = count_circles(g, a), count_circles(g, b)
    assert 1 <= na <= g.crossing_count + 1
    assert abs(na - nb) == 1


@given(data=st.data())
def test_count_multiset_symmetric(data, links):
    rec = data.draw(st.sampled_from([r for r in links if r.gauss.crossing_count <= 7]))
    h = random_transform(rec.gauss, random.Random(data.draw(st.integers(0, 10**9))))

    def histogram(g):
        from collections import Counter
        from itertools import product

        labs = g.labels
        return Counter(
            count_circles(g, dict(zip(labs, bits))) for bits in product((True, False), repeat=len(labs))
        )

    assert histogram(rec.gauss) == histogram(h)


def test_traced_circles_conserve_labels():
    g = parse_gauss(WHITEHEAD)
    x = trace_state(g, all_of(g, ORIENTED))
    x.check()

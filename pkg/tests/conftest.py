"""Shared oracles and strategies.

The oracles here do not import the solver modules: set cover and vertex
cover by exhaustive enumeration, continuous cover over a hand-built
candidate set, and LP values from scipy.
"""

import json
from fractions import Fraction
from itertools import combinations
from pathlib import Path

import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st
from scipy.optimize import linprog

from segcover.geometry import Point, Segment

DATA = Path(__file__).parent / "data"
EXPECTED = json.loads((DATA / "expected.json").read_text())

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


# oracles

def inside(t, p):
    return t[0] <= p[0] <= t[0] + 1 and t[1] <= p[1] <= t[1] + 1


def hits(t, s):
    return inside(t, s.l) or inside(t, s.r)


def brute_setcover(n, sets):
    """Smallest k such that some k sets cover range(n); None if impossible."""
    uniq = {frozenset(s) for s in sets}
    # a set contained in another is never needed
    sets = sorted((a for a in uniq if not any(a < b for b in uniq)), key=sorted)
    full = frozenset(range(n))
    for k in range(len(sets) + 1):
        for combo in combinations(sets, k):
            if frozenset().union(*combo) >= full:
                return k
    return None


def candidate_squares(segments):
    pts = [p for s in segments for p in (s.l, s.r)]
    xs = sorted({p[0] for p in pts})
    ys = sorted({p[1] for p in pts})
    return [(x, y - 1) for x in xs for y in ys]


def brute_continuous(segments):
    cands = candidate_squares(segments)
    return brute_setcover(len(segments), [[i for i, s in enumerate(segments) if hits(t, s)] for t in cands])


def brute_discrete(segments, squares):
    return brute_setcover(len(segments), [[i for i, s in enumerate(segments) if hits(t, s)] for t in squares])


def brute_vertex_cover(n, edges):
    for k in range(n + 1):
        for c in combinations(range(n), k):
            cs = set(c)
            if all(u in cs or v in cs for u, v in edges):
                return k
    return None


def highs_covering_value(n_vars, rows):
    if not rows:
        return 0.0
    A = np.zeros((len(rows), n_vars))
    for i, r in enumerate(rows):
        A[i, list(r)] = 1
    res = linprog(np.ones(n_vars), A_ub=-A, b_ub=-np.ones(len(rows)), bounds=[(0, 1)] * n_vars, method="highs")
    assert res.status == 0
    return res.fun


# strategies

quarter = st.integers(-12, 24).map(lambda v: Fraction(v, 4))
tenth = st.integers(0, 40).map(lambda v: Fraction(v, 10))


@st.composite
def h_unit(draw, coord=quarter):
    x, y = draw(coord), draw(coord)
    return Segment(Point(x, y), Point(x + 1, y))


@st.composite
def v_unit(draw, coord=quarter):
    x, y = draw(coord), draw(coord)
    return Segment(Point(x, y), Point(x, y + 1))


@st.composite
def arb_segment(draw, coord=quarter):
    p = Point(draw(coord), draw(coord))
    d = st.integers(-8, 8).map(lambda v: Fraction(v, 4))
    q = Point(p.x + draw(d), p.y + draw(d))
    if q == p:
        q = Point(p.x + 1, p.y)
    return Segment(p, q)


def hv1_lists(min_size=0, max_size=8):
    return st.lists(st.one_of(h_unit(), v_unit()), min_size=min_size, max_size=max_size)


def arb_lists(min_size=0, max_size=8):
    return st.lists(arb_segment(), min_size=min_size, max_size=max_size)


@st.composite
def strip_segments(draw, unit=True, max_size=8):
    """Horizontal segments inside the strip 0 <= y <= 1."""
    n = draw(st.integers(0, max_size))
    out = []
    for _ in range(n):
        x = draw(quarter)
        y = draw(st.integers(0, 4).map(lambda v: Fraction(v, 4)))
        length = 1 if unit else draw(st.integers(1, 12).map(lambda v: Fraction(v, 4)))
        out.append(Segment(Point(x, y), Point(x + length, y)))
    return out


@st.composite
def discrete_instances(draw, max_n=6, max_m=7):
    segs = draw(arb_lists(1, max_n))
    squares = set()
    for s in segs:
        p = draw(st.sampled_from([s.l, s.r]))
        dx = draw(st.integers(0, 4).map(lambda v: Fraction(v, 4)))
        dy = draw(st.integers(0, 4).map(lambda v: Fraction(v, 4)))
        squares.add((p.x - dx, p.y - dy))
    extra = draw(st.lists(st.tuples(quarter, quarter), max_size=max(0, max_m - len(squares))))
    squares.update(extra)
    return segs, sorted(squares)


@pytest.fixture
def expected():
    return EXPECTED


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for num in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[num])

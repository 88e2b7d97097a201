from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import linprog

from conftest import brute_discrete, discrete_instances
from segcover.errors import StructuralError
from segcover.geometry import UnitSquare
from segcover.lp import INFEASIBLE, LinearProgram, covering_lp, solve_lp, to_lp_text

coef = st.integers(-3, 3)


@st.composite
def programs(draw):
    n = draw(st.integers(1, 6))
    m = draw(st.integers(0, 6))
    c = draw(st.lists(coef, min_size=n, max_size=n))
    A = draw(st.lists(st.lists(coef, min_size=n, max_size=n), min_size=m, max_size=m))
    b = draw(st.lists(st.integers(-3, 3), min_size=m, max_size=m))
    return LinearProgram(c, A, b)


def scipy_value(lp):
    kw = {}
    if lp.n_rows:
        kw = {"A_ub": -np.array(lp.A, dtype=float), "b_ub": -np.array(lp.b, dtype=float)}
    res = linprog(np.array(lp.c, dtype=float), bounds=[(0, 1)] * lp.n_vars, method="highs", **kw)
    return None if res.status == 2 else res.fun


class TestExamples:
    def test_single_bound(self):
        sol = solve_lp(LinearProgram([1], [[1]], [1]))
        assert sol.optimal and sol.x == [1] and sol.objective == 1

    def test_two_vars(self):
        sol = solve_lp(covering_lp(2, [[0, 1]]))
        assert sol.objective == 1
        assert sorted(sol.x) == [0, 1]

    def test_infeasible_against_box(self):
        sol = solve_lp(LinearProgram([1], [[1], [1]], [1, 2]))
        assert sol.status == INFEASIBLE and not sol.optimal

    def test_fractional_triangle(self):
        # odd cycle cover: every pair of three variables sums to >= 1
        sol = solve_lp(covering_lp(3, [[0, 1], [1, 2], [0, 2]]))
        assert sol.objective == F(3, 2)
        assert all(isinstance(v, F) for v in sol.x)

    def test_no_rows(self):
        sol = solve_lp(LinearProgram([1, -1], [], []))
        assert sol.objective == -1 and sol.x == [0, 1]

    def test_redundant_rows(self):
        sol = solve_lp(covering_lp(2, [[0, 1], [0, 1], [0, 1]]))
        assert sol.objective == 1

    def test_shape_errors(self):
        with pytest.raises(StructuralError):
            solve_lp(LinearProgram([1, 1], [[1]], [1]))
        with pytest.raises(StructuralError):
            solve_lp(LinearProgram([1], [[1]], [1, 1]))
        with pytest.raises(ValueError):
            solve_lp(covering_lp(1, [[0]]), method="simplex")

    def test_highs_path(self):
        sol = solve_lp(covering_lp(3, [[0, 1], [1, 2], [0, 2]]), method="highs")
        assert sol.objective == pytest.approx(1.5)
        assert solve_lp(LinearProgram([1], [[1], [1]], [1, 2]), method="highs").status == INFEASIBLE

    def test_lp_text(self):
        lp = covering_lp(2, [[0, 1]], var_labels=["x(a)", "2b"], row_labels=["seg 0"])
        text = to_lp_text(lp)
        assert "Minimize\n obj: 1 x_a_ + 1 v2b\n" in text
        assert " seg_0: 1 x_a_ + 1 v2b >= 1\n" in text
        assert text.endswith("End\n")


@settings(max_examples=300)
@given(programs())
def test_matches_highs(lp):
    sol = solve_lp(lp)
    ref = scipy_value(lp)
    if ref is None:
        assert sol.status == INFEASIBLE
        return
    assert sol.optimal
    assert lp.is_feasible(sol.x)
    assert float(sol.objective) == pytest.approx(ref, abs=1e-9)


@given(programs(), st.randoms(use_true_random=False))
def test_permutation_invariant(lp, rnd):
    perm = list(range(lp.n_vars))
    rnd.shuffle(perm)
    shuffled = LinearProgram([lp.c[j] for j in perm], [[row[j] for j in perm] for row in lp.A], list(lp.b))
    a, b = solve_lp(lp), solve_lp(shuffled)
    assert a.status == b.status
    if a.optimal:
        assert abs(a.objective - b.objective) <= F(1, 10**9)


@given(programs())
def test_deterministic(lp):
    a, b = solve_lp(lp), solve_lp(lp)
    assert a.x == b.x


@given(discrete_instances())
def test_relaxation_below_integer_optimum(case):
    segs, squares = case
    sq = [UnitSquare(*t) for t in squares]
    rows = [[k for k, t in enumerate(sq) if t.contains(s.l) or t.contains(s.r)] for s in segs]
    assert solve_lp(covering_lp(len(sq), rows)).objective <= brute_discrete(segs, squares)

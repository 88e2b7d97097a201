from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import DATA, EXPECTED, arb_lists, brute_continuous, brute_discrete, brute_setcover, discrete_instances, hv1_lists, highs_covering_value
from segcover.errors import Infeasible, TooLarge
from segcover.exact import SetCoverInstance, exact_continuous, exact_discrete, exact_setcover
from segcover.geometry import Segment, UnitSquare, verify_cover
from segcover.instance_io import read_instance
from segcover.setcover import setcover_value
from segcover.sweep_cover import arb_six_approx, hv1_three_approx

CORPUS = sorted((DATA / "corpus").glob("*.seg"))


def seg(x1, y1, x2, y2):
    return Segment.of(x1, y1, x2, y2)


class TestSetCover:
    def test_single(self):
        assert exact_setcover(SetCoverInstance(1, [{0}])) == [0]

    def test_disjoint_singletons(self):
        assert len(exact_setcover(SetCoverInstance(3, [{0}, {1}, {2}]))) == 3

    def test_overlapping(self):
        assert exact_setcover(SetCoverInstance(3, [{0, 1}, {1, 2}, {2}])) == [0, 1]

    def test_empty_universe(self):
        assert exact_setcover(SetCoverInstance(0, [])) == []

    def test_labels(self):
        inst = SetCoverInstance(2, [{0}, {0, 1}], labels=["a", "b"])
        assert exact_setcover(inst) == ["b"]

    def test_infeasible_names_element(self):
        with pytest.raises(Infeasible) as err:
            exact_setcover(SetCoverInstance(3, [{0}, {2}]))
        assert err.value.element == 1

    def test_budget(self):
        # circulant triples: the root bound is not tight, so one node cannot finish
        n = 12
        sets = [{i, (i + 1) % n, (i + 3) % n} for i in range(n)]
        with pytest.raises(TooLarge):
            exact_setcover(SetCoverInstance(n, sets), budget=1)
        assert len(exact_setcover(SetCoverInstance(n, sets))) == brute_setcover(n, sets)

    def test_cap(self):
        inst = SetCoverInstance(3, [{0}, {1}, {2}])
        with pytest.raises(ValueError):
            exact_setcover(inst, cap=2)
        assert len(exact_setcover(inst, cap=3)) == 3

    @given(st.integers(1, 7).flatmap(lambda n: st.tuples(
        st.just(n), st.lists(st.sets(st.integers(0, n - 1), min_size=1), min_size=1, max_size=9))))
    def test_matches_enumeration(self, case):
        n, sets = case
        expected = brute_setcover(n, sets)
        inst = SetCoverInstance(n, sets)
        if expected is None:
            with pytest.raises(Infeasible):
                exact_setcover(inst)
            return
        chosen = exact_setcover(inst)
        assert len(chosen) == expected == setcover_value(inst)
        assert set().union(*(sets[k] for k in chosen)) >= set(range(n))


class TestContinuous:
    def test_one(self):
        assert exact_continuous([seg(0, 0, 1, 0)]).size == 1

    def test_three_independent(self):
        segs = [seg(0, 0, 1, 0), seg(0, 5, 1, 5), seg(0, 10, 1, 10)]
        assert exact_continuous(segs).size == 3

    def test_empty(self):
        assert exact_continuous([]).size == 0

    @given(arb_lists(1, 6))
    def test_matches_enumeration(self, segs):
        c = exact_continuous(segs)
        assert verify_cover(segs, c).feasible
        assert c.size == brute_continuous(segs)

    @given(hv1_lists(1, 7))
    def test_between_lb_and_approximations(self, segs):
        opt = exact_continuous(segs).size
        c = hv1_three_approx(segs)
        assert len(c.lb) <= opt <= c.size
        c = arb_six_approx(segs)
        assert len(c.lb) <= opt <= c.size


class TestDiscrete:
    def test_one_square_covers_all(self):
        segs = [seg(0, 0, 1, 0), seg(F(1, 2), 0, 3, 0)]
        assert exact_discrete(segs, [UnitSquare.of(0, 0), UnitSquare.of(5, 5)]).size == 1

    def test_distinct_squares(self):
        segs = [seg(3 * i, 0, 3 * i + 1, 0) for i in range(4)]
        squares = [UnitSquare.of(3 * i, 0) for i in range(4)]
        assert exact_discrete(segs, squares).size == 4

    def test_infeasible_names_segment(self):
        with pytest.raises(Infeasible, match="segment 1"):
            exact_discrete([seg(0, 0, 1, 0), seg(9, 9, 10, 9)], [UnitSquare.of(0, 0)])

    @given(discrete_instances())
    def test_matches_enumeration_and_lp(self, case):
        segs, squares = case
        sq = [UnitSquare(*t) for t in squares]
        c = exact_discrete(segs, sq)
        assert verify_cover(segs, c).feasible
        assert c.size == brute_discrete(segs, squares)
        rows = [[k for k, t in enumerate(sq) if t.contains(s.l) or t.contains(s.r)] for s in segs]
        assert c.size >= highs_covering_value(len(sq), rows) - 1e-6


@pytest.mark.parametrize("path", CORPUS, ids=lambda p: p.name)
def test_corpus_optimum(path):
    inst = read_instance(path)
    if inst.mode == "discrete":
        c = exact_discrete(inst.segments, inst.squares)
    else:
        c = exact_continuous(inst.segments)
    assert verify_cover(inst, c).feasible
    assert c.size == EXPECTED["instances"][path.name]

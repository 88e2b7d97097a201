"""Exact optimum at desk scale, used to certify approximation factors."""

from .errors import Infeasible
from .geometry import Cover, covers, first_witnesses
from .ptas import enumerate_candidates
from .setcover import DEFAULT_BUDGET, SetCoverInstance, exact_setcover

__all__ = ["SetCoverInstance", "exact_setcover", "exact_continuous", "exact_discrete", "coverage_sets"]


def coverage_sets(segments, squares):
    return [[i for i, s in enumerate(segments) if covers(t, s)] for t in squares]


def exact_continuous(segments, budget=DEFAULT_BUDGET) -> Cover:
    """Minimum number of freely placed unit squares covering ``segments``."""
    cands = enumerate_candidates([p for s in segments for p in s.endpoints])
    chosen = exact_setcover(SetCoverInstance(len(segments), coverage_sets(segments, cands)), budget)
    squares = [cands[c] for c in chosen]
    return Cover(squares, first_witnesses(segments, squares), "exact")


def exact_discrete(segments, squares, budget=DEFAULT_BUDGET) -> Cover:
    """Minimum subset of the given ``squares`` covering ``segments``."""
    squares = list(squares)
    inst = SetCoverInstance(len(segments), coverage_sets(segments, squares))
    try:
        chosen = exact_setcover(inst, budget)
    except Infeasible as exc:
        raise Infeasible(f"segment {exc.element} is covered by no given square", exc.element) from None
    picked = [squares[c] for c in chosen]
    return Cover(picked, first_witnesses(segments, picked), "exact")

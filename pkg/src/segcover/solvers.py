"""Name -> solver dispatch shared by the CLI and the demos."""

from fractions import Fraction

from .discrete import DiscreteInstance, run_pipeline
from .errors import InvalidInstance
from .exact import exact_continuous, exact_discrete
from .instance_io import DISCRETE, class_accepts
from .ptas import ptas_cover
from .setcover import DEFAULT_BUDGET
from .strip_greedy import StripInstance, greedy_strip_cover, h1_two_approx, strip_arb_three_approx
from .sweep_cover import arb_eight_approx, arb_six_approx, hv1_four_approx, hv1_three_approx

# name -> (instance class the algorithm needs, approximation factor or None for k-dependent)
ALGORITHMS = {
    "greedy-strip": ("h1us", Fraction(1)),
    "h1-2approx": ("h1", Fraction(2)),
    "strip-arb-3approx": ("arb", Fraction(3)),
    "hv1-4approx": ("hv1", Fraction(4)),
    "hv1-3approx": ("hv1", Fraction(3)),
    "hv1-ptas": ("hv1", None),
    "arb-8approx": ("arb", Fraction(8)),
    "arb-6approx": ("arb", Fraction(6)),
    "discrete-16": ("discrete", Fraction(16)),
    "exact": (None, Fraction(1)),
}


def factor(alg, k=None) -> Fraction:
    if alg == "hv1-ptas":
        return (1 + Fraction(1, k)) ** 2
    return ALGORITHMS[alg][1]


def _strip(segments):
    return StripInstance(min((s.l.y for s in segments), default=0), segments)


def run(inst, alg, k=None, budget=DEFAULT_BUDGET, jobs=1):
    """Run ``alg`` on ``inst``; returns (cover, pipeline result or None).

    Raises InvalidInstance when the instance class does not fit.
    """
    if alg not in ALGORITHMS:
        raise InvalidInstance(f"unknown algorithm {alg!r}")
    need = ALGORITHMS[alg][0]
    if need is not None and not class_accepts(need, inst.cls):
        raise InvalidInstance(f"{alg} needs a {need} instance, got {inst.cls}")
    segs = inst.segments
    if alg == "greedy-strip":
        return greedy_strip_cover(_strip(segs)), None
    if alg == "h1-2approx":
        return h1_two_approx(segs), None
    if alg == "strip-arb-3approx":
        return strip_arb_three_approx(_strip(segs)), None
    if alg == "hv1-4approx":
        return hv1_four_approx(segs), None
    if alg == "hv1-3approx":
        return hv1_three_approx(segs), None
    if alg == "hv1-ptas":
        if k is None:
            raise InvalidInstance("hv1-ptas needs k")
        return ptas_cover(segs, k, jobs=jobs), None
    if alg == "arb-8approx":
        return arb_eight_approx(segs), None
    if alg == "arb-6approx":
        return arb_six_approx(segs), None
    if alg == "discrete-16":
        res = run_pipeline(DiscreteInstance(segs, inst.squares))
        return res.cover, res
    if inst.mode == DISCRETE:
        return exact_discrete(segs, inst.squares, budget), None
    return exact_continuous(segs, budget), None

"""Covering line segments with axis-parallel unit squares."""

from .discrete import DiscreteInstance, dcsus_16_approx, rpc_cover, run_pipeline
from .errors import Infeasible, InvalidInstance, ParseError, SegCoverError, StructuralError, TooLarge
from .exact import exact_continuous, exact_discrete
from .geometry import (
    Cover,
    Point,
    Segment,
    UnitSquare,
    covers,
    is_independent_set,
    jointly_coverable,
    verify_cover,
)
from .instance_io import (
    GraphInput,
    Instance,
    gen_random,
    gen_strip_arb,
    parse_instance,
    read_instance,
    serialize_instance,
    vertex_cover_reduction,
    write_instance,
)
from .lp import LinearProgram, solve_lp
from .ptas import ptas_cover
from .setcover import SetCoverInstance, exact_setcover
from .strip_greedy import StripInstance, greedy_strip_cover, h1_two_approx, strip_arb_three_approx
from .sweep_cover import arb_eight_approx, arb_six_approx, hv1_four_approx, hv1_three_approx

__version__ = "0.1.0"

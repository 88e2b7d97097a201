"""Covering horizontal segments strip by strip.

* :func:`greedy_strip_cover` - optimal for unit horizontal segments inside a
  unit-height strip (interval-point-cover greedy on right endpoints).
* :func:`h1_two_approx` - unit horizontal segments anywhere: cut the plane
  into unit strips and run the greedy in each.
* :func:`strip_arb_three_approx` - arbitrary-length horizontal segments in a
  unit strip.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import floor

from .errors import InvalidInstance
from .geometry import Cover, UnitSquare, scalar, scaled_coords
from .rangesearch import PointIndex


@dataclass
class StripInstance:
    y0: Fraction
    segments: list

    def __post_init__(self):
        self.y0 = scalar(self.y0)


def _check_strip(inst, unit):
    """Validate on integer images; returns (den, coords, scaled y0)."""
    den, coords = scaled_coords(inst.segments, extra=(inst.y0,))
    y0 = inst.y0.numerator * (den // inst.y0.denominator)
    y1 = y0 + den
    for i, (lx, ly, rx, ry) in enumerate(coords):
        if ly != ry:
            raise InvalidInstance(f"segment {i} is not horizontal")
        if unit and rx - lx != den:
            raise InvalidInstance(f"segment {i} is not of unit length")
        if not y0 <= ly <= y1:
            raise InvalidInstance(f"segment {i} lies outside the strip [{inst.y0}, {inst.y0 + 1}]")
    return den, coords


def _greedy(coords, den, order, y0, squares, witness):
    """Strip greedy on integer images; appends Fraction squares."""
    last = None
    for i in order:
        lx, _, rx, _ = coords[i]
        if last is not None and (last <= lx <= last + den or last <= rx <= last + den):
            witness[i] = len(squares) - 1
            continue
        last = rx
        squares.append(UnitSquare(Fraction(rx, den), y0))
        witness[i] = len(squares) - 1


def right_endpoint_order(segments, idx, scaled=None):
    """``idx`` sorted by (r.x, r.y, index)."""
    coords = (scaled or scaled_coords(segments))[1]
    return sorted(idx, key=lambda i: (coords[i][2], coords[i][3], i))


def greedy_strip_cover(inst: StripInstance) -> Cover:
    """Minimum cover of unit horizontal segments inside one unit strip.

    Segments are swept by right endpoint; an uncovered segment gets a square
    whose left edge sits on its right endpoint.
    """
    den, coords = _check_strip(inst, unit=True)
    order = right_endpoint_order(inst.segments, range(len(coords)), (den, coords))
    squares, witness = [], [-1] * len(coords)
    _greedy(coords, den, order, inst.y0, squares, witness)
    return Cover(squares, witness, "greedy-strip")


def strip_index(y, ymin) -> int:
    return floor(y - ymin)


def h1_two_approx(segments) -> Cover:
    """2-approximation for unit horizontal segments in the plane.

    Strips are ``[ymin+i, ymin+i+1)`` anchored at the lowest segment, so a
    segment at exactly ``ymin+1`` opens the next strip.  Squares are
    returned sorted by (x, y).
    """
    for i, s in enumerate(segments):
        if not s.is_horizontal:
            raise InvalidInstance(f"segment {i} is not horizontal")
        if not s.unit_length:
            raise InvalidInstance(f"segment {i} is not of unit length")
    if not segments:
        return Cover([], [], "h1-2approx")
    ys = [s.l.y for s in segments]
    ymin = min(ys)
    strips = {}
    for i, y in enumerate(ys):
        strips.setdefault(strip_index(y, ymin), []).append(i)

    scaled = scaled_coords(segments)
    squares, witness = [], [-1] * len(segments)
    for k in sorted(strips):
        order = right_endpoint_order(segments, strips[k], scaled)
        _greedy(scaled[1], scaled[0], order, ymin + k, squares, witness)
    return _canonical(segments, squares, witness, "h1-2approx")


def _canonical(segments, squares, witness, name):
    order = sorted(range(len(squares)), key=lambda k: squares[k])
    new_index = {old: new for new, old in enumerate(order)}
    return Cover([squares[k] for k in order], [new_index[w] for w in witness], name)


def strip_arb_three_approx(inst: StripInstance) -> Cover:
    """3-approximation for horizontal segments of any length in a unit strip.

    Sweeping by left endpoint, each uncovered segment ``s`` contributes the
    square starting at ``l(s)`` plus the two squares tiling
    ``[r(s).x - 1, r(s).x + 1]`` across the strip.  The selected segments
    form an independent set, recorded in ``Cover.lb``.
    """
    scaled = _check_strip(inst, unit=False)
    segs = inst.segments
    y0 = inst.y0
    index = PointIndex(segs)
    lx = [c[0] for c in scaled[1]]
    order = sorted(range(len(segs)), key=lambda i: (lx[i], i))
    squares, witness, lb = [], [-1] * len(segs), []
    seen = {}
    for i in order:
        if i not in index:
            continue
        s = segs[i]
        lb.append(i)
        for t in (UnitSquare(s.l.x, y0), UnitSquare(s.r.x - 1, y0), UnitSquare(s.r.x, y0)):
            if t not in seen:
                seen[t] = len(squares)
                squares.append(t)
            for j in index.take_square(t):
                witness[j] = seen[t]
    return Cover(squares, witness, "strip-arb-3approx", lb)

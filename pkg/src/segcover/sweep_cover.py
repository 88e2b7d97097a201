"""Sweep-line approximations that grow a maximal independent set.

Every algorithm here keeps a lower-bound set ``LB`` of pairwise independent
segments.  Whenever an unflagged segment is selected, a fixed pattern of
unit squares around it is emitted and every segment with an endpoint in one
of those squares is flagged (and its endpoints deleted from the point
index).  The output size is at most ``c * |LB| <= c * OPT``.
"""

from fractions import Fraction

from .errors import InvalidInstance
from .geometry import Cover, UnitSquare, scaled_coords
from .rangesearch import PointIndex
from .strip_greedy import h1_two_approx


def _check_hv1(segments, scaled=None):
    den, coords = scaled if scaled is not None else scaled_coords(segments)
    for i, (lx, ly, rx, ry) in enumerate(coords):
        if lx != rx and ly != ry:
            raise InvalidInstance(f"segment {i} is neither horizontal nor vertical")
        if abs(rx - lx) + abs(ry - ly) != den:
            raise InvalidInstance(f"segment {i} is not of unit length")


def _transpose_square(t):
    return UnitSquare(t.y, t.x)


def hv1_four_approx(segments) -> Cover:
    """Factor 4: independent 2-approximations for the horizontal and vertical parts."""
    _check_hv1(segments)
    hidx = [i for i, s in enumerate(segments) if s.is_horizontal]
    vidx = [i for i, s in enumerate(segments) if s.is_vertical]
    hcov = h1_two_approx([segments[i] for i in hidx])
    vcov = h1_two_approx([segments[i].transposed() for i in vidx])

    squares, pos = [], {}
    witness = [-1] * len(segments)
    parts = (
        (hidx, hcov, lambda t: t),
        (vidx, vcov, _transpose_square),
    )
    for idx, cov, back in parts:
        local = []
        for t in cov.squares:
            t = back(t)
            if t not in pos:
                pos[t] = len(squares)
                squares.append(t)
            local.append(pos[t])
        for i, w in zip(idx, cov.witness):
            witness[i] = local[w]
    return Cover(squares, witness, "hv1-4approx")


# Placement patterns: (anchor, dx, dy) puts a square with min corner at
# anchor + (dx, dy), anchor being "l" or "r".
HV1_HORIZONTAL = (("l", -1, -1), ("l", 0, -1), ("l", 1, -1))
HV1_VERTICAL = (("l", -1, -2), ("l", 0, -2))
EIGHT = tuple((a, dx, dy) for a in "lr" for dx, dy in ((-1, -1), (0, -1), (-1, 0), (0, 0)))
SIX = (("l", 0, -1), ("l", 0, 0)) + tuple(("r", dx, dy) for dx, dy in ((-1, -1), (0, -1), (-1, 0), (0, 0)))


def _hv1_pattern(s):
    return HV1_HORIZONTAL if s.is_horizontal else HV1_VERTICAL


def hv1_placement(s):
    """Squares emitted for a selected segment by the factor-3 sweep.

    Horizontal ``s`` at height b spanning [a, a+1]: three squares tiling
    ``[a-1, a+2] x [b-1, b]``.  Vertical ``s`` from (a, b) down to (a, b-1):
    two squares tiling ``[a-1, a+1] x [b-2, b-1]``.  Under a top-to-bottom
    sweep any later segment that shares a unit square with ``s`` has an
    endpoint in that region.
    """
    return [UnitSquare(getattr(s, a).x + dx, getattr(s, a).y + dy) for a, dx, dy in _hv1_pattern(s)]


def _sweep(segments, order, pattern, name, scaled=None):
    """Run the flag-and-place loop; ``pattern(i)`` gives segment i's placement."""
    den, coords = scaled if scaled is not None else scaled_coords(segments)
    index = PointIndex(segments, (den, coords))
    corners, seen, lb = [], {}, []
    witness = [-1] * len(segments)
    for i in order:
        if i not in index:
            continue
        lb.append(i)
        lx, ly, rx, ry = coords[i]
        for anchor, dx, dy in pattern(i):
            if anchor == "l":
                X, Y = lx + dx * den, ly + dy * den
            else:
                X, Y = rx + dx * den, ry + dy * den
            key = (X, Y)
            k = seen.get(key)
            if k is None:
                k = seen[key] = len(corners)
                corners.append(key)
            for j in index._query(X, Y, X + den, Y + den):
                index.delete(j)
                witness[j] = k
    squares = [UnitSquare(Fraction(X, den), Fraction(Y, den)) for X, Y in corners]
    return Cover(squares, witness, name, lb)


def hv1_three_approx(segments) -> Cover:
    """Factor-3 sweep for unit horizontal/vertical segments.

    Segments are taken top to bottom by r(.)-value (ties: r.x ascending, then
    input order).
    """
    scaled = scaled_coords(segments)
    _check_hv1(segments, scaled)
    coords = scaled[1]
    order = sorted(range(len(segments)), key=lambda i: (-coords[i][3], coords[i][2], i))
    # a segment is horizontal exactly when its endpoints share y
    horizontal = [c[1] == c[3] for c in coords]
    return _sweep(segments, order, lambda i: HV1_HORIZONTAL if horizontal[i] else HV1_VERTICAL,
                  "hv1-3approx", scaled)


def arb_eight_approx(segments) -> Cover:
    """Factor 8 for arbitrary segments: cover both 2x2 neighbourhoods of each
    selected segment, picking the lowest-index unflagged segment each time."""
    return _sweep(segments, range(len(segments)), lambda i: EIGHT, "arb-8approx")


def arb_six_approx(segments) -> Cover:
    """Factor 6: left-to-right sweep; only the right half of the left
    endpoint's 2x2 neighbourhood is needed because everything still
    unflagged lies to the right."""
    scaled = scaled_coords(segments)
    coords = scaled[1]
    order = sorted(range(len(segments)), key=lambda i: (coords[i][0], -coords[i][1], i))
    return _sweep(segments, order, lambda i: SIX, "arb-6approx", scaled)

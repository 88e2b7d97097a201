"""Exact-rational planar primitives and the covering predicates.

All coordinates are :class:`fractions.Fraction`.  A unit square is stored
by its min corner and is *closed*: a point on its boundary is inside.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import NamedTuple, Sequence

from .errors import InvalidInstance, StructuralError

HORIZONTAL = "horizontal"
VERTICAL = "vertical"
GENERAL = "general"


def scalar(v) -> Fraction:
    """Coerce ``v`` to an exact rational.

    Ints, Fractions and numeric strings (``"3/4"``, ``"0.25"``) are exact.
    Floats are converted with their exact binary value.
    """
    if isinstance(v, Fraction):
        return v
    if isinstance(v, bool):
        raise TypeError("bool is not a coordinate")
    return Fraction(v)


class Point(NamedTuple):
    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x, y) -> "Point":
        return cls(scalar(x), scalar(y))


class UnitSquare(NamedTuple):
    """Closed square ``[x, x+1] x [y, y+1]`` given by its min corner."""

    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x, y) -> "UnitSquare":
        return cls(scalar(x), scalar(y))

    @property
    def center(self) -> Point:
        return Point(self.x + Fraction(1, 2), self.y + Fraction(1, 2))

    def contains(self, p) -> bool:
        return self.x <= p[0] <= self.x + 1 and self.y <= p[1] <= self.y + 1


class Segment:
    """A non-degenerate segment with endpoints normalized on construction.

    ``l``/``r`` are the left/right endpoints; for a vertical segment ``l`` is
    the upper endpoint and ``r`` the lower one.
    """

    __slots__ = ("l", "r", "kind")

    def __init__(self, p, q):
        p = p if isinstance(p, Point) else Point.of(*p)
        q = q if isinstance(q, Point) else Point.of(*q)
        if p == q:
            raise InvalidInstance(f"degenerate segment at {_fmt_point(p)}")
        if p.x == q.x:
            self.kind = VERTICAL
            self.l, self.r = (p, q) if p.y > q.y else (q, p)
        else:
            self.kind = HORIZONTAL if p.y == q.y else GENERAL
            self.l, self.r = (p, q) if p.x < q.x else (q, p)

    @classmethod
    def of(cls, x1, y1, x2, y2) -> "Segment":
        return cls(Point.of(x1, y1), Point.of(x2, y2))

    @property
    def endpoints(self):
        return (self.l, self.r)

    @property
    def is_horizontal(self) -> bool:
        return self.kind == HORIZONTAL

    @property
    def is_vertical(self) -> bool:
        return self.kind == VERTICAL

    @property
    def unit_length(self) -> bool:
        dx = self.r.x - self.l.x
        dy = self.r.y - self.l.y
        return dx * dx + dy * dy == 1

    def transposed(self) -> "Segment":
        return Segment(Point(self.l.y, self.l.x), Point(self.r.y, self.r.x))

    def translated(self, dx, dy) -> "Segment":
        return Segment(Point(self.l.x + dx, self.l.y + dy), Point(self.r.x + dx, self.r.y + dy))

    def __eq__(self, other):
        if not isinstance(other, Segment):
            return NotImplemented
        return self.l == other.l and self.r == other.r

    def __hash__(self):
        return hash((self.l, self.r))

    def __repr__(self):
        return f"Segment({_fmt_point(self.l)}, {_fmt_point(self.r)})"


def scaled_coords(segments, extra=()):
    """Common denominator D and integer (lx, ly, rx, ry) = D * coordinates.

    ``extra`` values take part in choosing D.  Integer arithmetic on these is
    exact and avoids Fraction overhead in sweeps over large inputs.
    """
    dens = {v.denominator for s in segments for v in (s.l.x, s.l.y, s.r.x, s.r.y)}
    dens.update(Fraction(v).denominator for v in extra)
    den = lcm(*dens) if dens else 1
    out = []
    for s in segments:
        out.append((
            s.l.x.numerator * (den // s.l.x.denominator),
            s.l.y.numerator * (den // s.l.y.denominator),
            s.r.x.numerator * (den // s.r.x.denominator),
            s.r.y.numerator * (den // s.r.y.denominator),
        ))
    return den, out


def _fmt_point(p) -> str:
    return f"({p[0]}, {p[1]})"


@dataclass
class Cover:
    """Chosen squares plus, for each segment index, the index of a covering square.

    ``lb`` holds the segment indices a sweep algorithm put in its lower-bound
    set (empty for algorithms that do not build one).
    """

    squares: list
    witness: list
    algorithm: str = ""
    lb: list = field(default_factory=list)

    def __len__(self):
        return len(self.squares)

    @property
    def size(self) -> int:
        return len(self.squares)


@dataclass
class VerifyReport:
    feasible: bool
    size: int
    uncovered: list


def covers(t: UnitSquare, s: Segment) -> bool:
    x, y = t
    x1 = x + 1
    y1 = y + 1
    l, r = s.l, s.r
    return (x <= l.x <= x1 and y <= l.y <= y1) or (x <= r.x <= x1 and y <= r.y <= y1)


def linf(a, b) -> Fraction:
    return max(abs(a[0] - b[0]), abs(a[1] - b[1]))


def jointly_coverable(s1: Segment, s2: Segment) -> bool:
    """True iff one unit square contains an endpoint of each segment."""
    return any(linf(a, b) <= 1 for a in s1.endpoints for b in s2.endpoints)


def is_independent_set(segments: Sequence[Segment]) -> bool:
    return not any(jointly_coverable(a, b) for a, b in combinations(segments, 2))


def two_square(center) -> list:
    """The four unit squares tiling the 2x2 square centred at ``center``."""
    cx, cy = center
    return [
        UnitSquare(cx - 1, cy - 1),
        UnitSquare(cx, cy - 1),
        UnitSquare(cx - 1, cy),
        UnitSquare(cx, cy),
    ]


def right_half_two_square(center) -> list:
    """The two unit squares tiling the right half of the 2x2 square at ``center``."""
    cx, cy = center
    return [UnitSquare(cx, cy - 1), UnitSquare(cx, cy)]


def first_witnesses(segments, squares) -> list:
    """Index of the first square covering each segment, -1 when none does."""
    out = []
    for s in segments:
        for k, t in enumerate(squares):
            if covers(t, s):
                out.append(k)
                break
        else:
            out.append(-1)
    return out


def make_cover(segments, squares, algorithm="", lb=()) -> Cover:
    """Build a Cover from a square list, deduplicating while keeping order."""
    seen = {}
    for t in squares:
        if t not in seen:
            seen[t] = len(seen)
    uniq = list(seen)
    return Cover(uniq, first_witnesses(segments, uniq), algorithm, list(lb))


def verify_cover(segments, cover: Cover) -> VerifyReport:
    """Check that every segment is covered by its witnessed square.

    ``segments`` may be a list of segments or anything with a ``segments``
    attribute (an Instance).
    """
    segments = getattr(segments, "segments", segments)
    n = len(segments)
    if len(cover.witness) != n:
        raise StructuralError(f"witness has {len(cover.witness)} entries for {n} segments")
    m = len(cover.squares)
    if len(set(cover.squares)) != m:
        raise StructuralError("cover lists a square twice")
    uncovered = []
    for i, (s, k) in enumerate(zip(segments, cover.witness)):
        if not 0 <= k < m:
            if k == -1:
                uncovered.append(i)
                continue
            raise StructuralError(f"segment {i} witnesses square {k}, but the cover has {m}")
        if not covers(cover.squares[k], s):
            uncovered.append(i)
    return VerifyReport(not uncovered, m, uncovered)

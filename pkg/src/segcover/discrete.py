"""Factor-16 approximation for covering segments with squares from a given set.

Pipeline:

1. LP over left/right endpoint variables; each segment is handed to the
   side (left or right endpoint) carrying at least half of its LP mass.
2. Per side, squares are attached to unit-spaced horizontal lines; an LP
   over the side's points sends each point to the line parity (even/odd)
   carrying at least half its mass.
3. Per parity class the problem splits by line, and per line into the
   points above and below it.  Each square becomes two rectangles standing
   on the line.
4. Each above/below piece is a restricted point cover (unit-width
   rectangles on a common baseline), solved by :func:`rpc_cover` within
   twice its LP value.

Every LP value of the chain is kept in a ledger so the inequalities the
factor rests on can be checked numerically on each run.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil

from .errors import Infeasible
from .geometry import Cover, Point, UnitSquare, first_witnesses
from .lp import covering_lp, solve_lp

HALF = Fraction(1, 2)
LEDGER_TOL = Fraction(1, 10**6)
ABOVE, BELOW = "above", "below"


@dataclass
class DiscreteInstance:
    segments: list
    squares: list

    def __post_init__(self):
        self.squares = [t if isinstance(t, UnitSquare) else UnitSquare.of(*t) for t in self.squares]

    @property
    def left_pool(self):
        """Indices of squares covering some left endpoint (T1)."""
        return [k for k, t in enumerate(self.squares) if any(t.contains(s.l) for s in self.segments)]

    @property
    def right_pool(self):
        """Indices of squares covering some right endpoint (T2)."""
        return [k for k, t in enumerate(self.squares) if any(t.contains(s.r) for s in self.segments)]

    def check_feasible(self):
        for i, s in enumerate(self.segments):
            if not any(t.contains(s.l) or t.contains(s.r) for t in self.squares):
                raise Infeasible(f"segment {i} {s!r} is covered by no given square", i)


@dataclass
class PointClass:
    """Endpoints to be covered, each tagged with its segment, plus a pool of square indices."""

    seg: list
    points: list
    pool: list

    def __len__(self):
        return len(self.points)


@dataclass
class LineSystem:
    """Horizontal lines ``y = offset + xi``; every square sits on exactly one.

    A square with bottom edge y0 belongs to the line with
    ``offset + xi`` in ``[y0, y0 + 1)``.
    """

    offset: Fraction

    @classmethod
    def for_squares(cls, squares):
        return cls(min((t.y for t in squares), default=Fraction(0)))

    def line_of(self, t) -> int:
        return ceil(t.y - self.offset)

    def y(self, xi) -> Fraction:
        return self.offset + xi


@dataclass(frozen=True)
class BaselineRect:
    """Unit-width rectangle standing on a baseline (or hanging below it).

    ``left`` is the x of the left edge, ``height`` in [0, 1].  Points are
    given in baseline coordinates (x, distance from the line).
    """

    left: Fraction
    height: Fraction
    baseline: Fraction = Fraction(0)
    side: str = ABOVE
    square: int = -1

    @property
    def right(self):
        return self.left + 1

    def covers(self, p) -> bool:
        return self.left <= p[0] <= self.left + 1 and 0 <= p[1] <= self.height


@dataclass
class RPCInstance:
    points: list
    rects: list
    seg: list = field(default_factory=list)
    line: int = 0
    side: str = ABOVE


@dataclass
class RPCResult:
    selected: list
    lb: list


@dataclass
class LedgerCheck:
    name: str
    lhs: Fraction
    rhs: Fraction

    @property
    def ok(self) -> bool:
        return self.lhs <= self.rhs + LEDGER_TOL


@dataclass
class PipelineResult:
    cover: Cover
    ledger: list
    trace: list

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.ledger)


def _point_lp(points, pool, squares):
    """Covering LP over ``pool`` for ``points``; returns (value, x, rows)."""
    rows = [[j for j, k in enumerate(pool) if squares[k].contains(p)] for p in points]
    sol = solve_lp(covering_lp(len(pool), rows))
    return sol.objective, sol.x, rows


def step1_split(inst: DiscreteInstance):
    """Split segments by which endpoint the relaxation mostly covers.

    Returns (left class, right class, OPT_0 fractional).  Segments whose
    left-endpoint mass is at least 1/2 go left.
    """
    inst.check_feasible()
    segs, sq = inst.segments, inst.squares
    t1, t2 = inst.left_pool, inst.right_pool
    rows = []
    for s in segs:
        left = [j for j, k in enumerate(t1) if sq[k].contains(s.l)]
        right = [len(t1) + j for j, k in enumerate(t2) if sq[k].contains(s.r)]
        rows.append((left, right))
    sol = solve_lp(covering_lp(len(t1) + len(t2), [a + b for a, b in rows]))
    x = sol.x
    left_cls = PointClass([], [], t1)
    right_cls = PointClass([], [], t2)
    for i, (s, (a, _)) in enumerate(zip(segs, rows)):
        if sum((x[j] for j in a), Fraction(0)) >= HALF:
            left_cls.seg.append(i)
            left_cls.points.append(s.l)
        else:
            right_cls.seg.append(i)
            right_cls.points.append(s.r)
    return left_cls, right_cls, sol.objective


def step2_split(cls: PointClass, squares, lines: LineSystem):
    """Split a side by line parity.  Returns (even class, odd class, side LP value)."""
    if not cls.points:
        return PointClass([], [], []), PointClass([], [], []), Fraction(0)
    pool = [k for k in cls.pool if any(squares[k].contains(p) for p in cls.points)]
    value, x, rows = _point_lp(cls.points, pool, squares)
    even = PointClass([], [], [k for k in pool if lines.line_of(squares[k]) % 2 == 0])
    odd = PointClass([], [], [k for k in pool if lines.line_of(squares[k]) % 2 == 1])
    for e, (p, row) in enumerate(zip(cls.points, rows)):
        mass = sum((x[j] for j in row if lines.line_of(squares[pool[j]]) % 2 == 0), Fraction(0))
        target = even if mass >= HALF else odd
        target.seg.append(cls.seg[e])
        target.points.append(p)
    return even, odd, value


def split_by_line(cls: PointClass, squares, lines: LineSystem):
    """Map line index -> PointClass for one parity class.

    Within a parity class all squares covering a given point sit on the
    same line, so each point lands on exactly one line.
    """
    by_line = {}
    for k in cls.pool:
        by_line.setdefault(lines.line_of(squares[k]), PointClass([], [], [])).pool.append(k)
    for e, p in enumerate(cls.points):
        xi = next(lines.line_of(squares[k]) for k in cls.pool if squares[k].contains(p))
        by_line[xi].seg.append(cls.seg[e])
        by_line[xi].points.append(p)
    return {xi: c for xi, c in sorted(by_line.items()) if c.points}


def step3_split(cls: PointClass, squares, line_y, xi=0):
    """Split one line's points into the pieces above and below it.

    Points on the line go above.  Each square yields an above-rectangle of
    height ``top - line`` and a below-rectangle of height ``line - bottom``.
    """
    rect_up, rect_dn = [], []
    for k in cls.pool:
        t = squares[k]
        rect_up.append(BaselineRect(t.x, t.y + 1 - line_y, line_y, ABOVE, k))
        rect_dn.append(BaselineRect(t.x, line_y - t.y, line_y, BELOW, k))
    above = RPCInstance([], rect_up, [], xi, ABOVE)
    below = RPCInstance([], rect_dn, [], xi, BELOW)
    for e, p in enumerate(cls.points):
        if p.y >= line_y:
            above.points.append(Point(p.x, p.y - line_y))
            above.seg.append(cls.seg[e])
        else:
            below.points.append(Point(p.x, line_y - p.y))
            below.seg.append(cls.seg[e])
    return above, below


def rpc_cover(points, rects) -> RPCResult:
    """Greedy cover of points by unit-width rectangles on a common baseline.

    Take the highest point p; among the rectangles covering it keep the one
    reaching furthest left and the one reaching furthest right, discard the
    rest along with every point they cover, and recurse on the points left
    and right of the kept pair.  The picked points are pairwise
    non-coverable by one rectangle, so the output is at most twice their
    number and at most twice the LP optimum.
    """
    for e, p in enumerate(points):
        if not any(r.covers(p) for r in rects):
            raise Infeasible(f"point {e} {tuple(p)} is covered by no rectangle", e)
    selected, lb = [], []
    stack = [(list(range(len(points))), list(range(len(rects))))]
    while stack:
        P, R = stack.pop()
        if not P:
            continue
        e = max(P, key=lambda i: (points[i].y, -points[i].x, -i))
        p = points[e]
        Rp = [j for j in R if rects[j].covers(p)]
        rl = min(Rp, key=lambda j: (rects[j].left, j))
        rr = min(Rp, key=lambda j: (-rects[j].left, j))
        lb.append(e)
        selected.append(rl)
        if rr != rl:
            selected.append(rr)
        gone = set(Rp)
        rest = [i for i in P if not any(rects[j].covers(points[i]) for j in Rp)]
        left_edge, right_edge = rects[rl].left, rects[rr].right
        P1 = [i for i in rest if points[i].x < left_edge]
        P2 = [i for i in rest if points[i].x > right_edge]
        assert len(P1) + len(P2) == len(rest)
        others = [j for j in R if j not in gone]
        R1 = [j for j in others if any(rects[j].covers(points[i]) for i in P1)]
        R2 = [j for j in others if any(rects[j].covers(points[i]) for i in P2)]
        stack.append((P2, R2))
        stack.append((P1, R1))
    return RPCResult(selected, lb)


def rpc_lp_value(points, rects):
    rows = [[j for j, r in enumerate(rects) if r.covers(p)] for p in points]
    return solve_lp(covering_lp(len(rects), rows)).objective


TRACE_HEADER = "stage\tlabel\tpoints\tsquares\tlp\toutput"


def run_pipeline(inst: DiscreteInstance) -> PipelineResult:
    """Run all four steps, returning the cover, the inequality ledger and a trace."""
    sq = inst.squares
    ledger, trace = [], []

    def log(stage, label, npts, nsq, lp, out=""):
        trace.append(f"{stage}\t{label}\t{npts}\t{nsq}\t{lp}\t{out}")

    left, right, opt0 = step1_split(inst)
    log("step1", "Z0", len(inst.segments), len(left.pool) + len(right.pool), opt0)
    lines = LineSystem.for_squares(sq)
    chosen = []
    side_values = []
    rpc_total = 0
    for side, cls in (("1", left), ("2", right)):
        even, odd, opt_side = step2_split(cls, sq, lines)
        side_values.append(opt_side)
        log("step2", f"Z{side}", len(cls), len(cls.pool), opt_side)
        class_values = []
        for par, pc in (("1", even), ("2", odd)):
            name = f"Z{side}{par}"
            opt_cls = _point_lp(pc.points, pc.pool, sq)[0] if pc.points else Fraction(0)
            class_values.append(opt_cls)
            log("step2", name, len(pc), len(pc.pool), opt_cls)
            line_sum = Fraction(0)
            for xi, lc in split_by_line(pc, sq, lines).items():
                opt_line = _point_lp(lc.points, lc.pool, sq)[0]
                line_sum += opt_line
                log("step3", f"{name}@{xi}", len(lc), len(lc.pool), opt_line)
                halves = step3_split(lc, sq, lines.y(xi), xi)
                half_values = []
                for tag, piece in zip(("1", "2"), halves):
                    if not piece.points:
                        half_values.append(Fraction(0))
                        continue
                    lp_val = rpc_lp_value(piece.points, piece.rects)
                    half_values.append(lp_val)
                    res = rpc_cover(piece.points, piece.rects)
                    rpc_total += len(res.selected)
                    chosen.extend(piece.rects[j].square for j in res.selected)
                    label = f"{name}{tag}@{xi}"
                    log("step4", label, len(piece.points), len(piece.rects), lp_val, len(res.selected))
                    ledger.append(LedgerCheck(f"rpc-lp {label}", Fraction(len(res.selected)), 2 * lp_val))
                    ledger.append(LedgerCheck(f"rpc-lb {label}", Fraction(len(res.selected)), Fraction(2 * len(res.lb))))
                ledger.append(LedgerCheck(f"step3 {name}@{xi}", sum(half_values), 2 * opt_line))
            ledger.append(LedgerCheck(f"step3-lines {name}", line_sum, opt_cls))
        ledger.append(LedgerCheck(f"step2 Z{side}", sum(class_values), 2 * opt_side))
    ledger.insert(0, LedgerCheck("step1", sum(side_values), 2 * opt0))
    ledger.append(LedgerCheck("total", Fraction(rpc_total), 16 * opt0))

    picked = list(dict.fromkeys(chosen))
    squares = [sq[k] for k in picked]
    cover = Cover(squares, first_witnesses(inst.segments, squares), "discrete-16")
    log("lift", "cover", len(inst.segments), len(squares), "", len(squares))
    return PipelineResult(cover, ledger, trace)


def dcsus_16_approx(inst: DiscreteInstance) -> Cover:
    return run_pipeline(inst).cover

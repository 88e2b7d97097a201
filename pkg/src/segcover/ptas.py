"""Shifting-strategy PTAS for unit horizontal/vertical segments.

The bounding box is cut into k x k cells in k^2 shifted ways.  For one
shift every segment belongs to the cell holding its l(.) endpoint
(half-open cells); each cell is solved exactly over canonical candidate
squares and the cell solutions are unioned.  The smallest union wins.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import floor

from .geometry import Cover, UnitSquare
from .setcover import SetCoverInstance, exact_setcover
from .sweep_cover import _check_hv1

DEFAULT_CELL_BUDGET = 1_000_000


def enumerate_candidates(endpoints):
    """Canonical squares: left edge on some endpoint's x, top edge on some endpoint's y.

    Any unit square can slide right and down until its left and top edges
    touch endpoints it contains, without losing any of them, so these
    ``|X| * |Y|`` squares suffice for exact covering.
    """
    xs = sorted({p[0] for p in endpoints})
    ys = sorted({p[1] for p in endpoints})
    return [UnitSquare(x, y - 1) for x in xs for y in ys]


def canonical_square(points) -> UnitSquare:
    """The canonical candidate that replaces any unit square containing ``points``."""
    return UnitSquare(min(p[0] for p in points), max(p[1] for p in points) - 1)


@dataclass(frozen=True)
class ShiftGrid:
    """Cells of shift (i, j) over the integer box with min corner (x0, y0) and side ``size``.

    Column -1 is the leading strip of width ``i`` (absent when i == 0);
    after it come full k-wide strips, the last one clipped to the box.
    Rows work the same way with ``j``.
    """

    x0: int
    y0: int
    size: int
    k: int
    i: int
    j: int

    @classmethod
    def around(cls, points, k, i=0, j=0):
        x0 = floor(min(p[0] for p in points))
        y0 = floor(min(p[1] for p in points))
        size = max(floor(max(p[0] for p in points)) - x0, floor(max(p[1] for p in points)) - y0) + 1
        return cls(x0, y0, size, k, i, j)

    def cell_of(self, p):
        return (floor((p[0] - self.x0 - self.i) / self.k), floor((p[1] - self.y0 - self.j) / self.k))

    def _span(self, c, shift):
        if c == -1:
            return 0, shift
        lo = shift + c * self.k
        return lo, min(lo + self.k, self.size)

    def bounds(self, cell):
        """Cell rectangle (x_lo, y_lo, x_hi, y_hi), half-open on the high side."""
        ax, bx = self._span(cell[0], self.i)
        ay, by = self._span(cell[1], self.j)
        return (self.x0 + ax, self.y0 + ay, self.x0 + bx, self.y0 + by)

    def unit_cells(self, cell) -> int:
        x_lo, y_lo, x_hi, y_hi = self.bounds(cell)
        return (x_hi - x_lo) * (y_hi - y_lo)

    def cells(self):
        """Every nonempty cell of the shift, row-major."""
        def idx(shift):
            first = -1 if shift else 0
            last = (self.size - shift - 1) // self.k
            return range(first, last + 1)
        return [(cx, cy) for cx in idx(self.i) for cy in idx(self.j)]


def solve_cell_exact(segments, candidates, cap, budget=DEFAULT_CELL_BUDGET) -> Cover:
    """Minimum subset of ``candidates`` covering ``segments`` (at most ``cap`` squares)."""
    if not segments:
        return Cover([], [], "cell")
    sets = [[e for e, s in enumerate(segments) if t.contains(s.l) or t.contains(s.r)] for t in candidates]
    chosen = exact_setcover(SetCoverInstance(len(segments), sets), budget=budget, cap=cap)
    squares = [candidates[c] for c in chosen]
    witness = [next(k for k, t in enumerate(squares) if t.contains(s.l) or t.contains(s.r)) for s in segments]
    return Cover(squares, witness, "cell")


def solve_shift(segments, k, i, j, budget=DEFAULT_CELL_BUDGET) -> Cover:
    """Union of exact per-cell covers for shift (i, j)."""
    if not segments:
        return Cover([], [], "hv1-ptas")
    grid = ShiftGrid.around([p for s in segments for p in s.endpoints], k, i, j)
    cells = {}
    for idx, s in enumerate(segments):
        cells.setdefault(grid.cell_of(s.l), []).append(idx)
    squares, pos = [], {}
    witness = [-1] * len(segments)
    for cell in sorted(cells):
        idx = cells[cell]
        local = [segments[e] for e in idx]
        cands = enumerate_candidates([p for s in local for p in s.endpoints])
        sol = solve_cell_exact(local, cands, grid.unit_cells(cell), budget)
        ids = []
        for t in sol.squares:
            if t not in pos:
                pos[t] = len(squares)
                squares.append(t)
            ids.append(pos[t])
        for e, w in zip(idx, sol.witness):
            witness[e] = ids[w]
    return Cover(squares, witness, "hv1-ptas")


def _solve_shift_args(args):
    return solve_shift(*args)


def shift_solutions(segments, k, budget=DEFAULT_CELL_BUDGET, jobs=1):
    """Map (i, j) -> Cover for all k^2 shifts."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    _check_hv1(segments)
    shifts = [(i, j) for i in range(k) for j in range(k)]
    args = [(segments, k, i, j, budget) for i, j in shifts]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            results = list(pool.map(_solve_shift_args, args))
    else:
        results = [solve_shift(*a) for a in args]
    return dict(zip(shifts, results))


def ptas_cover(segments, k, budget=DEFAULT_CELL_BUDGET, jobs=1) -> Cover:
    """Best shift; size at most (1 + 1/k)^2 OPT.  Ties go to the smallest (i, j)."""
    sols = shift_solutions(segments, k, budget, jobs)
    best = min(sols, key=lambda ij: (len(sols[ij].squares), ij))
    return sols[best]


def ptas_bound(k, opt) -> Fraction:
    return (1 + Fraction(1, k)) ** 2 * opt

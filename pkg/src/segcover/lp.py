"""Linear programs  min c.x  s.t.  A x >= b,  0 <= x <= 1.

The default solver is a dense two-phase primal simplex over exact
rationals.  Upper bounds are handled by complementing variables (a
variable sitting at its upper bound is replaced by ``u - x``), so the box
never becomes extra rows.  Bland's rule picks both the entering and the
leaving variable, which rules out cycling and makes the returned basic
solution deterministic.

``method="highs"`` hands the same program to scipy's HiGHS in floating
point; it exists for large benchmarks and as an independent cross-check.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import StructuralError

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"


@dataclass
class LinearProgram:
    c: list
    A: list
    b: list
    var_labels: list = field(default=None)
    row_labels: list = field(default=None)

    @property
    def n_vars(self) -> int:
        return len(self.c)

    @property
    def n_rows(self) -> int:
        return len(self.b)

    def check(self):
        n = len(self.c)
        if len(self.A) != len(self.b):
            raise StructuralError(f"{len(self.A)} constraint rows but {len(self.b)} bounds")
        for i, row in enumerate(self.A):
            if len(row) != n:
                raise StructuralError(f"row {i} has {len(row)} coefficients, expected {n}")
        if self.var_labels is not None and len(self.var_labels) != n:
            raise StructuralError("one label per variable")
        if self.row_labels is not None and len(self.row_labels) != len(self.b):
            raise StructuralError("one label per row")

    def value(self, x):
        return sum(ci * xi for ci, xi in zip(self.c, x))

    def is_feasible(self, x, tol=0) -> bool:
        if any(xi < -tol or xi > 1 + tol for xi in x):
            return False
        return all(sum(a * xi for a, xi in zip(row, x)) >= bi - tol for row, bi in zip(self.A, self.b))


@dataclass
class LinearSolution:
    status: str
    x: list
    objective: object

    @property
    def optimal(self) -> bool:
        return self.status == OPTIMAL


def covering_lp(n_vars, rows, var_labels=None, row_labels=None) -> LinearProgram:
    """Unit-cost covering LP: one ``sum(x[j] for j in row) >= 1`` per row."""
    A = []
    for r in rows:
        a = [0] * n_vars
        for j in r:
            a[j] = 1
        A.append(a)
    return LinearProgram([1] * n_vars, A, [1] * len(rows), var_labels, row_labels)


def solve_lp(lp: LinearProgram, method="exact") -> LinearSolution:
    lp.check()
    if method == "exact":
        return _Simplex(lp).solve()
    if method == "highs":
        return _solve_highs(lp)
    raise ValueError(f"unknown method {method!r}")


def _solve_highs(lp):
    import numpy as np
    from scipy.optimize import linprog

    n = lp.n_vars
    if n == 0:
        ok = all(bi <= 0 for bi in lp.b)
        return LinearSolution(OPTIMAL if ok else INFEASIBLE, [], 0.0 if ok else None)
    c = np.array([float(v) for v in lp.c])
    kw = {}
    if lp.n_rows:
        kw["A_ub"] = -np.array([[float(v) for v in row] for row in lp.A])
        kw["b_ub"] = -np.array([float(v) for v in lp.b])
    res = linprog(c, bounds=[(0, 1)] * n, method="highs", **kw)
    if res.status == 2:
        return LinearSolution(INFEASIBLE, [], None)
    if res.status != 0:
        raise RuntimeError(f"HiGHS failed: {res.message}")
    return LinearSolution(OPTIMAL, [float(v) for v in res.x], float(res.fun))


class _Simplex:
    """Tableau state.  Column order: structural x, surplus s, artificial a."""

    def __init__(self, lp):
        n, m = lp.n_vars, lp.n_rows
        self.n = n
        inf = None
        self.upper = [Fraction(1)] * n + [inf] * m
        self.cost = [Fraction(v) for v in lp.c] + [Fraction(0)] * m
        rows, rhs, basis = [], [], []
        art_rows = [i for i in range(m) if Fraction(lp.b[i]) > 0]
        width = n + m + len(art_rows)
        self.first_art = n + m
        k = 0
        for i in range(m):
            bi = Fraction(lp.b[i])
            row = [Fraction(0)] * width
            if bi > 0:
                # A x - s + a = b
                for j, v in enumerate(lp.A[i]):
                    row[j] = Fraction(v)
                row[n + i] = Fraction(-1)
                row[n + m + k] = Fraction(1)
                basis.append(n + m + k)
                k += 1
                rhs.append(bi)
            else:
                # -A x + s = -b >= 0
                for j, v in enumerate(lp.A[i]):
                    row[j] = -Fraction(v)
                row[n + i] = Fraction(1)
                basis.append(n + i)
                rhs.append(-bi)
            rows.append(row)
        self.upper += [inf] * len(art_rows)
        self.cost += [Fraction(0)] * len(art_rows)
        self.T = rows
        self.rhs = rhs
        self.basis = basis
        self.flipped = [False] * width
        self.width = width

    # objective row z = z0 + sum(d[j] * v[j]) over nonbasic tableau variables
    def _price(self, cost):
        d = [cost[j] if not self.flipped[j] else -cost[j] for j in range(self.width)]
        z0 = sum((cost[j] * self.upper[j] for j in range(self.width) if self.flipped[j]), Fraction(0))
        for i, b in enumerate(self.basis):
            cb = d[b]
            if cb:
                row = self.T[i]
                for j in range(self.width):
                    if row[j]:
                        d[j] -= cb * row[j]
                z0 += cb * self.rhs[i]
        self.d, self.z0 = d, z0

    def _flip_nonbasic(self, j):
        u = self.upper[j]
        for i, row in enumerate(self.T):
            a = row[j]
            if a:
                self.rhs[i] -= a * u
                row[j] = -a
        self.z0 += self.d[j] * u
        self.d[j] = -self.d[j]
        self.flipped[j] = not self.flipped[j]

    def _flip_basic(self, i):
        b = self.basis[i]
        row = self.T[i]
        for j in range(self.width):
            if j != b and row[j]:
                row[j] = -row[j]
        self.rhs[i] = self.upper[b] - self.rhs[i]
        self.flipped[b] = not self.flipped[b]

    def _pivot(self, i, j):
        row = self.T[i]
        piv = row[j]
        if piv != 1:
            for k in range(self.width):
                if row[k]:
                    row[k] /= piv
            self.rhs[i] /= piv
        for r, other in enumerate(self.T):
            if r == i:
                continue
            f = other[j]
            if f:
                for k in range(self.width):
                    if row[k]:
                        other[k] -= f * row[k]
                self.rhs[r] -= f * self.rhs[i]
        f = self.d[j]
        if f:
            for k in range(self.width):
                if row[k]:
                    self.d[k] -= f * row[k]
            self.z0 += f * self.rhs[i]
        self.basis[i] = j

    def _iterate(self, allowed):
        while True:
            basic = set(self.basis)
            enter = next((j for j in range(allowed) if j not in basic and self.d[j] < 0), None)
            if enter is None:
                return
            best = None  # (ratio, variable index, row or -1, hits upper)
            if self.upper[enter] is not None:
                best = (self.upper[enter], enter, -1, False)
            for i, row in enumerate(self.T):
                a = row[enter]
                if a > 0:
                    cand = (self.rhs[i] / a, self.basis[i], i, False)
                elif a < 0 and self.upper[self.basis[i]] is not None:
                    cand = ((self.upper[self.basis[i]] - self.rhs[i]) / -a, self.basis[i], i, True)
                else:
                    continue
                if best is None or cand[:2] < best[:2]:
                    best = cand
            if best is None:
                raise RuntimeError("LP is unbounded; cannot happen with a boxed objective")
            _, _, i, to_upper = best
            if i == -1:
                self._flip_nonbasic(enter)
                continue
            if to_upper:
                self._flip_basic(i)
            self._pivot(i, enter)

    def _values(self):
        v = [Fraction(0)] * self.width
        for i, b in enumerate(self.basis):
            v[b] = self.rhs[i]
        return [self.upper[j] - v[j] if self.flipped[j] else v[j] for j in range(self.width)]

    def solve(self) -> LinearSolution:
        if self.width > self.first_art:
            phase1 = [Fraction(0)] * self.first_art + [Fraction(1)] * (self.width - self.first_art)
            self._price(phase1)
            self._iterate(self.width)
            if self.z0 > 0:
                return LinearSolution(INFEASIBLE, [], None)
            self._drive_out_artificials()
        self._price(self.cost)
        self._iterate(self.first_art)
        x = self._values()[: self.n]
        return LinearSolution(OPTIMAL, x, sum((c * v for c, v in zip(self.cost, x)), Fraction(0)))

    def _drive_out_artificials(self):
        i = 0
        while i < len(self.T):
            if self.basis[i] >= self.first_art:
                row = self.T[i]
                j = next((j for j in range(self.first_art) if row[j]), None)
                if j is None:
                    # redundant row
                    del self.T[i], self.rhs[i], self.basis[i]
                    continue
                self._pivot(i, j)
            i += 1


def _num(v) -> str:
    v = Fraction(v)
    if v.denominator == 1:
        return str(v.numerator)
    return repr(float(v))


def to_lp_text(lp: LinearProgram) -> str:
    """CPLEX-LP rendering with a fixed field order, for cross-checking elsewhere."""
    lp.check()
    names = [_sanitize(lbl) for lbl in lp.var_labels] if lp.var_labels else [f"x{j}" for j in range(lp.n_vars)]
    rnames = [_sanitize(lbl) for lbl in lp.row_labels] if lp.row_labels else [f"r{i}" for i in range(lp.n_rows)]

    def expr(coefs):
        terms = [(c, nm) for c, nm in zip(coefs, names) if c]
        if not terms:
            return "0 " + names[0] if names else "0"
        out = []
        for k, (c, nm) in enumerate(terms):
            sign = "-" if c < 0 else "+"
            mag = _num(abs(Fraction(c)))
            out.append((f"{sign} " if k or c < 0 else "") + f"{mag} {nm}")
        return " ".join(out)

    lines = ["\\ segcover linear program", "Minimize", f" obj: {expr(lp.c)}", "Subject To"]
    for nm, row, bi in zip(rnames, lp.A, lp.b):
        lines.append(f" {nm}: {expr(row)} >= {_num(bi)}")
    lines.append("Bounds")
    lines += [f" 0 <= {nm} <= 1" for nm in names]
    lines.append("End")
    return "\n".join(lines) + "\n"


def _sanitize(label) -> str:
    s = "".join(ch if ch.isalnum() or ch in "_." else "_" for ch in str(label))
    return s if s and not s[0].isdigit() else "v" + s

"""segcover command line.

Exit codes: 0 success, 1 infeasible (or cover fails verification),
2 parse error / bad usage / class mismatch, 3 search budget exceeded.
"""

import argparse
import hashlib
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil

from . import solvers
from .discrete import TRACE_HEADER
from .errors import Infeasible, InvalidInstance, ParseError, StructuralError, TooLarge
from .geometry import verify_cover
from .instance_io import (
    CLASSES,
    gen_random,
    gen_strip_arb,
    read_cover,
    read_instance,
    serialize_instance,
    vertex_cover_reduction,
    parse_graph,
    write_cover,
    write_instance,
)
from .setcover import DEFAULT_BUDGET

OK, INFEASIBLE, BAD_INPUT, BUDGET = 0, 1, 2, 3
EXACT_LIMIT = 16
REPORT_HEADER = "alg\tsize\ttime_s\tratio\tbound\twithin"


@dataclass
class RunReport:
    algorithm: str
    digest: str
    size: int
    wall: float
    trace: list = field(default_factory=list)
    ratio: Fraction = None

    def line(self):
        ratio = "-" if self.ratio is None else f"{float(self.ratio):.4f}"
        return f"{self.algorithm}\t{self.digest[:12]}\t{self.size}\t{self.wall:.4f}\t{ratio}"


def digest(inst) -> str:
    return hashlib.sha256(serialize_instance(inst).encode()).hexdigest()


def _err(msg):
    print(f"segcover: {msg}", file=sys.stderr)


def _load(path):
    return read_instance(path)


def _solve(inst, alg, args):
    if alg == "exact" and inst.n > EXACT_LIMIT and not getattr(args, "force", False):
        raise InvalidInstance(f"exact refuses n = {inst.n} > {EXACT_LIMIT}; pass --force")
    t0 = time.perf_counter()
    cover, pipe = solvers.run(inst, alg, k=args.k, budget=args.budget, jobs=args.jobs)
    return cover, pipe, time.perf_counter() - t0


def _guarded(fn):
    """Map library exceptions onto exit codes."""

    def wrapper(args):
        try:
            return fn(args)
        except ParseError as exc:
            _err(f"parse error: {exc}")
            return BAD_INPUT
        except (InvalidInstance, StructuralError) as exc:
            _err(str(exc))
            return BAD_INPUT
        except Infeasible as exc:
            _err(f"infeasible: {exc}")
            return INFEASIBLE
        except TooLarge as exc:
            _err(f"budget exceeded: {exc}")
            return BUDGET
        except OSError as exc:
            _err(str(exc))
            return BAD_INPUT

    return wrapper


@_guarded
def cmd_solve(args):
    inst = _load(args.input)
    cover, pipe, wall = _solve(inst, args.alg, args)
    report = verify_cover(inst, cover)
    if not report.feasible:
        _err(f"internal error: output leaves segments {report.uncovered} uncovered")
        return INFEASIBLE
    if args.output:
        write_cover(args.output, cover)
    run = RunReport(args.alg, digest(inst), cover.size, wall, pipe.trace if pipe else [])
    if args.exact:
        opt = _solve(inst, "exact", args)[0].size
        run.ratio = Fraction(cover.size, opt) if opt else Fraction(1)
    print(run.line())
    if args.trace and pipe is not None:
        print("# trace")
        print(TRACE_HEADER)
        for row in pipe.trace:
            print(row)
        print("# ledger")
        print("check\tlhs\trhs\tok")
        for c in pipe.ledger:
            print(f"{c.name}\t{c.lhs}\t{c.rhs}\t{'ok' if c.ok else 'FAIL'}")
    if args.svg:
        write_svg(args.svg, inst, cover)
    return OK


@_guarded
def cmd_verify(args):
    inst = _load(args.input)
    cover = read_cover(args.cover)
    if len(cover.witness) < inst.n:
        missing = list(range(len(cover.witness), inst.n))
        _err(f"cover has no ASSIGN for segment(s) {missing}")
        return INFEASIBLE
    try:
        report = verify_cover(inst, cover)
    except StructuralError as exc:
        _err(f"malformed cover: {exc}")
        return INFEASIBLE
    if not report.feasible:
        for i in report.uncovered:
            _err(f"segment {i} {inst.segments[i]!r} is not covered by its assigned square")
        return INFEASIBLE
    print(f"feasible\t{report.size}")
    return OK


@_guarded
def cmd_gen(args):
    w, h = (Fraction(v) for v in args.bbox.lower().split("x"))
    if args.cls == "strip-arb":
        inst = gen_strip_arb(args.n, args.seed)
    else:
        inst = gen_random(args.cls, args.n, args.seed, bbox=(w, h), m=args.m)
    if args.output:
        write_instance(args.output, inst)
    else:
        sys.stdout.write(serialize_instance(inst))
    return OK


@_guarded
def cmd_reduce_vc(args):
    with open(args.graph, encoding="utf-8") as fh:
        g = parse_graph(fh.read())
    inst = vertex_cover_reduction(g)
    if args.output:
        write_instance(args.output, inst)
    else:
        sys.stdout.write(serialize_instance(inst))
    return OK


@_guarded
def cmd_compare(args):
    inst = _load(args.input)
    algs = [a.strip() for a in args.algs.split(",") if a.strip()]
    for a in algs:
        if a not in solvers.ALGORITHMS:
            raise InvalidInstance(f"unknown algorithm {a!r}")
    opt = None
    if args.exact:
        args.force = True
        opt, _, _ = _solve(inst, "exact", args)
        opt = opt.size
    print(REPORT_HEADER)
    for a in algs:
        cover, _, wall = _solve(inst, a, args)
        if not verify_cover(inst, cover).feasible:
            _err(f"{a} produced an infeasible cover")
            return INFEASIBLE
        bound = solvers.factor(a, args.k)
        if opt is None:
            ratio, within = "-", "-"
        else:
            ratio = f"{cover.size / opt:.4f}" if opt else "1.0000"
            within = "yes" if cover.size <= ceil(bound * opt) else "no"
        print(f"{a}\t{cover.size}\t{wall:.4f}\t{ratio}\t{float(bound):g}\t{within}")
    return OK


@_guarded
def cmd_bench(args):
    """Generate seeded instances and print per-algorithm sizes and times."""
    algs = [a.strip() for a in args.algs.split(",") if a.strip()]
    print("seed\t" + REPORT_HEADER)
    args.force = True
    for seed in range(args.seed, args.seed + args.count):
        inst = gen_random(args.cls, args.n, seed)
        opt = _solve(inst, "exact", args)[0].size if args.exact else None
        for a in algs:
            cover, _, wall = _solve(inst, a, args)
            bound = solvers.factor(a, args.k)
            ratio = "-" if opt is None else f"{cover.size / opt:.4f}" if opt else "1.0000"
            within = "-" if opt is None else ("yes" if cover.size <= ceil(bound * opt) else "no")
            print(f"{seed}\t{a}\t{cover.size}\t{wall:.4f}\t{ratio}\t{float(bound):g}\t{within}")
    return OK


def write_svg(path, inst, cover, scale=40):
    pts = [p for s in inst.segments for p in s.endpoints]
    xs = [float(p.x) for p in pts] + [float(t.x + 1) for t in cover.squares] + [float(t.x) for t in cover.squares]
    ys = [float(p.y) for p in pts] + [float(t.y + 1) for t in cover.squares] + [float(t.y) for t in cover.squares]
    if not xs:
        xs = ys = [0.0]
    x0, x1, y0, y1 = min(xs) - 1, max(xs) + 1, min(ys) - 1, max(ys) + 1
    W, H = (x1 - x0) * scale, (y1 - y0) * scale

    def X(v):
        return (float(v) - x0) * scale

    def Y(v):
        return (y1 - float(v)) * scale

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{W:.0f}" height="{H:.0f}">']
    for t in cover.squares:
        out.append(
            f'<rect x="{X(t.x):.2f}" y="{Y(t.y + 1):.2f}" width="{scale}" height="{scale}" '
            'fill="steelblue" fill-opacity="0.2" stroke="steelblue"/>'
        )
    for s in inst.segments:
        out.append(
            f'<line x1="{X(s.l.x):.2f}" y1="{Y(s.l.y):.2f}" x2="{X(s.r.x):.2f}" y2="{Y(s.r.y):.2f}" '
            'stroke="black" stroke-width="2"/>'
        )
    out.append("</svg>")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(out) + "\n")


def build_parser():
    p = argparse.ArgumentParser(prog="segcover", description="Cover segments with unit squares.")
    sub = p.add_subparsers(dest="command", required=True)
    algs = sorted(solvers.ALGORITHMS)

    def common(q):
        q.add_argument("--k", type=int, help="shifting parameter for hv1-ptas")
        q.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="branch-and-bound node budget")
        q.add_argument("--jobs", type=int, default=1, help="worker processes for PTAS cells")

    q = sub.add_parser("solve", help="run one algorithm and write the cover")
    q.add_argument("--alg", required=True, choices=algs)
    q.add_argument("-i", "--input", required=True)
    q.add_argument("-o", "--output")
    q.add_argument("--trace", action="store_true", help="print stage trace and inequality ledger (discrete-16)")
    q.add_argument("--force", action="store_true", help="let exact run on more than 16 segments")
    q.add_argument("--svg", help="also write an SVG picture of instance and cover")
    q.add_argument("--exact", action="store_true", help="report the ratio to the exact optimum")
    common(q)
    q.set_defaults(func=cmd_solve)

    q = sub.add_parser("verify", help="check a cover file against an instance")
    q.add_argument("-i", "--input", required=True)
    q.add_argument("-c", "--cover", required=True)
    q.set_defaults(func=cmd_verify)

    q = sub.add_parser("gen", help="write a seeded random instance")
    q.add_argument("--class", dest="cls", required=True, choices=list(CLASSES) + ["strip-arb"])
    q.add_argument("-n", type=int, required=True)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--m", type=int, help="number of squares (discrete)")
    q.add_argument("--bbox", default="8x8")
    q.add_argument("-o", "--output")
    q.set_defaults(func=cmd_gen)

    q = sub.add_parser("reduce-vc", help="vertex cover graph -> discrete instance")
    q.add_argument("-g", "--graph", required=True)
    q.add_argument("-o", "--output")
    q.set_defaults(func=cmd_reduce_vc)

    q = sub.add_parser("compare", help="run several algorithms on one instance")
    q.add_argument("--algs", required=True)
    q.add_argument("-i", "--input", required=True)
    q.add_argument("--exact", action="store_true", help="add ratio to the exact optimum")
    common(q)
    q.set_defaults(func=cmd_compare)

    q = sub.add_parser("bench", help="compare algorithms over a range of seeds")
    q.add_argument("--class", dest="cls", required=True, choices=CLASSES)
    q.add_argument("--algs", required=True)
    q.add_argument("-n", type=int, default=8)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--count", type=int, default=10)
    q.add_argument("--exact", action="store_true")
    common(q)
    q.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return BAD_INPUT if exc.code else OK
    wanted = [getattr(args, "alg", None)] + getattr(args, "algs", "").split(",")
    if "hv1-ptas" in wanted and args.k is None:
        _err("hv1-ptas needs --k")
        return BAD_INPUT
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

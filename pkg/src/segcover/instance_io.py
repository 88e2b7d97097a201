"""Text formats for instances, covers and graphs, plus seeded generators.

Instance file::

    SEGCOVER 1
    # class: hv1
    # seed: 7
    MODE continuous
    SEGMENT x1 y1 x2 y2
    ...
    SQUARE x y          (discrete mode; min corner)

Numbers are decimals with at most 12 fractional digits or ``p/q``.  Lines
starting with ``#`` are comments; comments of the form ``# key: value``
before ``MODE`` carry metadata (the class tag among them).
"""

import re
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import InvalidInstance, ParseError
from .geometry import Cover, Point, Segment, UnitSquare, covers

CLASSES = ("h1us", "h1", "hv1", "arb", "discrete")
CONTINUOUS, DISCRETE = "continuous", "discrete"
MAX_DECIMALS = 12

_DEC = re.compile(r"-?\d+(\.\d{1,12})?\Z")
_RAT = re.compile(r"-?\d+/\d+\Z")
_META = re.compile(r"#\s*([A-Za-z_][\w-]*):\s*(.*?)\s*\Z")


@dataclass
class Instance:
    mode: str
    cls: str
    segments: list
    squares: list = field(default_factory=list)
    metadata: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.segments)


@dataclass
class GraphInput:
    n: int
    edges: list

    def __post_init__(self):
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidInstance(f"edge ({u}, {v}) names a missing vertex")
            if u == v:
                raise InvalidInstance(f"self-loop at {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise InvalidInstance(f"duplicate edge {key}")
            seen.add(key)


# numbers

def parse_number(tok: str) -> Fraction:
    if _DEC.match(tok):
        return Fraction(tok)
    if _RAT.match(tok):
        p, q = tok.split("/")
        if int(q) == 0:
            raise ValueError("zero denominator")
        return Fraction(int(p), int(q))
    raise ValueError(f"not a number: {tok!r}")


def format_number(v) -> str:
    v = Fraction(v)
    if v.denominator == 1:
        return str(v.numerator)
    scale = 10**MAX_DECIMALS
    if scale % v.denominator:
        return f"{v.numerator}/{v.denominator}"
    q = abs(v.numerator) * (scale // v.denominator)
    whole, frac = divmod(q, scale)
    sign = "-" if v < 0 else ""
    return f"{sign}{whole}.{str(frac).rjust(MAX_DECIMALS, '0').rstrip('0')}"


# classes

def infer_class(segments, mode=CONTINUOUS) -> str:
    if mode == DISCRETE:
        return "discrete"
    if all(s.unit_length and s.kind in ("horizontal", "vertical") for s in segments):
        if all(s.is_horizontal for s in segments):
            ys = [s.l.y for s in segments]
            if not ys or max(ys) - min(ys) <= 1:
                return "h1us"
            return "h1"
        return "hv1"
    return "arb"


_ORDER = {"h1us": 0, "h1": 1, "hv1": 2, "arb": 3}


def class_accepts(required: str, actual: str) -> bool:
    """Whether an instance whose geometry is ``actual`` fits class ``required``."""
    if required == "discrete" or actual == "discrete":
        return required == actual
    return _ORDER[actual] <= _ORDER[required]


def validate_class(inst: Instance):
    if inst.cls not in CLASSES:
        raise InvalidInstance(f"unknown class {inst.cls!r}")
    if (inst.cls == "discrete") != (inst.mode == DISCRETE):
        raise InvalidInstance(f"class {inst.cls} does not match mode {inst.mode}")
    actual = infer_class(inst.segments, inst.mode)
    if not class_accepts(inst.cls, actual):
        raise InvalidInstance(f"segments do not fit class {inst.cls} (they look like {actual})")


# instance files

def _tokens(line):
    """(token, 1-based column) pairs."""
    return [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line)]


def _numbers(toks, lineno):
    out = []
    for tok, col in toks:
        try:
            out.append(parse_number(tok))
        except ValueError as exc:
            raise ParseError(str(exc), lineno, col) from None
    return out


def parse_instance(text: str) -> Instance:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    mode = None
    header = False
    segments, squares, meta = [], [], {}
    for lineno, raw in enumerate(lines, 1):
        line = raw.rstrip("\r")
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            m = _META.match(stripped)
            if m and header and mode is None:
                meta[m.group(1)] = m.group(2)
            continue
        toks = _tokens(line)
        word, col = toks[0]
        if not header:
            if word != "SEGCOVER" or len(toks) != 2 or toks[1][0] != "1":
                raise ParseError("expected header 'SEGCOVER 1'", lineno, col)
            header = True
        elif word == "MODE":
            if mode is not None:
                raise ParseError("MODE given twice", lineno, col)
            if len(toks) != 2 or toks[1][0] not in (CONTINUOUS, DISCRETE):
                raise ParseError("MODE must be 'continuous' or 'discrete'", lineno, col)
            mode = toks[1][0]
        elif word == "SEGMENT":
            if mode is None:
                raise ParseError("SEGMENT before MODE", lineno, col)
            if squares:
                raise ParseError("SEGMENT after SQUARE lines", lineno, col)
            if len(toks) != 5:
                raise ParseError("SEGMENT needs 4 numbers", lineno, col)
            x1, y1, x2, y2 = _numbers(toks[1:], lineno)
            if (x1, y1) == (x2, y2):
                raise ParseError("degenerate segment (both endpoints equal)", lineno, col)
            segments.append(Segment(Point(x1, y1), Point(x2, y2)))
        elif word == "SQUARE":
            if mode != DISCRETE:
                raise ParseError("SQUARE lines need MODE discrete", lineno, col)
            if len(toks) != 3:
                raise ParseError("SQUARE needs 2 numbers", lineno, col)
            squares.append(UnitSquare(*_numbers(toks[1:], lineno)))
        else:
            raise ParseError(f"unknown directive {word!r}", lineno, col)
    if not header:
        raise ParseError("empty file; expected header 'SEGCOVER 1'", 1, 1)
    if mode is None:
        raise ParseError("missing MODE line", len(lines) or 1)
    cls = meta.pop("class", None) or infer_class(segments, mode)
    inst = Instance(mode, cls, segments, squares, meta)
    try:
        validate_class(inst)
    except InvalidInstance as exc:
        raise ParseError(str(exc)) from None
    return inst


def serialize_instance(inst: Instance) -> str:
    out = ["SEGCOVER 1", f"# class: {inst.cls}"]
    out += [f"# {k}: {v}" for k, v in inst.metadata.items()]
    out.append(f"MODE {inst.mode}")
    f = format_number
    for s in inst.segments:
        out.append(f"SEGMENT {f(s.l.x)} {f(s.l.y)} {f(s.r.x)} {f(s.r.y)}")
    for t in inst.squares:
        out.append(f"SQUARE {f(t.x)} {f(t.y)}")
    return "\n".join(out) + "\n"


def read_instance(path) -> Instance:
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read())


def write_instance(path, inst: Instance):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize_instance(inst))


# cover files

def serialize_cover(cover: Cover) -> str:
    f = format_number
    out = [f"COVER {cover.algorithm or 'unknown'} {len(cover.squares)}"]
    out += [f"SQUARE {f(t.x)} {f(t.y)}" for t in cover.squares]
    out += [f"ASSIGN {i} {k}" for i, k in enumerate(cover.witness)]
    return "\n".join(out) + "\n"


def parse_cover(text: str) -> Cover:
    squares, assign = [], {}
    alg, count = None, None
    for lineno, raw in enumerate(text.split("\n"), 1):
        line = raw.rstrip("\r")
        if not line.strip() or line.strip().startswith("#"):
            continue
        toks = _tokens(line)
        word, col = toks[0]
        if alg is None:
            if word != "COVER" or len(toks) != 3 or not toks[2][0].isdigit():
                raise ParseError("expected 'COVER <alg> <count>'", lineno, col)
            alg, count = toks[1][0], int(toks[2][0])
        elif word == "SQUARE":
            if len(toks) != 3:
                raise ParseError("SQUARE needs 2 numbers", lineno, col)
            squares.append(UnitSquare(*_numbers(toks[1:], lineno)))
        elif word == "ASSIGN":
            if len(toks) != 3 or not all(t.lstrip("-").isdigit() for t, _ in toks[1:]):
                raise ParseError("ASSIGN needs two integers", lineno, col)
            i, k = int(toks[1][0]), int(toks[2][0])
            if i in assign:
                raise ParseError(f"segment {i} assigned twice", lineno, col)
            assign[i] = k
        else:
            raise ParseError(f"unknown directive {word!r}", lineno, col)
    if alg is None:
        raise ParseError("empty cover file", 1, 1)
    if count != len(squares):
        raise ParseError(f"header says {count} squares, file lists {len(squares)}")
    n = max(assign) + 1 if assign else 0
    if sorted(assign) != list(range(n)):
        missing = sorted(set(range(n)) - set(assign))
        raise ParseError(f"no ASSIGN line for segment(s) {missing}")
    return Cover(squares, [assign[i] for i in range(n)], alg)


def read_cover(path) -> Cover:
    with open(path, encoding="utf-8") as fh:
        return parse_cover(fh.read())


def write_cover(path, cover: Cover):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize_cover(cover))


# graph files

def parse_graph(text: str) -> GraphInput:
    n = m = None
    edges = []
    for lineno, raw in enumerate(text.split("\n"), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = _tokens(raw)
        word, col = toks[0]
        try:
            nums = [int(t) for t, _ in toks[1:]]
        except ValueError:
            raise ParseError("expected integers", lineno, col) from None
        if n is None:
            if word != "VC" or len(nums) != 2:
                raise ParseError("expected 'VC n m'", lineno, col)
            n, m = nums
        elif word == "E" and len(nums) == 2:
            edges.append(tuple(nums))
        else:
            raise ParseError("expected 'E u v'", lineno, col)
    if n is None:
        raise ParseError("empty graph file", 1, 1)
    if m != len(edges):
        raise ParseError(f"header says {m} edges, file lists {len(edges)}")
    try:
        return GraphInput(n, edges)
    except InvalidInstance as exc:
        raise ParseError(str(exc)) from None


def serialize_graph(g: GraphInput) -> str:
    return "\n".join([f"VC {g.n} {len(g.edges)}"] + [f"E {u} {v}" for u, v in g.edges]) + "\n"


# generators

GRID = 10  # coordinates are multiples of 1/GRID


def _coord(rng, lo, hi):
    """Uniform multiple of 1/GRID in [lo, hi]."""
    return Fraction(int(rng.integers(round(lo * GRID), round(hi * GRID) + 1)), GRID)


def gen_random(cls: str, n: int, seed: int, bbox=(8, 8), m=None) -> Instance:
    """Seeded random instance of class ``cls`` inside ``[0, w] x [0, h]``.

    For ``discrete``, ``m`` squares (default ``n``) are drawn, each
    containing an endpoint of some segment; when ``m >= n`` square k is
    reserved for segment k, so every segment is coverable.  With ``m < n``
    the uncovered segments receive extra squares, so the count can exceed m.
    """
    if cls not in CLASSES:
        raise InvalidInstance(f"unknown class {cls!r}; expected one of {', '.join(CLASSES)}")
    if n < 0:
        raise ValueError("n must be >= 0")
    rng = np.random.default_rng(seed)
    w, h = bbox
    segs = []
    while len(segs) < n:
        if cls == "h1us":
            x, y = _coord(rng, 0, w - 1), _coord(rng, 0, 1)
            segs.append(Segment(Point(x, y), Point(x + 1, y)))
        elif cls in ("h1", "hv1"):
            vertical = cls == "hv1" and rng.integers(2) == 1
            if vertical:
                x, y = _coord(rng, 0, w), _coord(rng, 0, h - 1)
                segs.append(Segment(Point(x, y), Point(x, y + 1)))
            else:
                x, y = _coord(rng, 0, w - 1), _coord(rng, 0, h)
                segs.append(Segment(Point(x, y), Point(x + 1, y)))
        else:
            p = Point(_coord(rng, 0, w), _coord(rng, 0, h))
            q = Point(p.x + _coord(rng, -2, 2), p.y + _coord(rng, -2, 2))
            if p != q:
                segs.append(Segment(p, q))
    squares = []
    if cls == "discrete":
        m = n if m is None else m
        for k in range(m):
            if not segs:
                break
            owner = k if k < n else int(rng.integers(n))
            squares.append(_square_around(rng, segs[owner]))
        for s in segs:
            if not any(covers(t, s) for t in squares):
                squares.append(_square_around(rng, s))
    mode = DISCRETE if cls == "discrete" else CONTINUOUS
    meta = {"generator": "random", "seed": str(seed), "bbox": f"{w}x{h}"}
    return Instance(mode, cls, segs, squares, meta)


def _square_around(rng, s):
    p = s.endpoints[int(rng.integers(2))]
    return UnitSquare(p.x - _coord(rng, 0, 1), p.y - _coord(rng, 0, 1))


def gen_strip_arb(n: int, seed: int, width=8, max_len=3) -> Instance:
    """Horizontal segments of arbitrary length inside the strip 0 <= y <= 1."""
    rng = np.random.default_rng(seed)
    segs = []
    for _ in range(n):
        x, y = _coord(rng, 0, width), _coord(rng, 0, 1)
        length = _coord(rng, Fraction(1, GRID), max_len)
        segs.append(Segment(Point(x, y), Point(x + length, y)))
    meta = {"generator": "strip-arb", "seed": str(seed)}
    return Instance(CONTINUOUS, "arb", segs, [], meta)


def gen_graph(n: int, p: float, seed: int) -> GraphInput:
    rng = np.random.default_rng(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return GraphInput(n, edges)


VERTEX_GAP = Fraction(11, 10)


def vertex_cover_reduction(g: GraphInput) -> Instance:
    """Discrete instance whose optimum equals the minimum vertex cover of ``g``.

    Vertex v sits at x_v = 1.1 v on the x-axis and owns the unit square
    whose bottom edge is [x_v - 1/2, x_v + 1/2]; edge (u, v) becomes the
    horizontal segment from x_u to x_v.  Consecutive vertices are more than
    one unit apart, so a square contains exactly one vertex position.
    """
    xs = [VERTEX_GAP * v for v in range(g.n)]
    half = Fraction(1, 2)
    squares = [UnitSquare(x - half, Fraction(0)) for x in xs]
    segs = [Segment(Point(xs[u], Fraction(0)), Point(xs[v], Fraction(0))) for u, v in g.edges]
    meta = {"generator": "vertex-cover", "vertices": str(g.n)}
    return Instance(DISCRETE, "discrete", segs, squares, meta)

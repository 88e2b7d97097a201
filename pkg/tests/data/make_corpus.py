"""Regenerate the regression corpus and its frozen optima.

Optima come from scipy's MILP solver over an independently enumerated
candidate set (continuous) or the given squares (discrete); vertex covers
from brute force.  Run from the repository root:

    python3 tests/data/make_corpus.py
"""

import json
from fractions import Fraction
from itertools import combinations
from pathlib import Path

import numpy as np
from scipy.optimize import Bounds, LinearConstraint, milp

from segcover.instance_io import (
    CONTINUOUS,
    GraphInput,
    Instance,
    gen_graph,
    gen_random,
    gen_strip_arb,
    serialize_graph,
    write_instance,
)
from segcover.geometry import Segment

HERE = Path(__file__).parent
H = Fraction(1, 2)


def inside(t, p):
    return t[0] <= p[0] <= t[0] + 1 and t[1] <= p[1] <= t[1] + 1


def milp_min_cover(segments, squares):
    if not segments:
        return 0
    A = np.array([[1.0 if inside(t, s.l) or inside(t, s.r) else 0.0 for t in squares] for s in segments])
    res = milp(np.ones(len(squares)), constraints=LinearConstraint(A, lb=1), integrality=np.ones(len(squares)),
               bounds=Bounds(0, 1))
    assert res.status == 0, res.message
    return int(round(res.fun))


def continuous_candidates(segments):
    pts = [p for s in segments for p in (s.l, s.r)]
    return [(x, y - 1) for x in {p[0] for p in pts} for y in {p[1] for p in pts}]


def brute_vertex_cover(n, edges):
    for k in range(n + 1):
        for c in combinations(range(n), k):
            cs = set(c)
            if all(u in cs or v in cs for u, v in edges):
                return k
    return n


def named_graphs():
    out = {}
    for n in range(1, 8):
        out[f"K{n}"] = GraphInput(n, list(combinations(range(n), 2)))
    for n in range(2, 8):
        out[f"P{n}"] = GraphInput(n, [(i, i + 1) for i in range(n - 1)])
    for n in range(3, 8):
        out[f"C{n}"] = GraphInput(n, [(i, (i + 1) % n) for i in range(n)])
    out["star6"] = GraphInput(6, [(0, i) for i in range(1, 6)])
    out["K33"] = GraphInput(6, [(u, v) for u in range(3) for v in range(3, 6)])
    out["K34"] = GraphInput(7, [(u, v) for u in range(3) for v in range(3, 7)])
    out["wheel7"] = GraphInput(7, [(0, i) for i in range(1, 7)] + [(i, i % 6 + 1) for i in range(1, 7)])
    out["empty5"] = GraphInput(5, [])
    for seed in range(12):
        n = 4 + seed % 4
        out[f"rand{seed}"] = gen_graph(n, 0.45, seed)
    return out


def main():
    expected = {"instances": {}, "graphs": {}}
    cdir = HERE / "corpus"
    cdir.mkdir(exist_ok=True)
    specs = [("h1us", (6, 1)), ("h1", (5, 5)), ("hv1", (4, 4)), ("arb", (4, 4)), ("discrete", (4, 4))]
    for cls, bbox in specs:
        for seed in range(6):
            n = 3 + seed
            inst = gen_random(cls, n, 100 + seed, bbox=bbox)
            name = f"{cls}_{seed}.seg"
            write_instance(cdir / name, inst)
            sq = inst.squares if cls == "discrete" else continuous_candidates(inst.segments)
            expected["instances"][name] = milp_min_cover(inst.segments, sq)
    for seed in range(4):
        inst = gen_strip_arb(3 + seed, 200 + seed, width=6)
        name = f"striparb_{seed}.seg"
        write_instance(cdir / name, inst)
        expected["instances"][name] = milp_min_cover(inst.segments, continuous_candidates(inst.segments))
    # eight unit segments around one grid point; a single square covers all of them
    pts = [((-H, H), (H, H)), ((0, H), (1, H)), ((H, 1), (H, 0)), ((1, 3 * H), (1, H)),
           ((-H, 1), (H, 1)), ((1, 2), (1, 1)), ((H, 2), (H, 1)), ((0, 1), (1, 1))]
    segs = [Segment(p, q) for p, q in pts]
    inst = Instance(CONTINUOUS, "hv1", segs, [], {"generator": "handmade", "note": "shift-cell-split"})
    write_instance(cdir / "hv1_cellsplit.seg", inst)
    expected["instances"]["hv1_cellsplit.seg"] = milp_min_cover(segs, continuous_candidates(segs))

    gdir = HERE / "graphs"
    gdir.mkdir(exist_ok=True)
    for name, g in named_graphs().items():
        (gdir / f"{name}.vc").write_text(serialize_graph(g))
        expected["graphs"][f"{name}.vc"] = brute_vertex_cover(g.n, g.edges)
    (HERE / "expected.json").write_text(json.dumps(expected, indent=1, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()

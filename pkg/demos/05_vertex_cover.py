# Vertex cover as discrete segment covering: vertices on a line, one square
# each, edges as segments between vertex positions.
# Run: python3 demos/05_vertex_cover.py

from itertools import combinations

from segcover import GraphInput, exact_discrete, vertex_cover_reduction
from segcover.instance_io import gen_graph

for name, g in [("K4", GraphInput(4, list(combinations(range(4), 2)))),
                ("C5", GraphInput(5, [(i, (i + 1) % 5) for i in range(5)])),
                ("G(7, 0.4)", gen_graph(7, 0.4, seed=1))]:
    inst = vertex_cover_reduction(g)
    cover = exact_discrete(inst.segments, inst.squares)
    print(f"{name:10s} edges={len(g.edges):2d}  min squares = min vertex cover = {cover.size}")

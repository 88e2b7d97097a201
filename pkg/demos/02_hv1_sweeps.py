# Unit horizontal and vertical segments: factor 4, factor 3 sweep, and the shifting PTAS.
# Run: python3 demos/02_hv1_sweeps.py

from segcover import exact_continuous, hv1_four_approx, hv1_three_approx, is_independent_set, ptas_cover
from segcover.instance_io import gen_random

inst = gen_random("hv1", 9, seed=11, bbox=(4, 4))
segs = inst.segments
opt = exact_continuous(segs).size
print("n =", len(segs), " exact optimum =", opt)

c4 = hv1_four_approx(segs)
print("hv1-4approx:", c4.size)

# the sweep keeps an independent set as a certificate: OPT >= |LB|
c3 = hv1_three_approx(segs)
lb = [segs[i] for i in c3.lb]
print("hv1-3approx:", c3.size, " |LB| =", len(lb), " independent:", is_independent_set(lb))

# shifting: k^2 grids, each cell solved exactly
for k in (1, 2, 3):
    print(f"ptas k={k}:", ptas_cover(segs, k).size)

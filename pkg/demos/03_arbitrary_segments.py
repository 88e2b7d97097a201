# Segments of any length and direction: 8- and 6-approximation sweeps,
# plus the 3-approximation for horizontal segments inside one strip.
# Run: python3 demos/03_arbitrary_segments.py

from segcover import StripInstance, arb_eight_approx, arb_six_approx, exact_continuous, strip_arb_three_approx
from segcover.instance_io import gen_random, gen_strip_arb

worst = {"arb-8": 0.0, "arb-6": 0.0}
for seed in range(30):
    segs = gen_random("arb", 7, seed, bbox=(4, 4)).segments
    opt = exact_continuous(segs).size
    worst["arb-8"] = max(worst["arb-8"], arb_eight_approx(segs).size / opt)
    worst["arb-6"] = max(worst["arb-6"], arb_six_approx(segs).size / opt)
print("worst ratios over 30 seeds:", worst)

strip = gen_strip_arb(8, seed=4, width=6)
c = strip_arb_three_approx(StripInstance(0, strip.segments))
print("strip-arb-3approx:", c.size, " exact:", exact_continuous(strip.segments).size, " |LB| =", len(c.lb))

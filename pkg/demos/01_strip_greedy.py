# Unit horizontal segments in one strip: the greedy is optimal.
# Run: python3 demos/01_strip_greedy.py

from fractions import Fraction as F

from segcover import Segment, StripInstance, exact_continuous, greedy_strip_cover, h1_two_approx, verify_cover
from segcover.instance_io import gen_random

# three segments in the strip 0 <= y <= 1
segs = [
    Segment.of(0, F(1, 2), 1, F(1, 2)),
    Segment.of(F(3, 2), F(1, 5), F(5, 2), F(1, 5)),
    Segment.of(3, F(4, 5), 4, F(4, 5)),
]
cover = greedy_strip_cover(StripInstance(0, segs))
print("greedy squares:", [(str(t.x), str(t.y)) for t in cover.squares])
print("feasible:", verify_cover(segs, cover).feasible, " optimum:", exact_continuous(segs).size)

# a random strip; greedy and the exact search agree
inst = gen_random("h1us", 12, seed=5, bbox=(6, 1))
g = greedy_strip_cover(StripInstance(min(s.l.y for s in inst.segments), inst.segments))
print("random strip: greedy", g.size, "exact", exact_continuous(inst.segments).size)

# many strips: run the greedy per strip, at most twice the optimum
inst = gen_random("h1", 10, seed=2, bbox=(5, 5))
two = h1_two_approx(inst.segments)
print("h1 plane: strips greedy", two.size, "exact", exact_continuous(inst.segments).size)

# Discrete covering: squares come from a given set.  The pipeline rounds an LP
# twice, splits by horizontal lines, and finishes with a baseline greedy.
# Run: python3 demos/04_discrete_pipeline.py

from segcover import DiscreteInstance, exact_discrete, run_pipeline
from segcover.discrete import TRACE_HEADER
from segcover.instance_io import gen_random

inst = gen_random("discrete", 8, seed=3, bbox=(4, 4), m=10)
res = run_pipeline(DiscreteInstance(inst.segments, inst.squares))

print(TRACE_HEADER)
for row in res.trace:
    print(row)

# every inequality the factor rests on, checked on this run
for check in res.ledger:
    print(f"{check.name:24s} {str(check.lhs):>6s} <= {str(check.rhs):<6s} {'ok' if check.ok else 'FAIL'}")

print("pipeline:", res.cover.size, " exact:", exact_discrete(inst.segments, inst.squares).size)

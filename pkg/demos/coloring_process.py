"""
Watching a majority coloring spread
===================================

"""

from majority_dynamo import SIMPLE, STRICT, ThresholdScenario, closure, generate

# a 6-cycle: every vertex has two neighbours
g = generate("cycle", n=6)

# under the simple rule half of the neighbours is enough,
# so one white vertex drags the whole ring along
res = closure(g, [0], SIMPLE)
print("simple, seed {0}:", res.white)
for v, count in res.trace:
    print(f"  vertex {v} turned white with {count} white neighbours")

# the strict rule wants both neighbours, and a single seed stalls
print("strict, seed {0}:", closure(g, [0], STRICT).white)
print("strict, seeds {0,2,4}:", closure(g, [0, 2, 4], STRICT).white)

# thresholds side by side for a vertex of indegree 6
for s in (SIMPLE, STRICT, ThresholdScenario.fraction(2), ThresholdScenario.fraction(3)):
    print(f"{str(s):>11} needs {s.required(6)} of 6")

# the order in which vertices are processed never changes the outcome
import random

d = generate("random-digraph", n=40, p=0.1, seed=3)
seeds = list(range(0, 40, 3))
outcomes = {tuple(closure(d, seeds, STRICT, rng=random.Random(i)).white) for i in range(10)}
print("distinct outcomes over 10 random orders:", len(outcomes))

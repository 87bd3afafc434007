"""
Seeding a digraph by partition refinement
=========================================

"""

from majority_dynamo import STRICT, ThresholdScenario, generate, is_dynamo, refine_partition

g = generate("random-digraph", n=50, p=0.1, seed=1)
print(f"n={g.n}, m={g.m}")

# k=2: three blocks, each complement should become a 2/3-dynamo
ref = refine_partition(g, 2)
print("block sizes:", [len(b) for b in ref.partition.blocks])
print("eta climbs from", ref.eta_history[0], "to", ref.eta_history[-1], "in", ref.steps, "moves")
print("first moves:", [(m.vertex, m.src, m.dst) for m in ref.moves[:5]])

# the smallest complement is the seed set
print(f"{len(ref.seeds)} seeds, bound {ref.bound}")
print("2/3 dynamo:", is_dynamo(g, ref.seeds, ThresholdScenario.fraction(2)))
print("strict dynamo:", is_dynamo(g, ref.seeds, STRICT))

# larger k buys a weaker threshold guarantee at the price of more seeds
for k in (1, 2, 3, 5):
    r = refine_partition(g, k)
    print(f"k={k}: {len(r.seeds)} seeds (bound {r.bound})")

"""
From dominating sets to gadget dynamos and back
===============================================

"""

from majority_dynamo import (
    STRICT,
    blocking_set,
    build_gadget,
    check_gadget_invariants,
    closure,
    domset_to_dynamo,
    dynamo_to_domset,
    generate,
    greedy_domset,
)

src = generate("cycle", n=6)
gadget, mp = build_gadget(src)
print(f"source n={src.n} m={src.m}  ->  gadget n={gadget.n} m={gadget.m}")
print("\n".join(check_gadget_invariants(gadget, mp).lines()))

# a dominating set plus the two hubs colors the whole gadget
d = greedy_domset(src)
seeds = domset_to_dynamo(mp, d, gadget)
print("domset", d, "-> seeds", seeds)
print("covers gadget:", closure(gadget, seeds, STRICT).size == gadget.n)

# and any gadget dynamo hands back a dominating set that is no bigger
print("back:", dynamo_to_domset(mp, seeds, gadget))

# the blocking set of a vertex is self-sustaining black: its complement cannot reach it
b = blocking_set(mp, 0)
rest = [a for a in range(gadget.n) if a not in b]
print("B_0 =", b, " complement closed:", closure(gadget, rest, STRICT).white == rest)

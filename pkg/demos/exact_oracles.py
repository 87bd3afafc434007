"""
Exact answers on small graphs
=============================

"""

from majority_dynamo import (
    STRICT,
    build_gadget,
    find_dynamo_undirected,
    generate,
    min_domset_bruteforce,
    min_dynamo_bruteforce,
)

# the algorithm against the true optimum on a few small graphs
for kind, params in (("cycle", {"n": 8}), ("path", {"n": 7}), ("grid-torus", {"rows": 3, "cols": 3})):
    g = generate(kind, **params)
    opt = min_dynamo_bruteforce(g, STRICT)
    alg = find_dynamo_undirected(g).seeds
    print(f"{kind:>10}: optimum {opt.optimum_size} {opt.witness}, algorithm {len(alg)}, "
          f"{opt.subsets_examined} subsets tried")

# domination number sandwiches the gadget optimum: gamma <= min-seed <= gamma + 2
src = generate("path", n=4)
gamma = min_domset_bruteforce(src).optimum_size
gadget, _ = build_gadget(src)
res = min_dynamo_bruteforce(gadget, STRICT, max_size=gamma + 2)
print(f"P4: gamma={gamma}, gadget n={gadget.n}, min-seed={res.optimum_size}")

"""
Seeding an undirected graph with a refined cut
==============================================

"""

from majority_dynamo import STRICT, bad_components, find_dynamo_undirected, generate, is_dynamo, refine_cut

g = generate("random-gnp", n=60, p=0.04, seed=15, connected=True)

# a proper cut is one no single flip can enlarge; then bad components are removed one by one
ref = refine_cut(g)
print("side sizes:", len(ref.cut.members()), len(ref.cut.others()))
print("local-search flips:", ref.flips, "component moves:", ref.moves)
print("psi history length:", len(ref.psi_history), "strictly rising:",
      all(a < b for a, b in zip(ref.psi_history, ref.psi_history[1:])))
print("bad components left:", bad_components(g, ref.cut).count)

res = find_dynamo_undirected(g)
print(f"{len(res.seeds)} seeds, bound {res.bound}, dynamo: {is_dynamo(g, res.seeds, STRICT)}")

# complete graphs need exactly half, rounded up
for n in range(3, 9):
    print(f"K_{n}:", find_dynamo_undirected(generate("complete", n=n)).seeds)

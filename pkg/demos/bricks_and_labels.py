"""Bricks, semibricks and the brick-labelled Hasse quiver of A2."""
from taulattice import build_algebra, enumerate_bricks, enumerate_mutation_graph, enumerate_semibricks
from taulattice import labeled_hasse_quiver, stau_to_semibrick
from taulattice.corpus import linear_a

g = enumerate_mutation_graph(build_algebra(linear_a(2)))
bricks = enumerate_bricks(g)
print("bricks:", [B.dims for B in bricks])
print("semibricks:", [sorted(bricks[i].dims for i in s) for s in enumerate_semibricks(bricks)])
for pair in g.nodes:
    print(f"  {str(pair):<22} -> {[B.dims for B in stau_to_semibrick(pair)]}")

q = labeled_hasse_quiver(g, bricks)
for upper, lower, b in q.arrows():
    print(f"  {upper.name:<22} > {lower.name:<22} label {bricks[b].dims}")

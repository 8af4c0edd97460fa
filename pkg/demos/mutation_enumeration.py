"""Support tau-tilting pairs of linear A3 found by breadth-first left mutation."""
from taulattice import build_algebra, enumerate_mutation_graph, mutate
from taulattice.corpus import linear_a
from taulattice.tau_tilting import initial_pair

A = build_algebra(linear_a(3))
top = initial_pair(A)
print("start:", top)
for i in range(len(top)):
    print(f"  mutate at {i}:", mutate(top, i))

g = enumerate_mutation_graph(A)
print(f"{len(g.nodes)} pairs, {len(g.edges)} mutations, complete={g.complete}")
for k, pair in enumerate(g.nodes):
    print(f"  {k:2d} {pair}")
print("every degree equals 3:", set(g.degrees()) == {3})

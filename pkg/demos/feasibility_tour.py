"""Why a b-atom is not enough for a b-coloring, and what deleting one
vertex or edge does to the b-chromatic number.

Run with ``python3 demos/feasibility_tour.py``.
"""

from tatoms.criticality import critical_edges, critical_vertices, find_trap, phi, phi_r
from tatoms.detection import atom_occurrences
from tatoms.enumerate import random_tree
from tatoms.feasibility import b_chromatic_via_atoms, check_extension, is_feasible, phi_shortcut
from tatoms.graph import k_minus, path_graph, petersen_graph, remove_vertex

import random

# K_{3,3} minus a perfect matching holds b 3-atoms, but no 3-coloring of the
# rest of the graph keeps any of them alive.
g = k_minus(3)
occ = list(atom_occurrences(g, "b", 3))
print(f"K-3,3 has {len(occ)} b 3-atom occurrences")
print("  feasible ones:", sum(is_feasible(g, e).feasible for e in occ))
print("  phi_r =", phi_r(g), " phi =", phi(g))

# On the Petersen graph a feasible atom comes with an explicit extension.
p = petersen_graph()
t, res = b_chromatic_via_atoms(p)
print("\nPetersen phi =", t, "via the atom on", res.embedding.vertices)
print("  extension:", dict(sorted(res.extension.items())))
print("  extension checks out:", check_extension(p, res.embedding.vertices, t, res.extension))

# Trees and high-girth graphs skip the extension search.
rng = random.Random(1)
tree = random_tree(11, rng)
print("\nrandom tree on 11 vertices, shortcut phi =", phi_shortcut(tree))
print("P10 shortcut phi =", phi_shortcut(path_graph(10)))

# Deleting a vertex can raise phi. When it does, the smaller graph has a trap:
# an atom of the smaller graph that was stuck in the larger one.
print("\nvertex deletions in K-3,3")
for v in range(g.n):
    h = remove_vertex(g, v)
    trap = find_trap(g, v, phi(h))
    print(f"  delete {v}: phi {phi(g)} -> {phi(h)}, trap at {trap.vertices if trap else None}")

rep = critical_vertices(path_graph(5))
print("\nP5 critical vertices", rep.critical, "characterized", rep.characterized)
rep = critical_edges(path_graph(5))
print("P5 critical edges", rep.critical, "characterized", rep.characterized)

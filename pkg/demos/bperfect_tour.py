"""Deriving the forbidden family for b-perfect graphs and using it.

Run with ``python3 demos/bperfect_tour.py``. Deriving the family takes a
few seconds the first time.
"""

from tatoms.bperfect import b_chi_bounded, b_perfect_by_definition, derive_family, is_b_perfect
from tatoms.graph import complete_bipartite, cycle_graph, path_graph, petersen_graph
from tatoms.io import to_graph6
from tatoms.oracles import b_chromatic_number, chromatic_number

small = derive_family(0, 3)
print("from 3-atoms:", [to_graph6(g) for g in small.graphs])
fam = derive_family(0, 4)
print("from 4-atoms:", len(fam), "graphs, orders", sorted({g.n for g in fam.graphs}))

for name, g in [("P4", path_graph(4)), ("P6", path_graph(6)), ("C6", cycle_graph(6)),
                ("K3,3", complete_bipartite(3, 3)), ("Petersen", petersen_graph())]:
    ok, emb = is_b_perfect(g, fam)
    where = "" if ok else f" (forbidden graph on {emb.vertices})"
    print(f"  {name:8} family says {ok}, definition says {b_perfect_by_definition(g)}{where}")

# The bounded version asks for phi - chi <= k on every induced subgraph.
for name, g, k in [("P5", path_graph(5), 1), ("C6", cycle_graph(6), 0), ("Petersen", petersen_graph(), 0)]:
    r = b_chi_bounded(g, k)
    print(f"  {name}: phi={b_chromatic_number(g)[0]} chi={chromatic_number(g)} k={k} -> {r.holds}")

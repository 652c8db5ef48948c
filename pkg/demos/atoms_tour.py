"""A walk through the atom catalogs and what they detect.

Run with ``python3 demos/atoms_tour.py``. Catalogs are cached after the
first run, so later runs are quicker.
"""

from tatoms.atoms import generate_atoms, order_bound
from tatoms.detection import contains_atom, parameter_via_atoms
from tatoms.graph import common_names
from tatoms.io import to_graph6
from tatoms.oracles import b_relaxed_number_bruteforce, grundy_number, partial_grundy_number

print("Minimal atoms, by kind and number of colors")
for kind in ("grundy", "pgrundy", "b"):
    for t in (1, 2, 3):
        cat = generate_atoms(kind, t)
        orders = sorted({g.n for g in cat.graphs})
        print(f"  {kind:8} t={t}: {len(cat):3} atoms, orders {orders}, bound {order_bound(kind, t)}")

# The three minimal partial Grundy 3-atoms are small enough to print.
for w in generate_atoms("pgrundy", 3):
    print("  pgrundy 3-atom", to_graph6(w.graph), "parts", w.parts, "centers", w.center)

# Detection: a host contains a t-atom exactly when its parameter reaches t.
names = common_names()
host = names["Petersen"]
ok, emb = contains_atom(host, "b", 3)
print("\nPetersen contains a b 3-atom:", ok)
print("  occurrence on host vertices", emb.vertices)
print("  parts on the host", emb.host_parts(), "centers", emb.host_centers())

print("\nParameters from atoms against brute force")
for name in ("P5", "C5", "K-3,3", "K2,3"):
    g = names[name]
    row = [parameter_via_atoms(g, k) for k in ("grundy", "pgrundy", "b")]
    ref = [grundy_number(g)[0], partial_grundy_number(g)[0], b_relaxed_number_bruteforce(g)]
    print(f"  {name:9} atoms {row}  oracle {ref}")

import random

from tatoms.detection import atom_occurrences, contains_atom
from tatoms.enumerate import random_graph, random_tree
from tatoms.feasibility import (FEASIBLE, INFEASIBLE, UNDECIDED, all_atoms_feasible,
                                b_chromatic_via_atoms, check_extension, is_feasible, phi_shortcut)
from tatoms.graph import complete_graph, cycle_graph, k_minus, path_graph, petersen_graph
from tatoms.oracles import b_chromatic_number, b_relaxed_number_bruteforce


def test_k_minus_infeasible():
    g = k_minus(3)
    occ = list(atom_occurrences(g, "b", 3))
    assert occ and all(is_feasible(g, e).status == INFEASIBLE for e in occ)
    assert b_chromatic_via_atoms(g)[0] == 2


def test_extension_revalidates():
    g = petersen_graph()
    t, res = b_chromatic_via_atoms(g)
    assert t == 3 and res.status == FEASIBLE
    assert check_extension(g, res.embedding.vertices, t, res.extension)
    assert not check_extension(g, res.embedding.vertices, t, {})


def test_budget_gives_undecided():
    g = petersen_graph()
    emb = contains_atom(g, "b", 3)[1]
    assert is_feasible(g, emb, budget=1).status == UNDECIDED


def test_random_against_oracle():
    rng = random.Random(6)
    for _ in range(60):
        g = random_graph(rng.randint(2, 9), rng.uniform(0.15, 0.8), rng)
        t, res = b_chromatic_via_atoms(g)
        assert t == b_chromatic_number(g)[0]
        if res is not None:
            assert check_extension(g, res.embedding.vertices, t, res.extension)


def test_all_feasible_implies_phi_r():
    rng = random.Random(9)
    for _ in range(40):
        g = random_graph(rng.randint(2, 8), rng.uniform(0.2, 0.7), rng)
        pr = b_relaxed_number_bruteforce(g)
        if all_atoms_feasible(g, pr):
            assert b_chromatic_via_atoms(g)[0] == pr


def test_shortcut():
    assert phi_shortcut(path_graph(10)) == b_chromatic_number(path_graph(10))[0]
    assert phi_shortcut(cycle_graph(7)) == b_chromatic_number(cycle_graph(7))[0] == 3
    assert phi_shortcut(cycle_graph(4)) is None
    assert phi_shortcut(complete_graph(4)) is None
    rng = random.Random(2)
    for _ in range(20):
        tr = random_tree(rng.randint(1, 12), rng)
        assert phi_shortcut(tr) == b_chromatic_number(tr, cap=None)[0]

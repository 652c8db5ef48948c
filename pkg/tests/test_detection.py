import random

import pytest

from tatoms.detection import (DetectionCapError, atom_occurrences, b_relaxed_ge, contains_atom,
                              grundy_ge, parameter_via_atoms, partial_grundy_ge)
from tatoms.enumerate import random_graph
from tatoms.graph import complete_bipartite, complete_graph, cycle_graph, k_minus, path_graph, petersen_graph
from tatoms.match import find_induced, iter_induced
from tatoms.oracles import b_relaxed_number_bruteforce, grundy_number, partial_grundy_number


def test_find_induced():
    assert find_induced(cycle_graph(5), path_graph(4)) is not None
    assert find_induced(cycle_graph(4), path_graph(4)) is None  # P4 is a subgraph, not induced
    emb = find_induced(petersen_graph(), cycle_graph(5))
    assert len(set(emb)) == 5


def test_iter_induced_counts():
    # C5 has 5 induced P3 vertex sets, each embedded twice
    assert len(list(iter_induced(cycle_graph(5), path_graph(3)))) == 10


def test_examples(named):
    assert b_relaxed_ge(k_minus(3), 3)[0]
    assert not partial_grundy_ge(complete_bipartite(2, 3), 3)[0]
    for kind in ("grundy", "pgrundy", "b"):
        assert contains_atom(named["K1"], kind, 1)[0]
    assert partial_grundy_ge(named["P2+P3"], 3)[0]
    assert not grundy_ge(named["P2+P3"], 3)[0]


def test_embedding_valid():
    found, emb = b_relaxed_ge(petersen_graph(), 3)
    assert found and emb.is_valid_in(petersen_graph())
    assert len(emb.host_centers()) == 3


def test_aliases_and_errors():
    assert contains_atom(cycle_graph(5), "b_relaxed", 3)[0]
    with pytest.raises(ValueError):
        contains_atom(cycle_graph(5), "nope", 3)
    with pytest.raises(ValueError):
        contains_atom(cycle_graph(5), "b", 0)


def test_parameters_match_oracles():
    rng = random.Random(4)
    for _ in range(40):
        g = random_graph(rng.randint(1, 9), rng.uniform(0.2, 0.7), rng)
        assert parameter_via_atoms(g, "pgrundy") == partial_grundy_number(g)[0]
        assert parameter_via_atoms(g, "grundy") == grundy_number(g)[0]
        assert parameter_via_atoms(g, "b") == b_relaxed_number_bruteforce(g)


def test_subset_route_agrees():
    rng = random.Random(8)
    for _ in range(25):
        g = random_graph(rng.randint(3, 8), 0.4, rng)
        for t in (2, 3):
            a = {e.mask for e in atom_occurrences(g, "b", t)}
            b = {e.mask for e in atom_occurrences(g, "b", t, method="subsets")}
            assert a == b


def test_occurrences_unique():
    masks = [e.mask for e in atom_occurrences(petersen_graph(), "b", 3)]
    assert len(masks) == len(set(masks)) > 0


def test_cap_error():
    g = complete_graph(20)
    with pytest.raises(DetectionCapError):
        contains_atom(g, "b", 6)

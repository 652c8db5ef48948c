import pytest

from tatoms.atoms import (AtomCatalog, AtomWitness, CatalogCapError, atom_component_count_check,
                          atom_downward, find_witness, generate_atoms, is_atom, order_bound,
                          validate_witness)
from tatoms.canon import canonical_form
from tatoms.enumerate import all_graphs_upto
from tatoms.graph import components, cycle_graph, disjoint_union, path_graph, remove_vertex


def forms(graphs):
    return sorted(canonical_form(g) for g in graphs)


def test_order_bounds():
    assert [order_bound("pgrundy", t) for t in (1, 2, 3, 4)] == [1, 3, 6, 10]
    assert [order_bound("b", t) for t in (1, 2, 3, 4)] == [1, 4, 9, 16]
    assert [order_bound("grundy", t) for t in (1, 2, 3, 4)] == [1, 2, 4, 8]


def test_small_catalogs(named):
    assert forms(generate_atoms("pgrundy", 2).graphs) == forms([named["P2"]])
    assert forms(generate_atoms("pgrundy", 3).graphs) == forms([named["C3"], named["P4"], named["P2+P3"]])
    assert forms(generate_atoms("b", 2).graphs) == forms([named["P2"]])
    assert forms(generate_atoms("b", 3).graphs) == forms(
        [named["C3"], named["P5"], named["C5"], named["P3+P4"], named["3P3"]])
    # Grundy 3-atoms: P4 and C3 (Grundy 3 needs an induced P4 or triangle)
    assert forms(generate_atoms("grundy", 3).graphs) == forms([named["C3"], named["P4"]])


def test_witness_examples(named):
    # Figure-2 style P4 witness: colors 1,2,3,1 along the path
    p4 = AtomWitness(named["P4"], "pgrundy", 3, ((0, 3), (1,), (2,)), (0, 1, 2))
    assert validate_witness(p4)
    bad = AtomWitness(named["P4"], "pgrundy", 2, ((0, 3), (1, 2)), (0, 1))
    assert not validate_witness(bad)  # 1 and 2 are adjacent
    assert validate_witness(AtomWitness(named["P2"], "b", 2, ((0,), (1,)), (0, 1)))


def test_generated_witnesses_validate():
    for kind, t, order in (("pgrundy", 4, 10), ("b", 4, 8), ("grundy", 4, 8)):
        cat = generate_atoms(kind, t, max_order=order)
        assert cat.minimal_only and len(cat) > 0
        for w in cat:
            assert w.graph.n <= order_bound(kind, t)
            assert validate_witness(w)


def test_downward():
    for w in generate_atoms("pgrundy", 4):
        d = atom_downward(w, 3)
        assert d.t == 3 and validate_witness(d)
    for w in generate_atoms("b", 3):
        d = atom_downward(w, 2)
        assert validate_witness(d) and d.graph.m >= 1
    with pytest.raises(ValueError):
        atom_downward(generate_atoms("b", 3).atoms[0], 3)


def test_minimality_against_brute_force():
    # every graph n <= 6: a minimal b-3-atom iff an atom none of whose
    # one-vertex deletions is an atom
    cat = set(forms(generate_atoms("b", 3).graphs))
    for g in all_graphs_upto(6):
        minimal = is_atom(g, "b", 3) and not any(is_atom(remove_vertex(g, v), "b", 3)
                                                 for v in range(g.n))
        assert minimal == (canonical_form(g) in cat)


def test_nonminimal_catalog_contains_minimal():
    full = set(forms(generate_atoms("pgrundy", 3, minimal=False).graphs))
    assert set(forms(generate_atoms("pgrundy", 3).graphs)) <= full
    assert all(is_atom(g, "pgrundy", 3) for g in generate_atoms("pgrundy", 3, minimal=False).graphs)


def test_find_witness():
    assert find_witness(cycle_graph(5), "b", 3) is not None
    assert find_witness(cycle_graph(4), "b", 3) is None
    assert find_witness(path_graph(4), "grundy", 3) is not None


def test_component_check():
    for t in (2, 3):
        assert atom_component_count_check(generate_atoms("b", t))
    cat = generate_atoms("b", 4, max_order=8)
    assert atom_component_count_check(cat)
    assert max(len(components(g)) for g in generate_atoms("b", 3).graphs) == 3
    with pytest.raises(ValueError):
        atom_component_count_check(generate_atoms("b", 2, minimal=False))


def test_caps():
    with pytest.raises(CatalogCapError):
        generate_atoms("b", 4)
    with pytest.raises(CatalogCapError):
        generate_atoms("b", 5, max_order=12)


def test_avoid_restricts():
    cat = generate_atoms("b", 3, avoid=[cycle_graph(3)])
    assert forms(cat.graphs) == forms([path_graph(5), cycle_graph(5),
                                       disjoint_union(path_graph(3), path_graph(4)),
                                       disjoint_union(path_graph(3), path_graph(3), path_graph(3))])


def test_cache_roundtrip(tmp_path):
    cat = generate_atoms("b", 3, cache_dir=tmp_path)
    assert list(tmp_path.iterdir())
    again = generate_atoms("b", 3, cache_dir=tmp_path)
    assert forms(cat.graphs) == forms(again.graphs)
    cat.save(tmp_path / "b3.json")
    loaded = AtomCatalog.load(tmp_path / "b3.json")
    assert [w.to_json() for w in loaded] == [w.to_json() for w in cat]


def test_deterministic():
    a = generate_atoms("pgrundy", 4, cache_dir=None)
    b = generate_atoms("pgrundy", 4, cache_dir=None)
    assert [w.to_json() for w in a] == [w.to_json() for w in b]

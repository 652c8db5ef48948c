from tatoms.bperfect import (FAMILY_SIZE_K0, b_chi_bounded, b_perfect_by_definition, derive_family,
                             is_b_perfect, max_induced_gap)
from tatoms.canon import canonical_form
from tatoms.graph import complete_graph, cycle_graph, disjoint_union, path_graph, petersen_graph
from tatoms.oracles import b_chromatic_number, chromatic_number


def test_family_k0_t3(named):
    fam = derive_family(0, 3)
    want = {canonical_form(named[k]) for k in ("P5", "P3+P4", "3P3")}
    assert {canonical_form(g) for g in fam.graphs} == want


def test_family_k0_t4():
    fam = derive_family(0, 4)
    assert len(fam) == FAMILY_SIZE_K0
    small = derive_family(0, 3)
    assert {canonical_form(g) for g in small.graphs} <= {canonical_form(g) for g in fam.graphs}
    for m in fam.members:
        assert b_chromatic_number(m.graph, cap=None)[0] > chromatic_number(m.graph)
        assert not is_b_perfect(m.graph, fam)[0]


def test_recognition():
    fam = derive_family(0, 4)
    assert is_b_perfect(complete_graph(5), fam)[0]
    assert is_b_perfect(cycle_graph(4), fam)[0]
    ok, emb = is_b_perfect(path_graph(6), fam)
    assert not ok and emb.is_valid_in(path_graph(6))
    assert not b_perfect_by_definition(path_graph(5))
    assert b_perfect_by_definition(cycle_graph(4))


def test_gap_and_bounded():
    assert max_induced_gap(path_graph(5)) == 1
    r = b_chi_bounded(disjoint_union(path_graph(5), complete_graph(1)), 1)
    assert r.holds and r.hereditary and r.agrees
    r = b_chi_bounded(petersen_graph(), 1)
    assert not r.holds  # phi = chi = 3


def test_spec_examples(named):
    assert b_chi_bounded(named["P5"], 1).holds
    assert not b_chi_bounded(named["K4"], 1).holds
    assert b_chi_bounded(named["K-3,3"], 0).holds
    assert is_b_perfect(named["P4"])[0]
    assert derive_family(3, 3).members == []


def test_pinned_family_file():
    import json
    from pathlib import Path

    from tatoms.io import from_graph6

    data = json.loads((Path(__file__).parents[1] / "data" / "family_k0.json").read_text())
    pinned = sorted(canonical_form(from_graph6(m["graph6"])) for m in data["members"])
    assert pinned == sorted(canonical_form(g) for g in derive_family(0, 4).graphs)
    assert all(m["phi"] > m["chi"] for m in data["members"])

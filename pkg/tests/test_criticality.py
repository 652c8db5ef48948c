from tatoms.criticality import (critical_edges, critical_vertices, deletion_case, find_trap,
                                is_trap, phi, verify_vertex_deletion_theorems)
from tatoms.feasibility import is_feasible
from tatoms.graph import (complete_graph, cycle_graph, disjoint_union, empty_graph, k_minus,
                          path_graph, remove_vertex)


def test_k4_all_critical():
    rep = critical_vertices(complete_graph(4))
    assert rep.critical == [0, 1, 2, 3] and rep.agrees
    assert not is_trap(complete_graph(4), 0, 4)


def test_p2_edge_critical():
    rep = critical_edges(path_graph(2))
    assert rep.critical == [(0, 1)] and rep.agrees


def test_disjoint_k4_no_critical():
    g = disjoint_union(complete_graph(4), complete_graph(4))
    assert critical_vertices(g).critical == []
    assert critical_edges(g).critical == []


def test_k_minus_trap():
    g = k_minus(3)
    # a vertex whose deletion raises phi is a trap for the larger value
    risers = [v for v in range(g.n) if phi(remove_vertex(g, v)) > phi(g)]
    assert risers
    for v in risers:
        emb = find_trap(g, v, 3)
        assert emb is not None and v not in emb.vertices
        assert not is_feasible(g, emb, 3).feasible


def test_report_deltas_consistent():
    g = cycle_graph(5)
    rep = critical_vertices(g)
    for v, (dp, dpr) in rep.deltas.items():
        assert dp == phi(remove_vertex(g, v)) - phi(g)
    assert rep.to_json()["phi"] == 3


def test_deletion_cases():
    assert deletion_case(path_graph(2)) == "i"
    assert deletion_case(cycle_graph(3)) == "i"
    assert deletion_case(empty_graph(4)) == "ii"
    assert deletion_case(disjoint_union(path_graph(2), path_graph(2))) == "iii"
    assert deletion_case(path_graph(5)) is None


def test_small_deletion_theorems():
    rep = verify_vertex_deletion_theorems(5, parts="cd")
    assert rep.ok and rep.checked["c"] > 0

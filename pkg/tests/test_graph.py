import math
import random
from itertools import permutations

import pytest

from tatoms.canon import canonical_form, canonical_form_colored, canonical_graph, is_isomorphic
from tatoms.enumerate import all_graphs, random_graph, random_high_girth, random_tree
from tatoms.graph import (Graph, GraphError, complete_bipartite, complete_graph, cycle_graph,
                          disjoint_union, girth, induced_subgraph, is_tight, is_tree, k_minus,
                          m_degree, path_graph, petersen_graph, relabel, remove_edge, remove_vertex)
from tatoms.io import ParseError, from_edge_list, from_graph6, parse_graph, to_edge_list, to_graph6


def test_basic_counts():
    g = petersen_graph()
    assert (g.n, g.m) == (10, 15)
    assert set(g.degrees()) == {3}
    assert k_minus(3).m == 7  # K3,3 minus two edges of a perfect matching


def test_invalid_graph():
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 0)])


def test_induced_and_union():
    g = induced_subgraph(cycle_graph(5), [0, 1, 2])
    assert to_graph6(g) == to_graph6(path_graph(3))
    u = disjoint_union(path_graph(2), path_graph(3))
    assert (u.n, u.m) == (5, 3)


def test_removals_keep_counts():
    g = cycle_graph(5)
    assert remove_vertex(g, 0).n == 4
    assert remove_edge(g, (0, 1)).m == 4


def test_girth():
    assert girth(cycle_graph(7)) == 7
    assert girth(petersen_graph()) == 5
    assert math.isinf(girth(path_graph(6)))
    assert girth(complete_bipartite(2, 2)) == 4


def test_m_degree_and_tight():
    assert m_degree(complete_graph(4)) == 4
    assert m_degree(path_graph(5)) == 3
    assert m_degree(k_minus(3)) == 3
    # tight: exactly m(G) vertices of degree m(G) - 1
    assert is_tight(path_graph(5))
    assert is_tight(complete_graph(3))
    assert not is_tight(cycle_graph(5))  # five vertices of degree 2, m = 3


def test_graph6_roundtrip():
    rng = random.Random(3)
    for _ in range(50):
        g = random_graph(rng.randint(0, 70), 0.3, rng)
        assert from_graph6(to_graph6(g)) == g
        assert from_edge_list(to_edge_list(g)) == g


def test_graph6_known():
    assert to_graph6(complete_graph(3)) == "Bw"
    assert from_graph6("Bw") == complete_graph(3)


def test_parse_autodetect():
    assert parse_graph("3 2\n0 1\n1 2\n") == path_graph(3)
    assert parse_graph("Bw\n") == complete_graph(3)
    with pytest.raises(ParseError):
        parse_graph("3 2\n0 1\n")
    with pytest.raises(ParseError):
        parse_graph("B!")


def _brute_form(g: Graph):
    best = None
    for perm in permutations(range(g.n)):
        code = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in g.edges()))
        best = code if best is None or code < best else best
    return best


def test_canonical_form_matches_brute_force():
    rng = random.Random(11)
    graphs = [random_graph(rng.randint(1, 6), rng.random(), rng) for _ in range(80)]
    for g in graphs:
        h = relabel(g, rng.sample(range(g.n), g.n))
        assert canonical_form(g) == canonical_form(h)
    for a in graphs[:40]:
        for b in graphs[:40]:
            if a.n == b.n:
                assert (canonical_form(a) == canonical_form(b)) == (_brute_form(a) == _brute_form(b))


def test_canonical_graph_is_relabelling():
    g = petersen_graph()
    assert is_isomorphic(canonical_graph(g), g)
    assert not is_isomorphic(cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3)))


def test_colored_form_separates_colorings():
    g = path_graph(3)
    assert canonical_form_colored(g, [0, 1, 0]) != canonical_form_colored(g, [1, 0, 0])
    assert canonical_form_colored(g, [1, 0, 0]) == canonical_form_colored(g, [0, 0, 1])


def test_graph_counts():
    # OEIS A000088
    assert [len(all_graphs(n)) for n in range(1, 8)] == [1, 2, 4, 11, 34, 156, 1044]


def test_samplers():
    rng = random.Random(5)
    assert all(is_tree(random_tree(n, rng)) for n in range(1, 15))
    assert all(girth(random_high_girth(12, 7, rng)) >= 7 for _ in range(10))

import random
from itertools import product

import pytest

from tatoms.enumerate import all_graphs_upto, random_graph
from tatoms.graph import (complete_bipartite, complete_graph, cycle_graph, disjoint_union, k_minus,
                          path_graph, petersen_graph)
from tatoms.oracles import (ColoringCertificate, OracleCapError, b_chromatic_number, b_coloring,
                            b_relaxed_number_bruteforce, b_spectrum, check_certificate,
                            chromatic_number, grundy_number, partial_grundy_number)


def _naive_b(g, k):
    """All k^n colorings, for cross-checking on tiny graphs."""
    for col in product(range(k), repeat=g.n):
        if len(set(col)) < k or any(col[u] == col[v] for u, v in g.edges()):
            continue
        if all(any(col[v] == i and {col[u] for u in g.neighbors(v)} >= set(range(k)) - {i}
                   for v in range(g.n)) for i in range(k)):
            return True
    return False


def _naive_grundy(g):
    best = 0
    for col in product(range(1, g.n + 1), repeat=g.n):
        if any(col[u] == col[v] for u, v in g.edges()):
            continue
        if all({col[u] for u in g.neighbors(v)} >= set(range(1, col[v])) for v in range(g.n)):
            best = max(best, max(col, default=0))
    return best


def test_known_values():
    assert chromatic_number(petersen_graph()) == 3
    assert b_chromatic_number(petersen_graph())[0] == 3
    assert grundy_number(path_graph(4))[0] == 3
    assert partial_grundy_number(disjoint_union(path_graph(2), path_graph(3)))[0] == 3
    assert partial_grundy_number(complete_bipartite(2, 3))[0] == 2
    assert b_chromatic_number(k_minus(3))[0] == 2
    assert b_relaxed_number_bruteforce(k_minus(3)) == 3
    assert b_chromatic_number(cycle_graph(5))[0] == 3


def test_trivial_graph():
    g = complete_graph(1)
    assert chromatic_number(g) == grundy_number(g)[0] == partial_grundy_number(g)[0] == 1
    assert b_chromatic_number(g)[0] == b_relaxed_number_bruteforce(g) == 1


def test_certificates_validate():
    rng = random.Random(1)
    for _ in range(40):
        g = random_graph(rng.randint(1, 8), rng.random(), rng)
        for fn in (grundy_number, partial_grundy_number, b_chromatic_number):
            k, cert = fn(g)
            assert cert.k == k and check_certificate(g, cert)


def test_bad_certificate_rejected():
    g = path_graph(3)
    assert not check_certificate(g, ColoringCertificate((1, 1, 2), "proper"))
    assert not check_certificate(g, ColoringCertificate((1, 2, 3), "b_coloring", (0, 1, 2)))


def test_against_naive_small():
    for g in all_graphs_upto(5):
        phi = b_chromatic_number(g)[0]
        assert _naive_b(g, phi) and not any(_naive_b(g, k) for k in range(phi + 1, g.n + 1))
        assert grundy_number(g)[0] == _naive_grundy(g)


def test_spectrum():
    # phi(K-3,3) = 2, and no b-3-coloring exists
    assert b_spectrum(k_minus(3)) == {2}
    assert b_spectrum(complete_graph(4)) == {4}
    assert max(b_spectrum(petersen_graph())) == 3


def test_b_coloring_certificate():
    cert = b_coloring(cycle_graph(5), 3)
    assert cert is not None and check_certificate(cycle_graph(5), cert)
    assert b_coloring(k_minus(3), 3) is None


def test_parameter_order():
    rng = random.Random(2)
    for _ in range(40):
        g = random_graph(rng.randint(1, 8), rng.random(), rng)
        chi, gamma = chromatic_number(g), grundy_number(g)[0]
        pg, phi = partial_grundy_number(g)[0], b_chromatic_number(g)[0]
        assert chi <= phi <= pg and chi <= gamma <= pg
        assert phi <= b_relaxed_number_bruteforce(g) <= pg


def test_caps():
    with pytest.raises(OracleCapError):
        b_chromatic_number(petersen_graph(), cap=9)
    with pytest.raises(OracleCapError):
        b_relaxed_number_bruteforce(disjoint_union(petersen_graph(), complete_graph(1)))

import pytest

from tatoms.graph import Graph, complete_bipartite, complete_graph, cycle_graph, disjoint_union, k_minus, path_graph

# criterion number -> (passed, detail), filled in by test_acceptance.py
ACCEPTANCE: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def named():
    p = path_graph
    return {
        "K1": complete_graph(1), "P2": p(2), "P3": p(3), "P4": p(4), "P5": p(5),
        "C3": cycle_graph(3), "C4": cycle_graph(4), "C5": cycle_graph(5), "K4": complete_graph(4),
        "K2,3": complete_bipartite(2, 3), "K-3,3": k_minus(3),
        "P2+P3": disjoint_union(p(2), p(3)), "P3+P4": disjoint_union(p(3), p(4)),
        "3P3": disjoint_union(p(3), p(3), p(3)),
    }


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: (len(k), k)):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {detail}")

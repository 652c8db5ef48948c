"""Theorem suites: each checks one statement against the brute-force oracles.

Every suite returns a :class:`VerifyReport`. Exhaustive suites run over all
non-isomorphic graphs up to ``n_max``; sampled suites draw ``samples`` graphs
from a ``random.Random(seed)`` and record the seed.
"""

from __future__ import annotations

import random
from collections.abc import Callable
from dataclasses import dataclass, field

from .atoms import (ORDER_CAP, atom_component_count_check, generate_atoms,
                    order_bound, validate_witness)
from .bperfect import b_perfect_by_definition, derive_family, is_b_perfect
from .canon import canonical_form
from .criticality import critical_edges, critical_vertices, phi, phi_r, verify_vertex_deletion_theorems
from .detection import contains_atom
from .enumerate import all_graphs_upto, random_graph, random_high_girth, random_tree
from .feasibility import b_chromatic_via_atoms, check_extension, phi_shortcut
from .graph import Graph, complete_graph, components, cycle_graph, disjoint_union, is_bipartite, path_graph
from .io import to_graph6
from .oracles import grundy_number, partial_grundy_number

MAX_EXAMPLES = 20


@dataclass
class VerifyReport:
    theorem: str
    checked: int = 0
    counterexamples: list = field(default_factory=list)
    params: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def fail(self, item) -> None:
        self.counterexamples.append(item)

    def to_json(self) -> dict:
        return {"theorem": self.theorem, "result": "pass" if self.passed else "fail",
                "checked": self.checked, "counterexamples": self.counterexamples[:MAX_EXAMPLES],
                "n_counterexamples": len(self.counterexamples), "params": self.params,
                "notes": self.notes}


def _oracle_value(kind: str, g: Graph) -> int:
    if kind == "pgrundy":
        return partial_grundy_number(g, cap=None)[0]
    if kind == "grundy":
        return grundy_number(g, cap=None)[0]
    return phi_r(g)


def _iff(kind: str, n_max: int, t_max: int = 4) -> VerifyReport:
    rep = VerifyReport(f"{kind}-iff", params={"n_max": n_max, "t_max": t_max})
    for g in all_graphs_upto(n_max):
        value = _oracle_value(kind, g)
        for t in range(1, t_max + 1):
            rep.checked += 1
            found, emb = contains_atom(g, kind, t)
            if found != (value >= t) or (found and not emb.is_valid_in(g)):
                rep.fail({"graph6": to_graph6(g), "t": t, "oracle": value, "atoms": found})
    return rep


def pg_iff(n_max: int = 7, **_) -> VerifyReport:
    return _iff("pgrundy", n_max)


def b_iff(n_max: int = 7, **_) -> VerifyReport:
    return _iff("b", n_max)


def grundy_iff(n_max: int = 7, **_) -> VerifyReport:
    return _iff("grundy", n_max)


def _phi_check(rep: VerifyReport, g: Graph) -> None:
    rep.checked += 1
    expected = phi(g)
    got, res = b_chromatic_via_atoms(g)
    if got != expected:
        rep.fail({"graph6": to_graph6(g), "oracle": expected, "atoms": got})
    elif res is not None and not check_extension(g, res.embedding.vertices, got, res.extension):
        rep.fail({"graph6": to_graph6(g), "bad_extension": True})


def phi_feasibility(n_max: int = 7, samples: int = 200, seed: int = 0, sample_n_max: int = 9,
                    **_) -> VerifyReport:
    """phi through feasible atoms equals the oracle: exhaustive, then random graphs."""
    rep = VerifyReport("phi-feasibility", params={"n_max": n_max, "samples": samples, "seed": seed,
                                                  "sample_n_max": sample_n_max})
    for g in all_graphs_upto(n_max):
        _phi_check(rep, g)
    rng = random.Random(seed)
    for _ in range(samples):
        n = rng.randint(2, sample_n_max)
        _phi_check(rep, random_graph(n, rng.uniform(0.15, 0.75), rng))
    return rep


def _complete_bipartite_parts(g: Graph, comp: list[int]) -> tuple[int, int] | None:
    """Side sizes when the component induces a complete bipartite graph."""
    if len(comp) == 1:
        return None
    v = comp[0]
    side_b = [u for u in comp if g.has_edge(v, u)]
    side_a = [u for u in comp if u not in side_b]
    for a in side_a:
        for b in side_b:
            if not g.has_edge(a, b):
                return None
    for x in side_a:
        for y in side_a:
            if x != y and g.has_edge(x, y):
                return None
    for x in side_b:
        for y in side_b:
            if x != y and g.has_edge(x, y):
                return None
    return len(side_a), len(side_b)


def grundy2_char(n_max: int = 7, **_) -> VerifyReport:
    """Gamma = 2 iff a disjoint union of complete bipartite graphs (no isolated vertices)."""
    rep = VerifyReport("grundy2-char", params={"n_max": n_max})
    for g in all_graphs_upto(n_max):
        if min(g.degrees()) == 0:
            continue
        rep.checked += 1
        rhs = all(_complete_bipartite_parts(g, c) for c in components(g))
        lhs = grundy_number(g, cap=None)[0] == 2
        if lhs != rhs:
            rep.fail({"graph6": to_graph6(g), "gamma_is_2": lhs, "union_of_bicliques": rhs})
    return rep


def pg2_char(n_max: int = 7, **_) -> VerifyReport:
    """Partial Grundy = 2 iff K_{a,b} with a >= 2, b >= 1, or a matching (no isolated vertices)."""
    rep = VerifyReport("pg2-char", params={"n_max": n_max})
    for g in all_graphs_upto(n_max):
        if min(g.degrees()) == 0:
            continue
        rep.checked += 1
        comps = components(g)
        matching = all(len(c) == 2 for c in comps)
        parts = _complete_bipartite_parts(g, comps[0]) if len(comps) == 1 else None
        rhs = matching or (parts is not None and max(parts) >= 2)
        lhs = partial_grundy_number(g, cap=None)[0] == 2
        if lhs != rhs:
            rep.fail({"graph6": to_graph6(g), "pg_is_2": lhs, "condition": rhs})
    return rep


def _deletion(part: str, name: str, n_max: int, n_min: int = 1) -> VerifyReport:
    dr = verify_vertex_deletion_theorems(n_max, n_min=n_min, parts=part)
    rep = VerifyReport(name, params={"n_max": n_max, "n_min": n_min})
    rep.checked = dr.checked[part]
    rep.counterexamples = dr.counterexamples[part]
    return rep


def deletion_bounds(n_max: int = 7, **_) -> VerifyReport:
    rep = _deletion("a", "deletion-bounds", n_max)
    lower = [c for c in rep.counterexamples
             if c["phi_minus_v"] < c["phi"] - c["n"] // 2 + 2]
    rep.notes.append(f"{len(lower)} lower-bound and {len(rep.counterexamples) - len(lower)} "
                     "upper-bound violations")
    return rep


def critical_relaxed(n_max: int = 7, **_) -> VerifyReport:
    return _deletion("b", "critical-relaxed", n_max)


def deletion_lemma(n_max: int = 5, **_) -> VerifyReport:
    return _deletion("c", "deletion-lemma", n_max, n_min=4)


def deletion_characterization(n_max: int = 5, **_) -> VerifyReport:
    return _deletion("d", "deletion-characterization", n_max)


def critical_agreement(n_max: int = 7, **_) -> VerifyReport:
    """Critical vertices and edges by definition vs by the atom characterization."""
    rep = VerifyReport("critical-agreement", params={"n_max": n_max})
    for g in all_graphs_upto(n_max):
        for what, fn in (("vertices", critical_vertices), ("edges", critical_edges)):
            rep.checked += 1
            r = fn(g, cap=None)
            if not r.agrees:
                rep.fail({"graph6": to_graph6(g), "elements": what, "critical": r.critical,
                          "characterized": r.characterized})
    return rep


def bperfect_def(n_max: int = 7, **_) -> VerifyReport:
    """Forbidden-family recognition vs every induced subgraph having phi = chi."""
    rep = VerifyReport("bperfect-def", params={"n_max": n_max})
    fam = derive_family(0, 4)
    rep.notes.append(f"family size {len(fam)}")
    for g in all_graphs_upto(n_max):
        rep.checked += 1
        a, b = is_b_perfect(g, fam)[0], b_perfect_by_definition(g)
        if a != b:
            rep.fail({"graph6": to_graph6(g), "family": a, "definition": b})
    return rep


def family_bipartite(**_) -> VerifyReport:
    """derive_family(0, 3) is exactly the three bipartite minimal b-3-atoms."""
    rep = VerifyReport("family-bipartite")
    fam = derive_family(0, 3)
    want = {canonical_form(path_graph(5)),
            canonical_form(disjoint_union(path_graph(3), path_graph(4))),
            canonical_form(disjoint_union(path_graph(3), path_graph(3), path_graph(3)))}
    got = {canonical_form(g) for g in fam.graphs}
    rep.checked = len(fam)
    if got != want or not all(is_bipartite(g) for g in fam.graphs):
        rep.fail({"family": sorted(to_graph6(g) for g in fam.graphs)})
    return rep


def b4_remark(n_max: int | None = None, **_) -> VerifyReport:
    """Every minimal b-4-atom other than K4 contains a member of the b-perfect family."""
    order = ORDER_CAP["b"] if n_max is None else min(n_max, ORDER_CAP["b"])
    rep = VerifyReport("b4-remark", params={"max_order": order})
    fam = derive_family(0, 4)
    k4 = canonical_form(complete_graph(4))
    for w in generate_atoms("b", 4, max_order=order):
        if canonical_form(w.graph) == k4:
            continue
        rep.checked += 1
        if is_b_perfect(w.graph, fam)[0]:
            rep.fail({"graph6": to_graph6(w.graph)})
    rep.notes.append(f"minimal b-4-atoms up to {order} vertices (full bound 16)")
    return rep


def tree_phi_eq(samples: int = 200, n_max: int = 12, seed: int = 0, **_) -> VerifyReport:
    """phi(T) = phi_r(T) on random trees; phi_r through forest-restricted atoms."""
    rep = VerifyReport("tree-phi-eq", params={"samples": samples, "n_max": n_max, "seed": seed})
    rng = random.Random(seed)
    for _ in range(samples):
        g = random_tree(rng.randint(1, n_max), rng)
        rep.checked += 1
        short, exact = phi_shortcut(g), phi(g)
        if short != exact:
            rep.fail({"graph6": to_graph6(g), "phi": exact, "phi_r_atoms": short})
    return rep


def girth7_phi_eq(samples: int = 50, n_max: int = 14, seed: int = 0, **_) -> VerifyReport:
    """phi = phi_r on sampled graphs of girth >= 7 with phi_r >= 3."""
    rep = VerifyReport("girth7-phi-eq", params={"samples": samples, "n_max": n_max, "seed": seed})
    rng = random.Random(seed)
    draws = 0
    while rep.checked < samples:
        draws += 1
        if draws > 100 * samples:
            rep.notes.append(f"only {rep.checked} qualifying graphs in {draws - 1} draws")
            break
        g = random_high_girth(rng.randint(7, n_max), 7, rng)
        short = phi_shortcut(g)
        if short is None:
            continue  # phi_r < 3 here
        rep.checked += 1
        exact = phi(g)
        if short != exact:
            rep.fail({"graph6": to_graph6(g), "phi": exact, "phi_r_atoms": short})
    rep.params["draws"] = draws
    return rep


def component_bound(t_max: int = 4, **_) -> VerifyReport:
    """Minimal b-t-atoms have at most t components (catalogs up to the order cap)."""
    rep = VerifyReport("component-bound", params={"t_max": t_max})
    for t in range(1, t_max + 1):
        order = min(order_bound("b", t), ORDER_CAP["b"])
        cat = generate_atoms("b", t, max_order=order)
        rep.checked += len(cat)
        if not cat.complete:
            rep.notes.append(f"b-{t} catalog truncated at order {order} of {order_bound('b', t)}")
        if not atom_component_count_check(cat):
            rep.fail({"t": t, "members": [to_graph6(w.graph) for w in cat
                                          if len(components(w.graph)) > t]})
    return rep


def size_bounds(t_max: int = 4, **_) -> VerifyReport:
    """Generated atoms respect the order bounds and carry valid witnesses."""
    rep = VerifyReport("size-bounds", params={"t_max": t_max})
    for kind in ("pgrundy", "b", "grundy"):
        for t in range(1, t_max + 1):
            order = min(order_bound(kind, t), ORDER_CAP[kind])
            cat = generate_atoms(kind, t, max_order=order)
            if not cat.complete:
                rep.notes.append(f"{kind}-{t} catalog truncated at order {order}")
            for w in cat:
                rep.checked += 1
                if w.graph.n > order_bound(kind, t) or not validate_witness(w):
                    rep.fail({"kind": kind, "t": t, "graph6": to_graph6(w.graph)})
    return rep


def catalogs(**_) -> VerifyReport:
    """The known small minimal catalogs for t <= 3."""
    p = path_graph
    u = disjoint_union
    expected = {
        ("pgrundy", 2): [p(2)],
        ("pgrundy", 3): [cycle_graph(3), p(4), u(p(2), p(3))],
        ("b", 2): [p(2)],
        ("b", 3): [cycle_graph(3), p(5), cycle_graph(5), u(p(3), p(4)), u(p(3), p(3), p(3))],
    }
    rep = VerifyReport("catalogs")
    for (kind, t), graphs in expected.items():
        rep.checked += 1
        got = sorted(canonical_form(g) for g in generate_atoms(kind, t).graphs)
        if got != sorted(canonical_form(g) for g in graphs):
            rep.fail({"kind": kind, "t": t,
                      "got": sorted(to_graph6(g) for g in generate_atoms(kind, t).graphs)})
    return rep


THEOREMS: dict[str, Callable[..., VerifyReport]] = {
    "catalogs": catalogs,
    "size-bounds": size_bounds,
    "component-bound": component_bound,
    "pg-iff": pg_iff,
    "b-iff": b_iff,
    "grundy-iff": grundy_iff,
    "grundy2-char": grundy2_char,
    "pg2-char": pg2_char,
    "phi-feasibility": phi_feasibility,
    "deletion-bounds": deletion_bounds,
    "critical-relaxed": critical_relaxed,
    "deletion-lemma": deletion_lemma,
    "deletion-characterization": deletion_characterization,
    "critical-agreement": critical_agreement,
    "bperfect-def": bperfect_def,
    "family-bipartite": family_bipartite,
    "b4-remark": b4_remark,
    "tree-phi-eq": tree_phi_eq,
    "girth7-phi-eq": girth7_phi_eq,
}


def run(name: str, **params) -> VerifyReport:
    try:
        fn = THEOREMS[name]
    except KeyError:
        raise ValueError(f"unknown theorem {name!r}; choose from {', '.join(THEOREMS)}") from None
    return fn(**{k: v for k, v in params.items() if v is not None})

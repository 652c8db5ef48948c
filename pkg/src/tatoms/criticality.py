"""b-critical vertices and edges, b-t-traps and the vertex-deletion theorems.

Elements are vertices (``int``) or edges (``(u, v)`` with ``u < v``).
"In every feasible minimal b-t-atom" is read over occurrences in the host:
vertex sets inducing a minimal b-t-atom. A b-t-trap is an element ``x`` such
that some minimal b-t-atom occurrence of ``G - x`` is feasible in ``G - x``
but is not a feasible occurrence in ``G``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .atoms import find_witness
from .detection import Embedding, atom_occurrences, contains_atom
from .enumerate import all_graphs_upto
from .feasibility import DEFAULT_BUDGET, UNDECIDED, FeasibilityUndecided, is_feasible
from .graph import Graph, induced_subgraph, remove_edge, remove_vertex
from .io import to_graph6
from .oracles import OracleCapError, b_chromatic_number, b_relaxed_number_bruteforce

CRITICAL_CAP = 9

Element = "int | tuple[int, int]"


@lru_cache(maxsize=200_000)
def phi(g: Graph) -> int:
    return b_chromatic_number(g, cap=None)[0]


@lru_cache(maxsize=200_000)
def phi_r(g: Graph) -> int:
    return b_relaxed_number_bruteforce(g, cap=None)


def _check(g: Graph, cap: int | None) -> None:
    if cap is not None and g.n > cap:
        raise OracleCapError(f"criticality analysis capped at {cap} vertices, got {g.n}")


def _delete(g: Graph, x) -> Graph:
    return remove_vertex(g, x) if isinstance(x, int) else remove_edge(g, x)


def _cut(g: Graph, x) -> Graph:
    """``G - x`` keeping labels: a deleted vertex stays behind, isolated."""
    if isinstance(x, int):
        adj = [row & ~(1 << x) for row in g.adj]
        adj[x] = 0
        return Graph(g.n, adj)
    return remove_edge(g, x)


def _avoids(emb: Embedding, x) -> bool:
    m = emb.mask
    if isinstance(x, int):
        return not m >> x & 1
    return not (m >> x[0] & 1 and m >> x[1] & 1)


def _feasible(g: Graph, emb: Embedding, t: int, budget: int) -> bool:
    r = is_feasible(g, emb, t, budget)
    if r.status == UNDECIDED:
        raise FeasibilityUndecided(f"feasibility budget exhausted at t={t}", t)
    return r.feasible


def feasible_occurrences(g: Graph, t: int, budget: int = DEFAULT_BUDGET) -> list[Embedding]:
    return [e for e in atom_occurrences(g, "b", t) if _feasible(g, e, t, budget)]


def find_trap(g: Graph, x, t: int, budget: int = DEFAULT_BUDGET) -> Embedding | None:
    """A minimal b-t-atom occurrence of ``G - x`` that is feasible there but not in ``G``.

    The occurrence lives in ``G - x``. For a vertex it is also an occurrence
    of ``G``; deleting an edge can create occurrences ``G`` does not have,
    which count as not feasible in ``G``.
    """
    cut = _cut(g, x)
    feasible_in_g: dict[int, bool] = {}
    for emb in atom_occurrences(cut, "b", t):
        if isinstance(x, int) and not _avoids(emb, x):
            continue  # the deleted vertex, left isolated
        if not _feasible(cut, emb, t, budget):
            continue
        m = emb.mask
        if m not in feasible_in_g:
            if isinstance(x, int) or _avoids(emb, x):
                feasible_in_g[m] = _feasible(g, emb, t, budget)
            else:
                # both ends inside: G[A] differs, so A must be re-detected in G
                feasible_in_g[m] = _occurrence_feasible(g, m, t, budget)
        if not feasible_in_g[m]:
            return emb
    return None


def _occurrence_feasible(g: Graph, mask: int, t: int, budget: int) -> bool:
    """Does ``mask`` induce a minimal b-t-atom in ``g`` that is feasible there?"""
    verts = [v for v in range(g.n) if mask >> v & 1]
    h = induced_subgraph(g, verts)
    w = find_witness(h, "b", t)
    if w is None or any(find_witness(remove_vertex(h, i), "b", t) is not None for i in range(h.n)):
        return False
    return _feasible(g, Embedding(w, tuple(verts)), t, budget)


def is_trap(g: Graph, x, t: int, budget: int = DEFAULT_BUDGET) -> bool:
    return find_trap(g, x, t, budget) is not None


def is_atom_critical(g: Graph, emb: Embedding, e: tuple[int, int], t: int) -> bool:
    """Is ``e`` an edge of the occurrence whose removal leaves no b-t-atom on it?"""
    if not (emb.mask >> e[0] & 1 and emb.mask >> e[1] & 1):
        return False
    verts = list(emb.vertices)
    h = induced_subgraph(g, verts)
    a, b = verts.index(e[0]), verts.index(e[1])
    return find_witness(remove_edge(h, (a, b)), "b", t) is None


@dataclass
class CriticalReport:
    phi: int
    phi_r: int
    critical: list = field(default_factory=list)
    characterized: list = field(default_factory=list)
    traps: list = field(default_factory=list)
    deltas: dict = field(default_factory=dict)

    @property
    def agrees(self) -> bool:
        return sorted(self.critical) == sorted(self.characterized)

    def to_json(self) -> dict:
        def key(x):
            return str(x) if isinstance(x, int) else f"{x[0]}-{x[1]}"

        return {"phi": self.phi, "phi_r": self.phi_r,
                "critical": [list(x) if isinstance(x, tuple) else x for x in self.critical],
                "characterized": [list(x) if isinstance(x, tuple) else x for x in self.characterized],
                "agrees": self.agrees,
                "traps": [{"element": list(x) if isinstance(x, tuple) else x, "t": t} for x, t in self.traps],
                "deltas": {key(x): {"phi": d[0], "phi_r": d[1]} for x, d in self.deltas.items()}}


def _report(g: Graph, elements, cap, budget, edge_mode: bool) -> CriticalReport:
    _check(g, cap)
    p, pr = phi(g), phi_r(g)
    rep = CriticalReport(p, pr)
    feas = feasible_occurrences(g, p, budget) if p else []
    for x in elements:
        h = _delete(g, x)
        dp, dpr = phi(h) - p, phi_r(h) - pr
        rep.deltas[x] = (dp, dpr)
        if dp < 0:
            rep.critical.append(x)
        trap = is_trap(g, x, p, budget)
        if trap:
            rep.traps.append((x, p))
        if dp > 0 and is_trap(g, x, p + dp, budget):
            rep.traps.append((x, p + dp))
        if edge_mode:
            inside = all(is_atom_critical(g, e, x, p) for e in feas)
        else:
            inside = all(e.mask >> x & 1 for e in feas)
        if inside and not trap:
            rep.characterized.append(x)
    return rep


def critical_vertices(g: Graph, cap: int | None = CRITICAL_CAP,
                      budget: int = DEFAULT_BUDGET) -> CriticalReport:
    """b-critical vertices by definition, next to the trap characterization."""
    return _report(g, range(g.n), cap, budget, edge_mode=False)


def critical_edges(g: Graph, cap: int | None = CRITICAL_CAP,
                   budget: int = DEFAULT_BUDGET) -> CriticalReport:
    """b-critical edges by definition, next to the atom-critical characterization."""
    return _report(g, g.edges(), cap, budget, edge_mode=True)


# -- the vertex-deletion theorems ------------------------------------------

def _has_two_disjoint_edges(g: Graph) -> bool:
    edges = g.edges()
    return any(not set(a) & set(b) for i, a in enumerate(edges) for b in edges[i + 1:])


def deletion_case(g: Graph) -> str | None:
    """Which case of the characterization ``g`` falls in, if any."""
    n = g.n
    if (n, g.m) in ((2, 1), (3, 3)):
        return "i"
    if 4 <= n <= 5 and g.m == 0:
        return "ii"
    if 4 <= n <= 5 and _has_two_disjoint_edges(g) and not contains_atom(g, "b", 3)[0]:
        return "iii"
    return None


def _all_shifted(g: Graph) -> bool:
    """phi_r(G - v) = phi_r(G) + floor(n/2) - 2 for every vertex v."""
    if g.n == 0:
        return False
    target = phi_r(g) + g.n // 2 - 2
    return all(phi_r(remove_vertex(g, v)) == target for v in range(g.n))


@dataclass
class DeletionReport:
    n_max: int
    checked: dict = field(default_factory=dict)
    counterexamples: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not any(self.counterexamples.values())

    def to_json(self) -> dict:
        return {"n_max": self.n_max, "ok": self.ok, "checked": self.checked,
                "counterexamples": self.counterexamples}


def verify_vertex_deletion_theorems(n_max: int = 7, n_min: int = 1, parts: str = "abcd") -> DeletionReport:
    """Exhaustively check the deletion results on all graphs with ``n_min..n_max`` vertices.

    (a) phi(G) - floor(n/2) + 2 <= phi(G - v) <= phi(G) + floor(n/2) - 2;
    (b) a b-critical v has phi_r(G - v) = phi_r(G) - 1;
    (c) for 4 <= n <= 5 with an edge: phi_r(G - v) = phi_r(G) + floor(n/2) - 2 for
        all v iff G has two disjoint edges and no induced minimal b-3-atom;
    (d) the same equality for all v iff G is in one of the cases i), ii), iii).
    """
    rep = DeletionReport(n_max)
    for key in parts:
        rep.checked[key] = 0
        rep.counterexamples[key] = []
    for g in all_graphs_upto(n_max, n_min):
        n, code = g.n, to_graph6(g)
        p = phi(g)
        if "a" in parts:
            for v in range(n):
                q = phi(remove_vertex(g, v))
                rep.checked["a"] += 1
                if not p - n // 2 + 2 <= q <= p + n // 2 - 2:
                    rep.counterexamples["a"].append({"graph6": code, "n": n, "v": v, "phi": p,
                                                     "phi_minus_v": q})
        if "b" in parts:
            pr = phi_r(g)
            for v in range(n):
                h = remove_vertex(g, v)
                if phi(h) < p:
                    rep.checked["b"] += 1
                    if phi_r(h) != pr - 1:
                        rep.counterexamples["b"].append({"graph6": code, "v": v, "phi_r": pr,
                                                         "phi_r_minus_v": phi_r(h)})
        if "c" in parts and 4 <= n <= 5 and g.m:
            rep.checked["c"] += 1
            lhs = _all_shifted(g)
            rhs = _has_two_disjoint_edges(g) and not contains_atom(g, "b", 3)[0]
            if lhs != rhs:
                rep.counterexamples["c"].append({"graph6": code, "all_shifted": lhs, "condition": rhs})
        if "d" in parts:
            rep.checked["d"] += 1
            lhs = _all_shifted(g)
            case = deletion_case(g)
            if lhs != (case is not None):
                rep.counterexamples["d"].append({"graph6": code, "all_shifted": lhs, "case": case})
    return rep

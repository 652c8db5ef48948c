"""Feasible b-atoms and the b-chromatic number computed through them.

An occurrence ``A`` of a b-t-atom in ``G`` is feasible when some b-t-coloring
of ``G[A]`` extends to a proper coloring of ``N(A)`` using only colors
``1..t``. Feasibility depends only on the vertex set of the occurrence, so the
search runs over every b-t-coloring of ``G[A]``, not just the witness one.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .detection import Embedding, atom_occurrences, parameter_via_atoms
from .graph import Graph, bits, cycle_graph, girth, is_tree, m_degree

DEFAULT_BUDGET = 2_000_000

FEASIBLE, INFEASIBLE, UNDECIDED = "feasible", "infeasible", "undecided"


class FeasibilityUndecided(RuntimeError):
    """The node budget ran out before feasibility was settled."""

    def __init__(self, message: str, t: int | None = None):
        super().__init__(message)
        self.t = t


@dataclass
class FeasibilityResult:
    embedding: Embedding
    t: int
    status: str
    extension: dict[int, int] | None = None
    nodes: int = 0

    @property
    def feasible(self) -> bool:
        return self.status == FEASIBLE

    @property
    def atom(self):
        return self.embedding.atom

    def to_json(self) -> dict:
        out = {"status": self.status, "t": self.t, "vertices": list(self.embedding.vertices),
               "nodes": self.nodes}
        if self.extension is not None:
            out["extension"] = {str(v): c for v, c in sorted(self.extension.items())}
        return out


class _Budget:
    def __init__(self, limit: int):
        self.left = limit
        self.used = 0

    def tick(self) -> bool:
        self.used += 1
        self.left -= 1
        return self.left >= 0


def check_extension(g: Graph, atom_vertices, t: int, colors: dict[int, int]) -> bool:
    """Proper on ``A + N(A)``, colors in 1..t, and a b-t-coloring on ``A``."""
    amask = 0
    for v in atom_vertices:
        amask |= 1 << v
    closed = amask
    for v in bits(amask):
        closed |= g.adj[v]
    if set(colors) != set(bits(closed)):
        return False
    if any(not 1 <= c <= t for c in colors.values()):
        return False
    for v in colors:
        for u in bits(g.adj[v] & closed):
            if colors[u] == colors[v]:
                return False
    if {colors[v] for v in bits(amask)} != set(range(1, t + 1)):
        return False
    for c in range(1, t + 1):
        if not any(colors[v] == c and
                   {colors[u] for u in bits(g.adj[v] & amask)} >= set(range(1, t + 1)) - {c}
                   for v in bits(amask)):
            return False
    return True


def is_feasible(g: Graph, emb: Embedding, t: int | None = None,
                budget: int = DEFAULT_BUDGET) -> FeasibilityResult:
    """Search all b-t-colorings of the occurrence and all extensions to its neighbourhood."""
    t = emb.atom.t if t is None else t
    verts = list(emb.vertices)
    amask = emb.mask
    nmask = 0
    for v in verts:
        nmask |= g.adj[v]
    nmask &= ~amask
    outer = list(bits(nmask))
    allc = (1 << t) - 1
    color: dict[int, int] = {}
    counter = _Budget(budget)
    # atom vertices in BFS-ish order: each one after an atom neighbour if possible
    order = _connected_order(g, verts)
    result: list[dict[int, int] | None] = [None]
    exhausted = [False]

    def b_ok() -> bool:
        need = allc
        for v in verts:
            c = color[v]
            seen = 0
            for u in bits(g.adj[v] & amask):
                seen |= 1 << (color[u] - 1)
            if seen | 1 << (c - 1) == allc:
                need &= ~(1 << (c - 1))
        return need == 0

    def extend() -> bool:
        dom = {}
        for w in outer:
            used = 0
            for u in bits(g.adj[w] & amask):
                used |= 1 << (color[u] - 1)
            d = allc & ~used
            if not d:
                return False
            dom[w] = d
        assign: dict[int, int] = {}

        def rec() -> bool:
            if not counter.tick():
                exhausted[0] = True
                return False
            if len(assign) == len(outer):
                return True
            w = min((x for x in outer if x not in assign), key=lambda x: dom[x].bit_count())
            for c in bits(dom[w]):
                cb = 1 << c
                changed = []
                ok = True
                for u in bits(g.adj[w] & nmask):
                    if u not in assign and dom[u] & cb:
                        dom[u] &= ~cb
                        changed.append(u)
                        if not dom[u]:
                            ok = False
                assign[w] = c + 1
                if ok and rec():
                    return True
                del assign[w]
                for u in changed:
                    dom[u] |= cb
                if exhausted[0]:
                    return False
            return False

        if rec():
            ext = dict(color)
            ext.update(assign)
            result[0] = ext
            return True
        return False

    def rec_atom(i: int, top: int) -> bool:
        if not counter.tick():
            exhausted[0] = True
            return False
        if i == len(order):
            return top == t and b_ok() and extend()
        if top + (len(order) - i) < t:
            return False
        v = order[i]
        used = 0
        for u in bits(g.adj[v] & amask):
            if u in color:
                used |= 1 << (color[u] - 1)
        # colors are interchangeable here, so a new color is always the next one
        for c in range(1, min(top + 1, t) + 1):
            if used >> (c - 1) & 1:
                continue
            color[v] = c
            if rec_atom(i + 1, max(top, c)):
                return True
            del color[v]
            if exhausted[0]:
                return False
        return False

    found = rec_atom(0, 0)
    if found:
        return FeasibilityResult(emb, t, FEASIBLE, result[0], counter.used)
    return FeasibilityResult(emb, t, UNDECIDED if exhausted[0] else INFEASIBLE, None, counter.used)


def _connected_order(g: Graph, verts: list[int]) -> list[int]:
    left = set(verts)
    order = []
    while left:
        start = max(left, key=lambda v: ((g.adj[v]).bit_count(), -v))
        queue = [start]
        left.discard(start)
        while queue:
            v = queue.pop(0)
            order.append(v)
            for u in sorted(bits(g.adj[v])):
                if u in left:
                    left.discard(u)
                    queue.append(u)
    return order


def feasible_occurrence(g: Graph, t: int, budget: int = DEFAULT_BUDGET, method: str = "auto",
                        catalog_dir="default") -> FeasibilityResult | None:
    """First feasible minimal b-t-atom occurrence; raises if any check was undecided."""
    undecided = False
    for emb in atom_occurrences(g, "b", t, method=method, catalog_dir=catalog_dir):
        r = is_feasible(g, emb, t, budget)
        if r.feasible:
            return r
        undecided |= r.status == UNDECIDED
    if undecided:
        raise FeasibilityUndecided(f"feasibility budget exhausted at t={t}", t)
    return None


def b_chromatic_via_atoms(g: Graph, budget: int = DEFAULT_BUDGET, method: str = "auto",
                          catalog_dir="default") -> tuple[int, FeasibilityResult | None]:
    """Largest t <= m(G) with a feasible minimal b-t-atom occurrence."""
    for t in range(m_degree(g), 0, -1):
        r = feasible_occurrence(g, t, budget, method, catalog_dir)
        if r is not None:
            return t, r
    return 0, None


def all_atoms_feasible(g: Graph, t: int, budget: int = DEFAULT_BUDGET, method: str = "auto",
                       catalog_dir="default") -> bool:
    """Is every minimal b-t-atom occurrence in ``g`` feasible?"""
    for emb in atom_occurrences(g, "b", t, method=method, catalog_dir=catalog_dir):
        r = is_feasible(g, emb, t, budget)
        if r.status == UNDECIDED:
            raise FeasibilityUndecided(f"feasibility budget exhausted at t={t}", t)
        if not r.feasible:
            return False
    return True


FOREST_AVOID = tuple(cycle_graph(k) for k in range(3, 17))
GIRTH7_AVOID = tuple(cycle_graph(k) for k in range(3, 7))
# Restricted catalogs are generated up to this order; larger hosts go through
# the subset route.
SHORTCUT_CATALOG_ORDER = 12


def phi_shortcut(g: Graph, catalog_dir="default") -> int | None:
    """phi for trees, and for girth >= 7 when phi_r >= 3; otherwise None.

    In both cases phi equals phi_r, which only needs atom detection. Catalogs
    are restricted to forests (resp. girth >= 7), which the host is.
    """
    method = "auto" if g.n <= SHORTCUT_CATALOG_ORDER else "subsets"
    if g.n and is_tree(g):
        return parameter_via_atoms(g, "b", avoid=FOREST_AVOID, method=method, catalog_dir=catalog_dir)
    if girth(g) >= 7:
        r = parameter_via_atoms(g, "b", avoid=GIRTH7_AVOID, method=method, catalog_dir=catalog_dir)
        if r >= 3:
            return r
    return None

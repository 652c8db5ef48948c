"""Exact canonical labelling by colour refinement plus individualisation.

The search explores the individualisation-refinement tree, keeping the leaf
with the largest (trace, adjacency) key. Subtrees are cut when their trace
prefix is already smaller than the best one, and by orbits of automorphisms
discovered along the way.
"""

from __future__ import annotations

from .graph import Graph, bits, relabel
from .io import to_graph6


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> tuple[list[list[int]], tuple]:
    """Refine an ordered partition to the coarsest equitable refinement.

    Returns the refined cells and an isomorphism-invariant trace (the quotient
    matrix together with the cell sizes).
    """
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        new_cells: list[list[int]] = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                row = adj[v]
                sig = tuple((row & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                new_cells.append(cell)
            else:
                split = True
                for sig in sorted(groups):
                    new_cells.append(groups[sig])
        cells = new_cells
        if not split:
            trace = tuple(
                (len(cell), tuple((adj[cell[0]] & m).bit_count() for m in masks))
                for cell in cells
            )
            return cells, trace


def _certificate(adj: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        r = 0
        for u in bits(adj[v]):
            r |= 1 << pos[u]
        rows.append(r)
    return tuple(rows)


class _Search:
    def __init__(self, g: Graph):
        self.adj = g.adj
        self.n = g.n
        self.best_key = None
        self.best_order: list[int] | None = None
        self.best_path: list[int] = []
        self.first_key = None
        self.first_order: list[int] | None = None
        self.first_path: list[int] = []
        self.autos: list[list[int]] = []

    def _record_auto(self, src: list[int], dst: list[int]) -> None:
        perm = [0] * self.n
        for a, b in zip(src, dst):
            perm[a] = b
        if any(perm[i] != i for i in range(self.n)):
            self.autos.append(perm)

    def _orbit_blocked(self, fixed: list[int], explored: list[int], v: int) -> bool:
        gens = [p for p in self.autos if all(p[x] == x for x in fixed)]
        if not gens:
            return False
        orbit = set(explored)
        stack = list(explored)
        while stack:
            x = stack.pop()
            for p in gens:
                y = p[x]
                if y not in orbit:
                    if y == v:
                        return True
                    orbit.add(y)
                    stack.append(y)
        return v in orbit

    def run(self, cells: list[list[int]], traces: tuple, path: list[int]) -> int:
        """Explore a node; return the depth to backjump to (or ``len(path)``)."""
        cells, trace = _refine(self.adj, cells)
        traces = traces + (trace,)
        if self.best_key is not None and traces < self.best_key[0][: len(traces)]:
            return len(path)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            key = (traces, _certificate(self.adj, order))
            if self.first_key is None:
                self.first_key = self.best_key = key
                self.first_order = self.best_order = order
                self.first_path = self.best_path = list(path)
                return len(path)
            if key == self.first_key:
                self._record_auto(self.first_order, order)
                return _common(path, self.first_path)
            if key == self.best_key:
                self._record_auto(self.best_order, order)
                return _common(path, self.best_path)
            if key > self.best_key:
                self.best_key, self.best_order, self.best_path = key, order, list(path)
            return len(path)
        cell = cells[target]
        explored: list[int] = []
        depth = len(path)
        for v in sorted(cell):
            if explored and self._orbit_blocked(path, explored, v):
                continue
            rest = [u for u in cell if u != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            jump = self.run(child, traces, path + [v])
            explored.append(v)
            if jump < depth:
                return jump
        return depth


def _common(a: list[int], b: list[int]) -> int:
    k = 0
    for x, y in zip(a, b):
        if x != y:
            break
        k += 1
    return k


def canonical_order(g: Graph, cells: list[list[int]] | None = None) -> list[int]:
    """A vertex order such that relabelling by it yields the canonical graph.

    ``cells`` is an optional ordered partition (vertex colors); the canonical
    order then keeps every cell together and in its position.
    """
    if g.n == 0:
        return []
    if cells is None:
        deg_cells: dict[int, list[int]] = {}
        for v in range(g.n):
            deg_cells.setdefault(g.adj[v].bit_count(), []).append(v)
        cells = [deg_cells[d] for d in sorted(deg_cells)]
    else:
        cells = [sorted(c) for c in cells if c]
    search = _Search(g)
    search.run(cells, (), [])
    return search.best_order


def canonical_form_colored(g: Graph, colors) -> bytes:
    """Canonical form of a vertex-colored graph (colors must be sortable)."""
    groups: dict = {}
    for v, c in enumerate(colors):
        groups.setdefault(c, []).append(v)
    keys = sorted(groups)
    order = canonical_order(g, [groups[k] for k in keys])
    head = repr([(k, len(groups[k])) for k in keys]).encode()
    return head + b"|" + to_graph6(relabel(g, order)).encode("ascii")


def canonical_graph(g: Graph) -> Graph:
    return relabel(g, canonical_order(g))


def canonical_form(g: Graph) -> bytes:
    """Bytes equal for two graphs exactly when they are isomorphic."""
    return to_graph6(canonical_graph(g)).encode("ascii")


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)

"""Grundy, partial Grundy and b-atoms: witnesses, generation and catalogs.

A witness is a partition ``D_1..D_t`` of the atom's vertices into independent
sets together with one center vertex per part.

* ``pgrundy``: ``|D_i| <= t-i+1`` and ``c_i`` has a neighbour in every
  ``D_j`` with ``j < i``.
* ``b``: ``|D_i| <= t`` and ``c_i`` has a neighbour in every ``D_j``,
  ``j != i``.
* ``grundy``: the parts are the layers of the inductive construction
  (``D_1`` is the starting ``K_1``, ``D_{s+1}`` an independent set of at most
  ``|D_1| + ... + |D_s|`` vertices dominating all earlier layers); the
  centers carry no condition and are the first vertex of each part.

Minimal atoms are generated from *irredundant* witnesses only: in a minimal
atom, each non-center vertex of ``D_j`` is the only ``D_j``-neighbour of some
center that needs one, otherwise deleting it leaves an atom. Candidates are
grown one non-center at a time and abandoned as soon as the partial graph
contains a smaller minimal atom (or a forbidden graph), which is safe because
the partial graph is an induced subgraph of everything grown from it.
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement, permutations
from pathlib import Path

from .canon import canonical_form, canonical_form_colored
from .graph import Graph, bits, components, cycle_graph, girth, relabel
from .io import from_graph6, to_graph6
from .match import exists_from, search_order

KINDS = ("grundy", "pgrundy", "b")
GENERATOR_VERSION = 2

# Full catalogs are generated only up to these t; beyond, only catalogs
# truncated to at most FREE_ORDER vertices are produced.
T_CAP = {"grundy": 4, "pgrundy": 4, "b": 4}
# Largest atom order generated without a forbidden-subgraph restriction.
ORDER_CAP = {"grundy": 8, "pgrundy": 10, "b": 9}
FREE_ORDER = 8
# With forbidden subgraphs the catalogs are much smaller.
AVOID_ORDER_CAP = 16


class CatalogCapError(ValueError):
    """The requested catalog is beyond the configured generation caps."""


def order_bound(kind: str, t: int) -> int:
    """Largest possible number of vertices of a ``kind`` t-atom."""
    if t < 1:
        return 0
    if kind == "grundy":
        return 1 << (t - 1)
    if kind == "pgrundy":
        return t * (t + 1) // 2
    if kind == "b":
        return t * t
    raise ValueError(f"unknown atom kind {kind!r}")


@dataclass(frozen=True)
class AtomWitness:
    graph: Graph
    kind: str
    t: int
    parts: tuple[tuple[int, ...], ...]
    center: tuple[int, ...]

    def relabeled(self, order: list[int]) -> AtomWitness:
        """Same atom with vertex ``i`` being old vertex ``order[i]``."""
        pos = {v: i for i, v in enumerate(order)}
        parts = tuple(tuple(sorted(pos[v] for v in p)) for p in self.parts)
        return AtomWitness(relabel(self.graph, order), self.kind, self.t, parts,
                           tuple(pos[c] for c in self.center))

    def to_json(self) -> dict:
        return {"graph6": to_graph6(self.graph), "kind": self.kind, "t": self.t,
                "parts": [list(p) for p in self.parts], "center": list(self.center)}

    @classmethod
    def from_json(cls, d: dict) -> AtomWitness:
        return cls(from_graph6(d["graph6"]), d["kind"], int(d["t"]),
                   tuple(tuple(p) for p in d["parts"]), tuple(d["center"]))


def validate_witness(w: AtomWitness) -> bool:
    g, t = w.graph, w.t
    if w.kind not in KINDS or t < 1 or len(w.parts) != t or len(w.center) != t:
        return False
    seen = 0
    pmask = []
    for p in w.parts:
        m = 0
        for v in p:
            if not 0 <= v < g.n or seen >> v & 1 or m >> v & 1:
                return False
            m |= 1 << v
        if not m:
            return False
        seen |= m
        pmask.append(m)
    if seen != g.full_mask:
        return False
    for m in pmask:
        if any(g.adj[v] & m for v in bits(m)):
            return False
    for i, c in enumerate(w.center):
        if not pmask[i] >> c & 1:
            return False
    if w.kind == "pgrundy":
        if any(len(p) > t - i for i, p in enumerate(w.parts)):
            return False
        return all(g.adj[w.center[i]] & pmask[j] for i in range(t) for j in range(i))
    if w.kind == "b":
        if any(len(p) > t for p in w.parts):
            return False
        return all(g.adj[w.center[i]] & pmask[j] for i in range(t) for j in range(t) if i != j)
    # grundy: the layered construction
    if len(w.parts[0]) != 1:
        return False
    total = 1
    for s in range(1, t):
        if len(w.parts[s]) > total:
            return False
        total += len(w.parts[s])
    for i in range(t):
        for v in bits(pmask[i]):
            if any(not g.adj[v] & pmask[j] for j in range(i + 1, t)):
                return False
    return True


# -- witness search ------------------------------------------------------

def find_witness(g: Graph, kind: str, t: int) -> AtomWitness | None:
    """Search for any witness making ``g`` a ``kind`` t-atom."""
    if t < 1 or g.n < t or g.n > order_bound(kind, t):
        return None
    if kind == "grundy":
        return _find_grundy_witness(g, t)
    n = g.n
    deg = g.degrees()
    if kind == "b":
        center_sets = (c for c in combinations(range(n), t) if all(deg[v] >= t - 1 for v in c))
        cap = [t] * t
    else:
        center_sets = (c for c in permutations(range(n), t) if all(deg[c[i]] >= i for i in range(t)))
        cap = [t - i for i in range(t)]
    for centers in center_sets:
        part = _assign_parts(g, kind, t, centers, cap)
        if part is not None:
            parts = tuple(tuple(v for v in range(n) if part[v] == i) for i in range(t))
            w = AtomWitness(g, kind, t, parts, tuple(centers))
            if validate_witness(w):
                return w
    return None


def _needs(kind: str, t: int, i: int) -> list[int]:
    return [j for j in range(t) if j != i] if kind == "b" else list(range(i))


def _assign_parts(g, kind, t, centers, cap):
    n = g.n
    part = [-1] * n
    size = [0] * t
    for i, c in enumerate(centers):
        part[c] = i
        size[i] = 1
    for i, c in enumerate(centers):
        if any(part[u] == i for u in bits(g.adj[c])):
            return None
    needs = [_needs(kind, t, i) for i in range(t)]

    def center_ok(i: int) -> bool:
        c = centers[i]
        have = set()
        free = 0
        for u in bits(g.adj[c]):
            if part[u] >= 0:
                have.add(part[u])
            else:
                free += 1
        return sum(1 for j in needs[i] if j not in have) <= free

    if not all(center_ok(i) for i in range(t)):
        return None
    rest = [v for v in range(n) if part[v] < 0]

    def rec(k: int) -> bool:
        if k == len(rest):
            return True
        v = rest[k]
        blocked = {part[u] for u in bits(g.adj[v])}
        touched = [i for i, c in enumerate(centers) if g.adj[c] >> v & 1]
        for i in range(t):
            if i in blocked or size[i] >= cap[i]:
                continue
            part[v] = i
            size[i] += 1
            if all(center_ok(j) for j in touched) and rec(k + 1):
                return True
            size[i] -= 1
        part[v] = -1
        return False

    return part if rec(0) else None


def _find_grundy_witness(g: Graph, t: int) -> AtomWitness | None:
    n = g.n
    deg = g.degrees()
    adj = [list(bits(g.adj[v])) for v in range(n)]
    layer = [-1] * n
    size = [0] * t

    def ok(v: int) -> bool:
        # v needs a neighbour in every later layer; count what is still open
        have = set()
        free = 0
        for u in adj[v]:
            if layer[u] >= 0:
                have.add(layer[u])
            else:
                free += 1
        return sum(1 for j in range(layer[v] + 1, t) if j not in have) <= free

    for root in range(n):
        if deg[root] < t - 1:
            continue
        layer[root] = 0
        size[0] = 1
        others = sorted((v for v in range(n) if v != root), key=lambda v: -deg[v])

        def rec(k: int) -> AtomWitness | None:
            if k == len(others):
                parts = tuple(tuple(v for v in range(n) if layer[v] == i) for i in range(t))
                if any(not p for p in parts):
                    return None
                w = AtomWitness(g, "grundy", t, parts, tuple(p[0] for p in parts))
                return w if validate_witness(w) else None
            if sum(1 for s in size if s == 0) > len(others) - k:
                return None
            v = others[k]
            blocked = {layer[u] for u in adj[v]}
            placed = [u for u in adj[v] if layer[u] >= 0]
            for i in range(max(1, t - 1 - deg[v]), t):
                if i in blocked:
                    continue
                # the layers before i can still grow by the unassigned vertices
                if size[i] + 1 > sum(size[:i]) + (len(others) - k - 1):
                    continue
                layer[v] = i
                size[i] += 1
                if ok(v) and all(ok(u) for u in placed):
                    w = rec(k + 1)
                    if w is not None:
                        return w
                size[i] -= 1
            layer[v] = -1
            return None

        w = rec(0)
        layer[root] = -1
        size[0] = 0
        if w is not None:
            return w
    return None


def is_atom(g: Graph, kind: str, t: int) -> bool:
    return find_witness(g, kind, t) is not None


# -- downward construction -------------------------------------------------

def atom_downward(w: AtomWitness, t_prime: int) -> AtomWitness:
    """A ``t_prime``-atom inside ``w``: drop the last parts, then every vertex
    with no neighbour among the first ``t_prime`` centers.

    Centers themselves are kept (for pgrundy ``c_1`` may have no neighbour in
    the lower centers but is still part of the smaller atom).
    """
    if w.kind not in ("pgrundy", "b"):
        raise ValueError("atom_downward is defined for pgrundy and b atoms")
    if not 1 <= t_prime < w.t:
        raise ValueError(f"t' must satisfy 1 <= t' < {w.t}, got {t_prime}")
    g = w.graph
    centers = w.center[:t_prime]
    cmask = 0
    for c in centers:
        cmask |= 1 << c
    keep = []
    for p in w.parts[:t_prime]:
        for v in p:
            if cmask >> v & 1 or g.adj[v] & cmask:
                keep.append(v)
    keep.sort()
    pos = {v: i for i, v in enumerate(keep)}
    from .graph import induced_subgraph

    h = induced_subgraph(g, keep)
    parts = tuple(tuple(sorted(pos[v] for v in p if v in pos)) for p in w.parts[:t_prime])
    return AtomWitness(h, w.kind, t_prime, parts, tuple(pos[c] for c in centers))


# -- catalogs ---------------------------------------------------------------

@dataclass
class AtomCatalog:
    kind: str
    t: int
    atoms: list[AtomWitness]
    minimal_only: bool = True
    max_order: int | None = None
    avoid: tuple[str, ...] = field(default=())

    @property
    def graphs(self) -> list[Graph]:
        return [a.graph for a in self.atoms]

    @property
    def complete(self) -> bool:
        """True when no order truncation applies."""
        return self.max_order is None or self.max_order >= order_bound(self.kind, self.t)

    def __len__(self) -> int:
        return len(self.atoms)

    def __iter__(self):
        return iter(self.atoms)

    def upto(self, order: int) -> AtomCatalog:
        return AtomCatalog(self.kind, self.t, [a for a in self.atoms if a.graph.n <= order],
                           self.minimal_only, order, self.avoid)

    def to_json(self) -> list[dict]:
        return [a.to_json() for a in self.atoms]

    def save(self, path: str | os.PathLike) -> None:
        Path(path).write_text(json.dumps(self.to_json(), indent=1) + "\n")

    @classmethod
    def load(cls, path: str | os.PathLike, minimal_only: bool = True) -> AtomCatalog:
        data = json.loads(Path(path).read_text())
        atoms = [AtomWitness.from_json(d) for d in data]
        if not atoms:
            raise ValueError(f"{path}: empty catalog carries no kind/t")
        return cls(atoms[0].kind, atoms[0].t, atoms, minimal_only)


def _finalize(found: dict[bytes, AtomWitness]) -> list[AtomWitness]:
    """Relabel every atom into matching order and sort by (order, form)."""
    out = []
    for form in sorted(found, key=lambda f: (len(f), f)):
        w = found[form]
        out.append(w.relabeled(search_order(w.graph)))
    out.sort(key=lambda a: (a.graph.n, canonical_form(a.graph)))
    return out


class PatternSet:
    """Graphs to look for as induced subgraphs, prepared for rooted search.

    ``contains_rooted(host, v)`` only finds copies that use host vertex ``v``;
    it is enough when ``host - v`` is already known to be free of them.
    """

    def __init__(self, graphs=()):
        self.graphs: list[Graph] = []
        self._info: list[tuple] = []
        graphs = list(graphs)
        # C_3..C_k together are found by one girth test: a shortest cycle is induced
        forms = {canonical_form(g) for g in graphs}
        k = 2
        while canonical_form(cycle_graph(k + 1)) in forms:
            k += 1
        self.cycle_limit = k
        skip = {canonical_form(cycle_graph(j)) for j in range(3, k + 1)}
        for g in graphs:
            if canonical_form(g) not in skip:
                self.add(g)

    def __len__(self) -> int:
        return len(self.graphs) + max(0, self.cycle_limit - 2)

    def _short_cycle(self, host: Graph) -> bool:
        return self.cycle_limit >= 3 and girth(host) <= self.cycle_limit

    def add(self, g: Graph) -> None:
        g = relabel(g, search_order(g))
        rooted = []
        for r in _orbit_reps(g):
            q = relabel(g, _bfs_from(g, r))
            rooted.append((q.adj, [row.bit_count() for row in q.adj]))
        degs = sorted(g.degrees(), reverse=True)
        self.graphs.append(g)
        self._info.append((g.n, g.m, degs, g.adj, [row.bit_count() for row in g.adj], rooted))

    def _host(self, host: Graph):
        deg = host.degrees()
        top = max(deg, default=0)
        ge = [0] * (host.n + 1)
        for d in range(top + 1):
            m = 0
            for v in range(host.n):
                if deg[v] >= d:
                    m |= 1 << v
            ge[d] = m
        return deg, sorted(deg, reverse=True), ge, top, sum(deg) // 2

    @staticmethod
    def _fits(n, m, degs, host, hsorted, top, hm) -> bool:
        if n > host.n or m > hm or degs[0] > top:
            return False
        return all(a <= b for a, b in zip(degs, hsorted))

    def contains_any(self, host: Graph) -> bool:
        if self._short_cycle(host):
            return True
        if not self.graphs:
            return False
        deg, hsorted, ge, top, hm = self._host(host)
        full = host.full_mask
        for n, m, degs, padj, pdeg, _ in self._info:
            if self._fits(n, m, degs, host, hsorted, top, hm):
                if exists_from(host.adj, full, padj, [ge[d] for d in pdeg]):
                    return True
        return False

    def contains_rooted(self, host: Graph, v: int) -> bool:
        if self._short_cycle(host):
            return True
        if not self.graphs:
            return False
        deg, hsorted, ge, top, hm = self._host(host)
        full = host.full_mask
        dv = deg[v]
        pin = 1 << v
        for n, m, degs, _, _, rooted in self._info:
            if not self._fits(n, m, degs, host, hsorted, top, hm):
                continue
            for qadj, qdeg in rooted:
                if qdeg[0] > dv:
                    continue
                cand = [ge[d] & ~pin for d in qdeg]
                cand[0] = pin
                if exists_from(host.adj, full, qadj, cand):
                    return True
        return False


def _orbit_reps(g: Graph) -> list[int]:
    """One vertex per orbit of the automorphisms found by the canonical search.

    If those automorphisms generate a proper subgroup the orbits come out finer,
    which only costs extra roots.
    """
    from .canon import _Search

    if g.n == 0:
        return []
    deg_cells: dict[int, list[int]] = {}
    for v in range(g.n):
        deg_cells.setdefault(g.adj[v].bit_count(), []).append(v)
    s = _Search(g)
    s.run([deg_cells[d] for d in sorted(deg_cells)], (), [])
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for perm in s.autos:
        for a, b in enumerate(perm):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    return sorted({find(v) for v in range(g.n)})


def _bfs_from(g: Graph, root: int) -> list[int]:
    order = [root]
    seen = {root}
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        for u in sorted(bits(g.adj[v]), key=lambda u: (-g.adj[u].bit_count(), u)):
            if u not in seen:
                seen.add(u)
                order.append(u)
    order += [v for v in search_order(g) if v not in seen]
    return order


# -- generation -------------------------------------------------------------

def _families(required: int, allowed: int, max_size: int) -> list[tuple[int, ...]]:
    """Irredundant covers of ``required`` by subsets of ``allowed``.

    Each chosen subset needs a private element of ``required`` (one no other
    chosen subset contains), and together they must cover ``required``.
    """
    if not required:
        return [()]
    subsets = []
    sub = allowed
    while sub:
        if sub & required:
            subsets.append(sub)
        sub = (sub - 1) & allowed
    subsets.sort()
    out = []
    limit = min(max_size, required.bit_count())

    def ok(fam: tuple[int, ...]) -> bool:
        for i, s in enumerate(fam):
            others = 0
            for j, o in enumerate(fam):
                if j != i:
                    others |= o
            if not s & required & ~others:
                return False
        return True

    for size in range(1, limit + 1):
        for fam in combinations(subsets, size):
            union = 0
            for s in fam:
                union |= s
            if union & required == required and ok(fam):
                out.append(fam)
    return out


def _center_graphs(kind: str, t: int, room: int | None = None) -> list[list[int]]:
    """Center graphs, keeping those that need at most ``room`` non-center colors.

    A color j needs a non-center vertex when some center that must see color
    j is not adjacent to c_j. For b-atoms a missing center edge makes both
    ends needy; for pG-atoms only the lower color.
    """
    pairs = list(combinations(range(t), 2))
    room = t if room is None else min(room, t)
    out = []
    seen = set()
    for size in range(room + 1):
        for needy in combinations(range(t), size):
            ns = set(needy)
            if kind == "b":
                free = [p for p in pairs if p[0] in ns and p[1] in ns]
            else:
                free = [p for p in pairs if p[0] in ns]
            for code in range(1 << len(free)):
                adj = [(1 << t) - 1 & ~(1 << v) for v in range(t)]
                for k, (u, v) in enumerate(free):
                    if code >> k & 1:
                        adj[u] &= ~(1 << v)
                        adj[v] &= ~(1 << u)
                g = Graph(t, adj)
                # centers are interchangeable for b, so isomorphic center graphs repeat work
                key = canonical_form(g) if kind == "b" else tuple(adj)
                if key in seen:
                    continue
                seen.add(key)
                out.append(adj)
    return out


def _skeletons(kind: str, t: int, max_order: int):
    """Yield ``(center_adj, [(color, center_mask), ...])`` for irredundant witnesses."""
    caps = [t] * t if kind == "b" else [t - i for i in range(t)]
    full = (1 << t) - 1
    for cadj in _center_graphs(kind, t, max_order - t):
        per_color = []
        for j in range(t):
            required = 0
            for i in range(t):
                if i != j and j in _needs(kind, t, i) and not cadj[i] >> j & 1:
                    required |= 1 << i
            allowed = full & ~(1 << j)
            per_color.append(_families(required, allowed, caps[j] - 1))

        def rec(j: int, acc: list, room: int):
            if j == t:
                yield cadj, list(acc)
                return
            for fam in per_color[j]:
                if len(fam) <= room:
                    acc.extend((j, s) for s in fam)
                    yield from rec(j + 1, acc, room - len(fam))
                    del acc[len(acc) - len(fam):]

        yield from rec(0, [], max_order - t)


def _structured_minimal(kind: str, t: int, max_order: int, forbidden: PatternSet,
                        progress=None) -> dict[bytes, AtomWitness]:
    known = PatternSet()
    found: dict[bytes, AtomWitness] = {}
    # per order, per center graph: a trie of non-center specs so that
    # skeletons sharing a prefix share its edge search
    tries: dict[int, dict[tuple, dict]] = {}
    for cadj, nonc in _skeletons(kind, t, max_order):
        node = tries.setdefault(t + len(nonc), {}).setdefault(tuple(cadj), {})
        for spec in nonc:
            node = node.setdefault(spec, {})
    for n in sorted(tries):
        fresh: dict[bytes, AtomWitness] = {}
        for cadj, trie in tries[n].items():
            _search_trie(kind, t, n, list(cadj), trie, known, forbidden, found, fresh)
        for form, w in sorted(fresh.items()):
            known.add(w.graph)
            found[form] = w
        if progress:
            progress(n, len(fresh))
    return found


def _search_trie(kind, t, n, cadj, trie, known, forbidden, found, fresh):
    base = Graph(t, cadj)
    if known.contains_any(base) or forbidden.contains_any(base):
        return
    color = list(range(t))
    # centers get their own colors; non-centers are colored by part
    labels = [(0, i) for i in range(t)]
    seen: set = set()

    def rec(node: dict, adj: list[int]) -> None:
        v = len(adj)
        if v == n:
            g = Graph(n, adj)
            form = canonical_form(g)
            if form not in fresh and form not in found:
                parts = tuple(tuple(u for u in range(n) if color[u] == i) for i in range(t))
                fresh[form] = AtomWitness(g, kind, t, parts, tuple(range(t)))
            return
        for (c, cmask), child in node.items():
            cands = [u for u in range(t, v) if color[u] != c]
            color.append(c)
            for code in range(1 << len(cands)):
                row = cmask
                for b, u in enumerate(cands):
                    if code >> b & 1:
                        row |= 1 << u
                new = [a | (1 << v if row >> u & 1 else 0) for u, a in enumerate(adj)]
                new.append(row)
                h = Graph(v + 1, new)
                if known.contains_rooted(h, v) or forbidden.contains_rooted(h, v):
                    continue
                if v + 1 < n:
                    # isomorphic prefixes (fixing centers, keeping colors) have
                    # isomorphic continuations below the same trie node
                    state = (id(child), canonical_form_colored(h, labels + [(1, c)]))
                    if state in seen:
                        continue
                    seen.add(state)
                labels.append((1, c))
                rec(child, new)
                labels.pop()
            color.pop()

    rec(trie, list(cadj))


def _grundy_family(t: int, max_order: int) -> dict[bytes, AtomWitness]:
    """Every Grundy t-atom with at most ``max_order`` vertices, by construction."""
    level: dict[bytes, tuple[Graph, list[list[int]]]] = {
        canonical_form(Graph(1, [0])): (Graph(1, [0]), [[0]])}
    for s in range(1, t):
        nxt: dict[bytes, tuple[Graph, list[list[int]]]] = {}
        left = t - 1 - s  # layers still to add after this one, one vertex each at least
        for g, layers in level.values():
            n0 = g.n
            top = min(n0, max_order - left - n0)
            full = g.full_mask
            for size in range(1, top + 1):
                for nbhds in combinations_with_replacement(range(1, full + 1), size):
                    union = 0
                    for m in nbhds:
                        union |= m
                    if union != full:
                        continue
                    adj = list(g.adj) + list(nbhds)
                    for k, m in enumerate(nbhds):
                        for u in bits(m):
                            adj[u] |= 1 << (n0 + k)
                    h = Graph(n0 + size, adj)
                    form = canonical_form(h)
                    if form not in nxt:
                        nxt[form] = (h, layers + [list(range(n0, n0 + size))])
        level = nxt
    out = {}
    for form, (g, layers) in level.items():
        parts = tuple(tuple(p) for p in layers)
        out[form] = AtomWitness(g, "grundy", t, parts, tuple(p[0] for p in parts))
    return out


def _filter_minimal(found: dict[bytes, AtomWitness], forbidden: PatternSet) -> dict[bytes, AtomWitness]:
    minimal = PatternSet()
    out = {}
    for form in sorted(found, key=lambda f: (found[f].graph.n, f)):
        g = found[form].graph
        if forbidden.contains_any(g) or minimal.contains_any(g):
            continue
        minimal.add(g)
        out[form] = found[form]
    return out


def _all_atoms_small(kind: str, t: int, max_order: int, forbidden: PatternSet) -> dict[bytes, AtomWitness]:
    from .enumerate import all_graphs

    out = {}
    for n in range(t, max_order + 1):
        for g in all_graphs(n):
            if forbidden.contains_any(g):
                continue
            w = find_witness(g, kind, t)
            if w is not None:
                out[canonical_form(g)] = w
    return out


_MEMORY: dict[tuple, AtomCatalog] = {}
NONMINIMAL_ORDER_CAP = 7


def default_cache_dir() -> Path | None:
    d = os.environ.get("TATOMS_CACHE")
    if d == "":
        return None
    return Path(d) if d else Path.home() / ".cache" / "tatoms"


def _cache_name(kind, t, minimal, order, avoid) -> str:
    tag = hashlib.sha1("|".join(avoid).encode()).hexdigest()[:10] if avoid else "none"
    return f"{kind}-t{t}-{'min' if minimal else 'all'}-n{order}-avoid-{tag}-v{GENERATOR_VERSION}.json"


def generate_atoms(kind: str, t: int, minimal: bool = True, max_order: int | None = None,
                   avoid=(), cache_dir: str | os.PathLike | None = "default",
                   force: bool = False, progress=None) -> AtomCatalog:
    """Catalog of ``kind`` t-atoms, one per isomorphism class.

    ``max_order`` truncates to atoms with at most that many vertices, and
    ``avoid`` (graphs or graph6 strings) drops atoms containing any of them as
    induced subgraphs. For a hereditary restriction like this, minimal atoms
    below the truncation are exactly the minimal atoms of the restricted class.
    Large catalogs raise :class:`CatalogCapError` unless ``force`` is set.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown atom kind {kind!r}")
    if t < 1:
        raise ValueError(f"t must be positive, got {t}")
    bound = order_bound(kind, t)
    order = bound if max_order is None else min(max_order, bound)
    avoid_graphs = [from_graph6(a) if isinstance(a, str) else a for a in avoid]
    avoid_key = tuple(sorted(canonical_form(a).decode() for a in avoid_graphs))
    if not force:
        if not minimal:
            cap = NONMINIMAL_ORDER_CAP
        else:
            cap = AVOID_ORDER_CAP if avoid_graphs else ORDER_CAP[kind]
        if order > cap or (t > T_CAP[kind] and order > FREE_ORDER):
            raise CatalogCapError(
                f"{kind} catalog for t={t} up to {order} vertices is beyond the cap "
                f"({cap} vertices, t <= {T_CAP[kind]}); pass max_order or force")
    mem_key = (kind, t, minimal, order, avoid_key)
    directory = default_cache_dir() if cache_dir == "default" else (Path(cache_dir) if cache_dir else None)
    path = directory / _cache_name(kind, t, minimal, order, avoid_key) if directory else None
    if mem_key in _MEMORY:
        if path is not None and not path.exists():
            _write_cache(path, _MEMORY[mem_key])
        return _MEMORY[mem_key]
    if path is not None and path.exists():
        try:
            atoms = [AtomWitness.from_json(d) for d in json.loads(path.read_text())]
            cat = AtomCatalog(kind, t, atoms, minimal, order, avoid_key)
            _MEMORY[mem_key] = cat
            return cat
        except (ValueError, KeyError, TypeError):
            pass  # unreadable cache entry, regenerate
    forbidden = PatternSet(avoid_graphs)
    if kind == "grundy":
        found = _grundy_family(t, order)
        found = {f: w for f, w in found.items() if not forbidden.contains_any(w.graph)}
        if minimal:
            found = _filter_minimal(found, forbidden)
    elif minimal:
        found = _structured_minimal(kind, t, order, forbidden, progress)
    else:
        found = _all_atoms_small(kind, t, order, forbidden)
    cat = AtomCatalog(kind, t, _finalize(found), minimal, order, avoid_key)
    _MEMORY[mem_key] = cat
    if path is not None:
        _write_cache(path, cat)
    return cat


def _write_cache(path: Path, cat: AtomCatalog) -> None:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps(cat.to_json()) + "\n")
        tmp.replace(path)
    except OSError:
        pass  # the cache is an optimisation only


def atom_component_count_check(catalog: AtomCatalog) -> bool:
    """Does every member of a minimal catalog have at most t components?"""
    if not catalog.minimal_only:
        raise ValueError("component bound is stated for minimal catalogs")
    return all(len(components(w.graph)) <= catalog.t for w in catalog)

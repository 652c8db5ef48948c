"""Small-graph generators: exhaustive non-isomorphic lists and seeded samples."""

from __future__ import annotations

import random
from functools import lru_cache

from .canon import canonical_form, canonical_graph
from .graph import Graph, girth, is_tree


@lru_cache(maxsize=None)
def _graphs_on(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph(0, []),)
    seen: dict[bytes, Graph] = {}
    for base in _graphs_on(n - 1):
        for nbrs in range(1 << (n - 1)):
            adj = list(base.adj) + [nbrs]
            for u in range(n - 1):
                if nbrs >> u & 1:
                    adj[u] |= 1 << (n - 1)
            g = Graph(n, adj)
            key = canonical_form(g)
            if key not in seen:
                seen[key] = canonical_graph(g)
    return tuple(seen[k] for k in sorted(seen))


def all_graphs(n: int) -> list[Graph]:
    """One canonical representative per isomorphism class on ``n`` vertices."""
    return list(_graphs_on(n))


def all_graphs_upto(n_max: int, n_min: int = 1) -> list[Graph]:
    out = []
    for n in range(n_min, n_max + 1):
        out.extend(_graphs_on(n))
    return out


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform labelled tree via a random Pruefer sequence."""
    if n <= 2:
        return Graph.from_edges(n, [(0, 1)] if n == 2 else [])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (w for w in range(n) if degree[w] == 1)
    edges.append((u, v))
    g = Graph.from_edges(n, edges)
    assert is_tree(g)
    return g


def random_high_girth(n: int, min_girth: int, rng: random.Random, tries: int = 400) -> Graph:
    """Random graph of girth ``>= min_girth``: a random tree plus edges that keep the girth."""
    g = random_tree(n, rng)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if not g.has_edge(u, v)]
    rng.shuffle(pairs)
    extra = rng.randint(1, 3)
    for u, v in pairs[:tries]:
        if extra == 0:
            break
        adj = list(g.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        h = Graph(n, adj)
        if girth(h) >= min_girth:
            g = h
            extra -= 1
    return g

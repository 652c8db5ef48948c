"""Induced subgraph isomorphism by backtracking with forward checking."""

from __future__ import annotations

from collections.abc import Iterator

from .graph import Graph, bits


def iter_induced(host: Graph, pattern: Graph, within: int | None = None,
                 pin: tuple[int, int] | None = None) -> Iterator[tuple[int, ...]]:
    """Yield every induced embedding of ``pattern`` into ``host``.

    An embedding is a tuple ``f`` with ``f[i]`` the host vertex playing pattern
    vertex ``i``. Embeddings come out in lexicographic order, so the first one
    is the lexicographically least. Pattern vertices are matched in label
    order; patterns whose labels follow a connected (BFS) order prune best.
    ``within`` restricts host vertices to a mask; ``pin = (i, h)`` forces
    pattern vertex ``i`` onto host vertex ``h``.
    """
    k = pattern.n
    avail = host.full_mask if within is None else within
    if k == 0:
        yield ()
        return
    if k > avail.bit_count():
        return
    hadj = host.adj
    full = host.full_mask
    pdeg = [row.bit_count() for row in pattern.adj]
    by_deg: dict[int, int] = {}
    for d in set(pdeg):
        m = 0
        for h in bits(avail):
            if hadj[h].bit_count() >= d:
                m |= 1 << h
        by_deg[d] = m
    cand0 = [by_deg[pdeg[i]] for i in range(k)]
    if pin is not None:
        cand0[pin[0]] &= 1 << pin[1]
    if any(c == 0 for c in cand0):
        return
    padj = pattern.adj
    mapping = [0] * k

    def rec(i: int, cand: list[int]) -> Iterator[tuple[int, ...]]:
        pool = cand[i]
        while pool:
            low = pool & -pool
            pool ^= low
            h = low.bit_length() - 1
            mapping[i] = h
            if i + 1 == k:
                yield tuple(mapping)
                continue
            row = hadj[h]
            non = full & ~row & ~low
            prow = padj[i]
            nxt = cand[:]
            ok = True
            for p in range(i + 1, k):
                c = nxt[p] & (row if prow >> p & 1 else non)
                if not c:
                    ok = False
                    break
                nxt[p] = c
            if ok:
                yield from rec(i + 1, nxt)

    yield from rec(0, cand0)


def find_induced(host: Graph, pattern: Graph, within: int | None = None) -> tuple[int, ...] | None:
    """Lexicographically least induced embedding, or None."""
    return next(iter_induced(host, pattern, within), None)


def contains_induced(host: Graph, pattern: Graph) -> bool:
    return find_induced(host, pattern) is not None


def induced_occurrences(host: Graph, pattern: Graph) -> list[int]:
    """Distinct vertex sets (as masks) carrying an induced copy of ``pattern``."""
    seen: set[int] = set()
    out = []
    for emb in iter_induced(host, pattern):
        m = 0
        for h in emb:
            m |= 1 << h
        if m not in seen:
            seen.add(m)
            out.append(m)
    return out


def search_order(g: Graph) -> list[int]:
    """Vertex order good for matching: big components first, BFS inside each.

    BFS starts at a maximum-degree vertex and visits neighbours by decreasing
    degree, so every vertex after the first of its component has an earlier
    neighbour.
    """
    from .graph import components

    comps = sorted(components(g), key=lambda c: (-len(c), c[0]))
    order: list[int] = []
    for comp in comps:
        start = max(comp, key=lambda v: (g.adj[v].bit_count(), -v))
        seen = {start}
        queue = [start]
        while queue:
            v = queue.pop(0)
            order.append(v)
            nbrs = sorted((u for u in bits(g.adj[v]) if u not in seen),
                          key=lambda u: (-g.adj[u].bit_count(), u))
            for u in nbrs:
                seen.add(u)
                queue.append(u)
    return order


def exists_from(hadj, full: int, padj, cand: list[int]) -> bool:
    """Is there an induced embedding of ``padj`` with position ``i`` drawn from ``cand[i]``?

    Low-level kernel for repeated tests against one host: the caller prepares
    the candidate masks (degree filters, pinned vertices) once per host.
    """
    k = len(padj)

    def rec(i: int, cand: list[int]) -> bool:
        pool = cand[i]
        prow = padj[i]
        last = i + 1 == k
        while pool:
            low = pool & -pool
            pool ^= low
            if last:
                return True
            row = hadj[low.bit_length() - 1]
            non = full & ~row & ~low
            nxt = cand[:]
            for p in range(i + 1, k):
                c = nxt[p] & (row if prow >> p & 1 else non)
                if not c:
                    break
                nxt[p] = c
            else:
                if rec(i + 1, nxt):
                    return True
        return False

    return rec(0, cand)

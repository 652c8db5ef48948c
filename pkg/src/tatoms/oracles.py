"""Brute-force coloring parameters, used as ground truth.

Nothing here knows about atoms: every parameter is computed straight from
its definition by exhaustive search, so it can be compared against the
atom-based routes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .graph import Graph, bits, induced_subgraph, m_degree

DEFAULT_CAP = 10
RELAXED_CAP = 9

KINDS = ("proper", "grundy", "partial_grundy", "b_coloring")


class OracleCapError(ValueError):
    """The graph is larger than the configured exhaustive-search cap."""


def _check_cap(g: Graph, cap: int | None, what: str) -> None:
    if cap is not None and g.n > cap:
        raise OracleCapError(f"{what}: n={g.n} exceeds oracle cap {cap}")


@dataclass(frozen=True)
class ColoringCertificate:
    """A coloring ``colors[v]`` in ``1..k`` plus one witness vertex per class.

    ``witnesses[i - 1]`` is the Grundy vertex (partial_grundy) or b-vertex
    (b_coloring) of color ``i``; it is empty for ``proper`` and ``grundy``.
    """

    colors: tuple[int, ...]
    kind: str
    witnesses: tuple[int, ...] = field(default=())

    @property
    def k(self) -> int:
        return max(self.colors, default=0)

    def to_json(self) -> dict:
        return {"kind": self.kind, "k": self.k, "colors": list(self.colors),
                "witnesses": list(self.witnesses)}


def _neighbor_colors(g: Graph, colors, v: int) -> set[int]:
    return {colors[u] for u in bits(g.adj[v])}


def is_grundy_vertex(g: Graph, colors, v: int) -> bool:
    seen = _neighbor_colors(g, colors, v)
    return all(j in seen for j in range(1, colors[v]))


def is_b_vertex(g: Graph, colors, v: int, k: int) -> bool:
    seen = _neighbor_colors(g, colors, v)
    return all(j in seen for j in range(1, k + 1) if j != colors[v])


def check_certificate(g: Graph, cert: ColoringCertificate) -> bool:
    """Re-validate a certificate against its kind's defining property."""
    colors = cert.colors
    if len(colors) != g.n:
        return False
    k = cert.k
    if set(colors) != set(range(1, k + 1)):
        return False
    if any(colors[u] == colors[v] for u, v in g.edges()):
        return False
    if cert.kind == "proper":
        return True
    if cert.kind == "grundy":
        return all(is_grundy_vertex(g, colors, v) for v in range(g.n))
    if len(cert.witnesses) != k:
        return False
    for i, w in enumerate(cert.witnesses, start=1):
        if colors[w] != i:
            return False
        if cert.kind == "partial_grundy" and not is_grundy_vertex(g, colors, w):
            return False
        if cert.kind == "b_coloring" and not is_b_vertex(g, colors, w, k):
            return False
    return cert.kind in ("partial_grundy", "b_coloring")


# -- chromatic number --------------------------------------------------

def _k_colorable(g: Graph, k: int) -> list[int] | None:
    n = g.n
    colors = [0] * n

    def rec(done: int, used: int) -> bool:
        if done == n:
            return True
        # DSATUR choice: most distinct neighbour colors, then highest degree
        best, best_key = -1, None
        for v in range(n):
            if colors[v]:
                continue
            sat = len({colors[u] for u in bits(g.adj[v])} - {0})
            key = (sat, g.adj[v].bit_count())
            if best_key is None or key > best_key:
                best, best_key = v, key
        v = best
        blocked = {colors[u] for u in bits(g.adj[v])}
        for c in range(1, min(used + 1, k) + 1):
            if c in blocked:
                continue
            colors[v] = c
            if rec(done + 1, max(used, c)):
                return True
            colors[v] = 0
        return False

    return colors if rec(0, 0) else None


def chromatic_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    k = 1
    while _k_colorable(g, k) is None:
        k += 1
    return k


def proper_coloring(g: Graph) -> ColoringCertificate:
    k = chromatic_number(g)
    colors = _k_colorable(g, k) if g.n else []
    return ColoringCertificate(tuple(colors), "proper")


# -- Grundy number -----------------------------------------------------

def _grundy_degree_bound(g: Graph) -> int:
    """Largest k with k vertices whose i-th largest degree is >= k - i."""
    degs = sorted(g.degrees(), reverse=True)
    best = 0
    for k in range(1, g.n + 1):
        if all(degs[i] >= k - 1 - i for i in range(k)):
            best = k
    return best


def grundy_number(g: Graph, cap: int | None = DEFAULT_CAP) -> tuple[int, ColoringCertificate]:
    """Maximum number of colors first-fit uses over all vertex orderings."""
    _check_cap(g, cap, "grundy_number")
    n = g.n
    if n == 0:
        return 0, ColoringCertificate((), "grundy")
    bound = _grundy_degree_bound(g)
    colors = [0] * n
    seen: set[tuple[int, ...]] = set()
    best = [0, None]

    def rec(done: int, top: int) -> bool:
        if done == n:
            if top > best[0]:
                best[0], best[1] = top, tuple(colors)
            return best[0] >= bound
        key = tuple(colors)
        if key in seen:
            return False
        seen.add(key)
        for v in range(n):
            if colors[v]:
                continue
            nb = {colors[u] for u in bits(g.adj[v])}
            c = 1
            while c in nb:
                c += 1
            colors[v] = c
            hit = rec(done + 1, max(top, c))
            colors[v] = 0
            if hit:
                return True
        return False

    rec(0, 0)
    return best[0], ColoringCertificate(best[1], "grundy")


# -- partial Grundy number ---------------------------------------------

def _partial_grundy_coloring(g: Graph, k: int) -> tuple[list[int], list[int]] | None:
    """Proper coloring with colors 1..k where every class has a Grundy vertex."""
    n = g.n
    allc = (1 << k) - 1
    dom = [allc] * n  # bit c-1 set when color c is still possible

    def grundy_possible() -> list[int] | None:
        witnesses = []
        for c in range(1, k + 1):
            cbit = 1 << (c - 1)
            found = -1
            for v in range(n):
                if not dom[v] & cbit:
                    continue
                if _distinct_cover(g, dom, v, c - 1):
                    found = v
                    break
            if found < 0:
                return None
            witnesses.append(found)
        return witnesses

    def rec() -> list[int] | None:
        wit = grundy_possible()
        if wit is None:
            return None
        pick, size = -1, k + 1
        for v in range(n):
            s = dom[v].bit_count()
            if 1 < s < size:
                pick, size = v, s
        if pick < 0:
            return wit
        v = pick
        saved = list(dom)
        for c in bits(saved[v]):
            cbit = 1 << c
            dom[v] = cbit
            ok = True
            for u in bits(g.adj[v]):
                dom[u] &= ~cbit
                if not dom[u]:
                    ok = False
                    break
            if ok and _propagate(g, dom):
                r = rec()
                if r is not None:
                    return r
            dom[:] = saved
        return None

    if not _propagate(g, dom):
        return None
    wit = rec()
    if wit is None:
        return None
    colors = [d.bit_length() for d in dom]
    return colors, wit


def _distinct_cover(g: Graph, dom: list[int], v: int, need: int) -> bool:
    """Can distinct neighbours of ``v`` take colors 1..need? (bipartite matching)"""
    if need == 0:
        return True
    nbrs = list(bits(g.adj[v]))
    if len(nbrs) < need:
        return False
    owner: dict[int, int] = {}  # neighbour -> color matched to it

    def augment(c: int, tried: set[int]) -> bool:
        for u in nbrs:
            if dom[u] >> c & 1 and u not in tried:
                tried.add(u)
                if u not in owner or augment(owner[u], tried):
                    owner[u] = c
                    return True
        return False

    return all(augment(c, set()) for c in range(need))


def _propagate(g: Graph, dom: list[int]) -> bool:
    """Remove fixed colors from neighbours until stable; False on a wipe-out."""
    changed = True
    while changed:
        changed = False
        for v in range(g.n):
            d = dom[v]
            if d and d & (d - 1) == 0:
                for u in bits(g.adj[v]):
                    if dom[u] & d:
                        dom[u] &= ~d
                        if not dom[u]:
                            return False
                        changed = True
    return True


def partial_grundy_number(g: Graph, cap: int | None = DEFAULT_CAP) -> tuple[int, ColoringCertificate]:
    """Largest k admitting a partial Grundy k-coloring, by exhaustive search."""
    _check_cap(g, cap, "partial_grundy_number")
    if g.n == 0:
        return 0, ColoringCertificate((), "partial_grundy")
    for k in range(_grundy_degree_bound(g), 0, -1):
        found = _partial_grundy_coloring(g, k)
        if found is not None:
            colors, wit = found
            return k, ColoringCertificate(tuple(colors), "partial_grundy", tuple(wit))
    raise AssertionError("unreachable: one color always works for an independent class")


# -- b-chromatic number ------------------------------------------------

def b_coloring(g: Graph, k: int) -> ColoringCertificate | None:
    """Some b-k-coloring of ``g``, or None.

    b-vertices are chosen first (a k-subset of vertices of degree >= k-1,
    colored 1..k in order, which loses nothing up to color renaming); the
    remaining vertices are colored by depth-first search in a fixed order.
    """
    n = g.n
    if k < 1 or k > n:
        return None
    cand = [v for v in range(n) if g.adj[v].bit_count() >= k - 1]
    if len(cand) < k:
        return None
    for centers in combinations(cand, k):
        found = _b_coloring_with_centers(g, k, centers)
        if found is not None:
            return ColoringCertificate(tuple(found), "b_coloring", tuple(centers))
    return None


def _b_coloring_with_centers(g: Graph, k: int, centers: tuple[int, ...]) -> list[int] | None:
    n = g.n
    colors = [0] * n
    for i, x in enumerate(centers, start=1):
        colors[x] = i
    for x in centers:
        if any(colors[u] == colors[x] for u in bits(g.adj[x])):
            return None
    # centers' neighbourhoods first, then everything else
    order: list[int] = []
    placed = set(centers)
    for x in centers:
        for u in bits(g.adj[x]):
            if u not in placed:
                placed.add(u)
                order.append(u)
    order += [v for v in range(n) if v not in placed]
    need = (1 << k) - 1

    def center_ok(x: int) -> bool:
        seen = 0
        free = 0
        for u in bits(g.adj[x]):
            if colors[u]:
                seen |= 1 << (colors[u] - 1)
            else:
                free += 1
        missing = (need & ~seen & ~(1 << (colors[x] - 1))).bit_count()
        return missing <= free

    def rec(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        blocked = {colors[u] for u in bits(g.adj[v])}
        touched = [x for x in centers if g.adj[x] >> v & 1]
        for c in range(1, k + 1):
            if c in blocked:
                continue
            colors[v] = c
            if all(center_ok(x) for x in touched) and rec(i + 1):
                return True
        colors[v] = 0
        return False

    if not all(center_ok(x) for x in centers):
        return None
    return colors if rec(0) else None


def b_chromatic_number(g: Graph, cap: int | None = DEFAULT_CAP) -> tuple[int, ColoringCertificate]:
    """Largest k admitting a b-k-coloring, searching k = m(G) downward."""
    _check_cap(g, cap, "b_chromatic_number")
    if g.n == 0:
        return 0, ColoringCertificate((), "b_coloring")
    for k in range(m_degree(g), 0, -1):
        cert = b_coloring(g, k)
        if cert is not None:
            return k, cert
    raise AssertionError("unreachable: a chi-coloring is always a b-coloring")


def b_spectrum(g: Graph, cap: int | None = DEFAULT_CAP) -> set[int]:
    _check_cap(g, cap, "b_spectrum")
    return {k for k in range(1, m_degree(g) + 1) if b_coloring(g, k) is not None}


def _sub_m_degree(g: Graph, mask: int) -> int:
    degs = sorted(((g.adj[v] & mask).bit_count() for v in bits(mask)), reverse=True)
    m = 0
    for i, d in enumerate(degs, start=1):
        if d >= i - 1:
            m = i
        else:
            break
    return m


def b_relaxed_number_bruteforce(g: Graph, cap: int | None = RELAXED_CAP,
                                witness: bool = False):
    """Maximum of phi(H) over all induced subgraphs H (all 2^n of them).

    Subsets with m(H) no larger than the best value so far are skipped,
    since phi(H) <= m(H). With ``witness=True`` also returns the vertex list
    of an induced subgraph attaining the maximum.
    """
    _check_cap(g, cap, "b_relaxed_number_bruteforce")
    n = g.n
    best, best_set = 0, []
    if n:
        best = b_chromatic_number(g, cap=None)[0]
        best_set = list(range(n))
    top = m_degree(g)
    for mask in range(1, 1 << n):
        if best >= top:
            break
        mh = _sub_m_degree(g, mask)
        if mh <= best:
            continue
        h = induced_subgraph(g, bits(mask))
        for k in range(mh, best, -1):
            if b_coloring(h, k) is not None:
                best, best_set = k, list(bits(mask))
                break
    return (best, best_set) if witness else best

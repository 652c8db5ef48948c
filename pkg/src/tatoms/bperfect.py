"""b-perfect and b-chi-k-bounded graphs through forbidden b-atoms.

A graph is b-chi-k-bounded when every induced subgraph ``H`` has
``phi(H) - chi(H) <= k``; it fails to be exactly when it contains a minimal
chi-k-unbounded b-atom (a b-atom with ``phi - chi > k``). For ``k = 0`` these
are the imperfect b-atoms, the forbidden family of b-perfect graphs.

The family is computed: minimal b-t-atoms are scanned for ``t = 1..t_max``,
those with ``phi - chi > k`` (by the oracles) are kept, and later catalogs
are generated avoiding members already found, since an atom containing a
member can never be minimal in the family.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from .atoms import AtomWitness, PatternSet, generate_atoms, order_bound
from .canon import canonical_form, canonical_graph
from .detection import Embedding
from .graph import Graph, remove_vertex
from .match import find_induced
from .oracles import b_chromatic_number, chromatic_number

# Number of members of the derived b-perfect family (k = 0, t_max = 4), frozen
# after the first derivation as a regression value.
FAMILY_SIZE_K0 = 22


@dataclass
class ForbiddenFamily:
    k: int
    t_max: int
    members: list[AtomWitness]
    max_order: int | None = None

    @property
    def graphs(self) -> list[Graph]:
        return [m.graph for m in self.members]

    def __len__(self) -> int:
        return len(self.members)

    def to_json(self) -> list[dict]:
        out = []
        for m in self.members:
            d = m.to_json()
            d["phi"], d["chi"] = b_chromatic_number(m.graph, cap=None)[0], chromatic_number(m.graph)
            out.append(d)
        return out

    def save(self, path: str | os.PathLike) -> None:
        Path(path).write_text(json.dumps(self.to_json(), indent=1) + "\n")


def _gap(g: Graph) -> int:
    return b_chromatic_number(g, cap=None)[0] - chromatic_number(g)


_FAMILIES: dict[tuple, ForbiddenFamily] = {}


def derive_family(k: int = 0, t_max: int = 4, max_order: int | None = None,
                  catalog_dir="default", force: bool = False) -> ForbiddenFamily:
    """Minimal b-atoms with ``phi - chi > k`` among minimal b-t-atoms, ``t <= t_max``.

    ``max_order`` truncates the scanned catalogs; members up to that order
    are then exact.
    """
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    key = (k, t_max, max_order)
    if key in _FAMILIES:
        return _FAMILIES[key]
    members: list[AtomWitness] = []
    for t in range(1, t_max + 1):
        order = order_bound("b", t) if max_order is None else min(max_order, order_bound("b", t))
        cat = generate_atoms("b", t, max_order=order, avoid=[m.graph for m in members],
                             cache_dir=catalog_dir, force=force)
        fresh = [a for a in cat if _gap(a.graph) > k]
        pats = PatternSet()
        for a in sorted(fresh, key=lambda a: (a.graph.n, canonical_form(a.graph))):
            if not pats.contains_any(a.graph):
                pats.add(a.graph)
                members.append(a)
    fam = ForbiddenFamily(k, t_max, members, max_order)
    _FAMILIES[key] = fam
    return fam


def is_b_perfect(g: Graph, family: ForbiddenFamily | None = None) -> tuple[bool, Embedding | None]:
    """b-perfect iff no family member occurs induced; returns an occurrence otherwise."""
    fam = derive_family(0, 4) if family is None else family
    for m in fam.members:
        f = find_induced(g, m.graph)
        if f is not None:
            return False, Embedding(m, f)
    return True, None


@lru_cache(maxsize=None)
def _b_perfect_canon(form: bytes, g: Graph) -> bool:
    if g.n == 0:
        return True
    if _gap(g) != 0:
        return False
    return all(b_perfect_by_definition(remove_vertex(g, v)) for v in range(g.n))


def b_perfect_by_definition(g: Graph) -> bool:
    """Every induced subgraph has phi = chi, by the oracles."""
    h = canonical_graph(g)
    return _b_perfect_canon(canonical_form(h), h)


@lru_cache(maxsize=None)
def _max_gap_canon(form: bytes, g: Graph) -> int:
    if g.n == 0:
        return 0
    best = _gap(g)
    for v in range(g.n):
        best = max(best, max_induced_gap(remove_vertex(g, v)))
    return best


def max_induced_gap(g: Graph) -> int:
    """Largest ``phi(H) - chi(H)`` over induced subgraphs ``H``."""
    h = canonical_graph(g)
    return _max_gap_canon(canonical_form(h), h)


@dataclass
class BoundedResult:
    k: int
    gap: int
    holds: bool
    hereditary: bool
    family_route: bool | None

    @property
    def agrees(self) -> bool:
        return self.family_route is None or self.family_route == self.hereditary

    def to_json(self) -> dict:
        return {"k": self.k, "phi_minus_chi": self.gap, "answer": self.holds,
                "some_induced_subgraph": self.hereditary, "family_route": self.family_route,
                "agrees": self.agrees}


def b_chi_bounded(g: Graph, k: int, family_t_max: int = 4, check_family: bool = True) -> BoundedResult:
    """Does ``phi(G) - chi(G) >= k``? Decided by the oracles.

    The family route answers the hereditary question (some induced subgraph
    with ``phi - chi >= k``) as containment of a minimal chi-(k-1)-unbounded
    b-atom; it is recorded next to the oracle's hereditary answer.
    """
    gap = _gap(g)
    hereditary = max_induced_gap(g) >= k
    family_route = None
    if check_family:
        if k <= 0:
            family_route = True  # phi >= chi always
        else:
            fam = derive_family(k - 1, family_t_max, max_order=g.n)
            family_route = any(find_induced(g, m.graph) is not None for m in fam.members)
    return BoundedResult(k, gap, gap >= k, hereditary, family_route)

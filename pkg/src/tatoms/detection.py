"""Deciding ``Gamma >= t``, ``dGamma >= t`` and ``phi_r >= t`` by looking for atoms.

Each parameter is at least ``t`` exactly when the graph contains an induced
minimal t-atom of the matching family. Two routes find those occurrences:

* ``catalog``: match every catalog member (smallest first) into the host.
  Only atoms with at most ``g.n`` vertices can occur, so the catalog is
  truncated at the host order.
* ``subsets``: for small hosts, test vertex subsets bottom-up and keep those
  inducing an atom none of whose one-vertex deletions contains an atom. This
  covers ``t`` beyond the catalog caps.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

from .atoms import AtomWitness, CatalogCapError, find_witness, generate_atoms, order_bound
from .graph import Graph, bits, induced_subgraph, m_degree
from .match import find_induced, iter_induced

__all__ = ["Embedding", "DetectionCapError", "find_induced", "contains_atom", "atom_occurrences",
           "partial_grundy_ge", "b_relaxed_ge", "grundy_ge", "parameter_via_atoms", "atom_kind"]

# Largest host for which the subset route is allowed.
SUBSET_LIMIT = 14

_ALIASES = {"grundy": "grundy", "pgrundy": "pgrundy", "partial_grundy": "pgrundy",
            "b": "b", "b_relaxed": "b"}


class DetectionCapError(CatalogCapError):
    """No catalog within the caps and the host is too big for the subset route."""


def atom_kind(kind: str) -> str:
    try:
        return _ALIASES[kind]
    except KeyError:
        raise ValueError(f"unknown kind {kind!r}; expected one of {sorted(_ALIASES)}") from None


@dataclass(frozen=True)
class Embedding:
    """An induced occurrence: atom vertex ``i`` sits on host vertex ``mapping[i]``."""

    atom: AtomWitness
    mapping: tuple[int, ...]

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.mapping))

    @property
    def mask(self) -> int:
        m = 0
        for v in self.mapping:
            m |= 1 << v
        return m

    def host_parts(self) -> list[list[int]]:
        return [sorted(self.mapping[v] for v in p) for p in self.atom.parts]

    def host_centers(self) -> list[int]:
        return [self.mapping[c] for c in self.atom.center]

    def is_valid_in(self, g: Graph) -> bool:
        """Induced occurrence whose witness still validates."""
        from .atoms import validate_witness

        h = self.atom.graph
        if len(set(self.mapping)) != h.n:
            return False
        for i in range(h.n):
            for j in range(i + 1, h.n):
                if h.has_edge(i, j) != g.has_edge(self.mapping[i], self.mapping[j]):
                    return False
        return validate_witness(self.atom)

    def to_json(self) -> dict:
        return {"atom": self.atom.to_json(), "mapping": list(self.mapping),
                "parts": self.host_parts(), "centers": self.host_centers()}


def _trivially_absent(g: Graph, kind: str, t: int) -> bool:
    if g.n < t:
        return True
    if t >= 2 and g.max_degree() < t - 1:
        return True
    return kind == "b" and m_degree(g) < t


def _catalog(g: Graph, kind: str, t: int, avoid, catalog_dir):
    return generate_atoms(kind, t, max_order=min(g.n, order_bound(kind, t)), avoid=avoid,
                          cache_dir=catalog_dir)


def _pick_method(g, kind, t, avoid, method, catalog_dir):
    if method not in ("auto", "catalog", "subsets"):
        raise ValueError(f"unknown method {method!r}")
    if method == "subsets":
        return None
    try:
        return _catalog(g, kind, t, avoid, catalog_dir)
    except CatalogCapError as exc:
        if method == "catalog" or g.n > SUBSET_LIMIT:
            raise DetectionCapError(
                f"{exc}; host has {g.n} vertices (subset route limited to {SUBSET_LIMIT}); "
                "use the brute-force oracles instead") from exc
        return None


def _minimal_atom_sets(g: Graph, kind: str, t: int) -> Iterator[int]:
    """Masks of vertex sets inducing a minimal t-atom, by increasing size."""
    bound = min(g.n, order_bound(kind, t))
    holds: set[int] = set()  # sets of the previous size containing an atom
    prev_layer = [0]
    for size in range(1, bound + 1):
        layer = []
        seen = set()
        for base in prev_layer:
            top = base.bit_length()
            for v in range(top, g.n):
                layer.append(base | 1 << v)
        new_holds = set()
        for s in layer:
            if s in seen:
                continue
            seen.add(s)
            if any(s & ~(1 << v) in holds for v in bits(s)):
                new_holds.add(s)
                continue
            if size >= t and _could_hold(g, s, kind, t) and \
                    find_witness(induced_subgraph(g, list(bits(s))), kind, t) is not None:
                new_holds.add(s)
                yield s
        holds = new_holds
        prev_layer = layer


def _could_hold(g: Graph, s: int, kind: str, t: int) -> bool:
    """Degree test every t-atom on the vertex set ``s`` would pass."""
    degs = sorted(((g.adj[v] & s).bit_count() for v in bits(s)), reverse=True)
    if kind == "b":
        return len(degs) >= t and degs[t - 1] >= t - 1
    # pgrundy / grundy: some vertex of degree >= i - 1 for each color i
    return all(degs[t - i] >= i - 1 for i in range(1, t + 1))


def atom_occurrences(g: Graph, kind: str, t: int, avoid=(), method: str = "auto",
                     catalog_dir="default") -> Iterator[Embedding]:
    """Every induced minimal t-atom occurrence, once per vertex set.

    Catalog atoms are tried smallest first; for each vertex set the first
    (lexicographically least) embedding is reported.
    """
    kind = atom_kind(kind)
    if t < 1:
        raise ValueError(f"t must be positive, got {t}")
    if _trivially_absent(g, kind, t):
        return
    cat = _pick_method(g, kind, t, avoid, method, catalog_dir)
    if cat is None:
        for s in _minimal_atom_sets(g, kind, t):
            verts = list(bits(s))
            w = find_witness(induced_subgraph(g, verts), kind, t)
            yield Embedding(w, tuple(verts))
        return
    seen: set[int] = set()
    for atom in cat:
        for emb in iter_induced(g, atom.graph):
            m = 0
            for v in emb:
                m |= 1 << v
            if m not in seen:
                seen.add(m)
                yield Embedding(atom, emb)


def contains_atom(g: Graph, kind: str, t: int, avoid=(), method: str = "auto",
                  catalog_dir="default") -> tuple[bool, Embedding | None]:
    """Does ``g`` contain an induced minimal ``kind`` t-atom? Returns the occurrence too."""
    kind = atom_kind(kind)
    if t < 1:
        raise ValueError(f"t must be positive, got {t}")
    if _trivially_absent(g, kind, t):
        return False, None
    cat = _pick_method(g, kind, t, avoid, method, catalog_dir)
    if cat is None:
        emb = next(atom_occurrences(g, kind, t, method="subsets"), None)
        return emb is not None, emb
    for atom in cat:
        f = find_induced(g, atom.graph)
        if f is not None:
            return True, Embedding(atom, f)
    return False, None


def partial_grundy_ge(g: Graph, t: int, **kw) -> tuple[bool, Embedding | None]:
    return contains_atom(g, "pgrundy", t, **kw)


def b_relaxed_ge(g: Graph, t: int, **kw) -> tuple[bool, Embedding | None]:
    return contains_atom(g, "b", t, **kw)


def grundy_ge(g: Graph, t: int, **kw) -> tuple[bool, Embedding | None]:
    return contains_atom(g, "grundy", t, **kw)


def parameter_upper_bound(g: Graph, kind: str) -> int:
    """Delta + 1 for all three parameters, and m(G) for the b-relaxed number."""
    if g.n == 0:
        return 0
    top = g.max_degree() + 1
    return min(top, m_degree(g)) if atom_kind(kind) == "b" else top


def parameter_via_atoms(g: Graph, kind: str, avoid=(), method: str = "auto",
                        catalog_dir="default") -> int:
    """Largest t for which ``g`` contains an induced minimal t-atom.

    Searches t downward from :func:`parameter_upper_bound`; raises
    :class:`DetectionCapError` when a needed catalog is beyond the caps.
    """
    for t in range(parameter_upper_bound(g, kind), 0, -1):
        if contains_atom(g, kind, t, avoid=avoid, method=method, catalog_dir=catalog_dir)[0]:
            return t
    return 0

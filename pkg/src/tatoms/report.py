"""Analysis reports: every requested parameter by every method that applies.

A parameter entry looks like ``{"value": 3, "methods": {"oracle": {...},
"atoms": {...}}, "agree": true}``. A method that is out of its caps is
recorded as ``{"skipped": reason}``; a feasibility search that ran out of
budget as ``{"undecided": true}``.
"""

from __future__ import annotations

import math

from .atoms import CatalogCapError
from .bperfect import derive_family, is_b_perfect
from .criticality import CRITICAL_CAP, critical_edges, critical_vertices
from .detection import contains_atom, parameter_upper_bound
from .feasibility import DEFAULT_BUDGET, FeasibilityUndecided, b_chromatic_via_atoms, phi_shortcut
from .graph import Graph, girth, is_tight, m_degree
from .io import to_graph6
from .oracles import (DEFAULT_CAP, RELAXED_CAP, OracleCapError, b_chromatic_number,
                      b_relaxed_number_bruteforce, check_certificate, grundy_number,
                      partial_grundy_number)

PARAMS = ("grundy", "pgrundy", "phi", "phi_r", "critical", "bperfect")
DEFAULT_PARAMS = ("grundy", "pgrundy", "phi", "phi_r")


class CapExceeded(RuntimeError):
    """No method could compute a requested parameter within the caps."""


def _atoms_value(g: Graph, kind: str, catalog_dir) -> dict:
    """Largest t with an induced minimal t-atom, plus the occurrence found."""
    for t in range(parameter_upper_bound(g, kind), 0, -1):
        found, emb = contains_atom(g, kind, t, catalog_dir=catalog_dir)
        if found:
            return {"value": t, "occurrence": emb.to_json()}
    return {"value": 0}


def _oracle(fn, g: Graph, cap: int | None) -> dict:
    value, cert = fn(g, cap=cap)
    assert check_certificate(g, cert)
    return {"value": value, "certificate": cert.to_json()}


def _collect(methods: dict) -> dict:
    values = {m["value"] for m in methods.values() if "value" in m}
    entry = {"methods": methods}
    if values:
        entry["value"] = max(values)
        entry["agree"] = len(values) == 1
    elif any(m.get("undecided") for m in methods.values()):
        entry["undecided"] = True
    return entry


def _try(methods: dict, name: str, thunk) -> None:
    try:
        methods[name] = thunk()
    except (OracleCapError, CatalogCapError) as exc:
        methods[name] = {"skipped": str(exc)}
    except FeasibilityUndecided as exc:
        methods[name] = {"undecided": True, "t": exc.t}


def parameter_entry(g: Graph, param: str, cap: int | None = DEFAULT_CAP,
                    budget: int = DEFAULT_BUDGET, catalog_dir="default") -> dict:
    methods: dict = {}
    if param == "grundy":
        _try(methods, "oracle", lambda: _oracle(grundy_number, g, cap))
        _try(methods, "atoms", lambda: _atoms_value(g, "grundy", catalog_dir))
    elif param == "pgrundy":
        _try(methods, "oracle", lambda: _oracle(partial_grundy_number, g, cap))
        _try(methods, "atoms", lambda: _atoms_value(g, "pgrundy", catalog_dir))
    elif param == "phi":
        _try(methods, "oracle", lambda: _oracle(b_chromatic_number, g, cap))

        def via_atoms():
            t, res = b_chromatic_via_atoms(g, budget=budget, catalog_dir=catalog_dir)
            out = {"value": t}
            if res is not None:
                out["feasible_occurrence"] = res.to_json()
            return out

        _try(methods, "atoms", via_atoms)

        def shortcut():
            v = phi_shortcut(g, catalog_dir=catalog_dir)
            return {"skipped": "not a tree and not (girth >= 7 with phi_r >= 3)"} if v is None \
                else {"value": v}

        _try(methods, "shortcut", shortcut)
    elif param == "phi_r":
        relaxed_cap = None if cap is None else min(cap, RELAXED_CAP)

        def brute():
            value, verts = b_relaxed_number_bruteforce(g, cap=relaxed_cap, witness=True)
            return {"value": value, "induced_subgraph": verts}

        _try(methods, "oracle", brute)
        _try(methods, "atoms", lambda: _atoms_value(g, "b", catalog_dir))
    else:
        raise ValueError(f"unknown parameter {param!r}; choose from {', '.join(PARAMS)}")
    return _collect(methods)


def analyze(g: Graph, params=DEFAULT_PARAMS, cap: int | None = DEFAULT_CAP,
            budget: int = DEFAULT_BUDGET, catalog_dir="default") -> dict:
    """The full analysis report; raises :class:`CapExceeded` if a parameter is out of reach."""
    gi = girth(g)
    rep = {"graph6": to_graph6(g), "n": g.n, "m": g.m, "girth": None if math.isinf(gi) else int(gi),
           "m_degree": m_degree(g), "tight": is_tight(g), "parameters": {}}
    for p in params:
        if p in ("critical", "bperfect"):
            continue
        entry = parameter_entry(g, p, cap, budget, catalog_dir)
        if "value" not in entry and not entry.get("undecided"):
            raise CapExceeded(f"{p}: no method within caps for n={g.n}")
        rep["parameters"][p] = entry
    if "critical" in params:
        ccap = CRITICAL_CAP if cap is None else min(cap, CRITICAL_CAP)
        try:
            rep["critical"] = {"vertices": critical_vertices(g, cap=ccap, budget=budget).to_json(),
                               "edges": critical_edges(g, cap=ccap, budget=budget).to_json()}
        except OracleCapError as exc:
            raise CapExceeded(str(exc)) from exc
        except FeasibilityUndecided as exc:
            rep["critical"] = {"undecided": True, "t": exc.t}
    if "bperfect" in params:
        ok, emb = is_b_perfect(g, derive_family(0, 4, catalog_dir=catalog_dir))
        rep["b_perfect"] = {"value": ok, "forbidden_occurrence": emb.to_json() if emb else None}
    return rep


def is_undecided(rep: dict) -> bool:
    if any(e.get("undecided") or any(m.get("undecided") for m in e["methods"].values())
           for e in rep["parameters"].values()):
        return True
    return bool(rep.get("critical", {}).get("undecided"))

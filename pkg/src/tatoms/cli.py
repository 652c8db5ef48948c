"""Command-line front end.

Exit codes: 0 success (or "yes"), 1 "no" / a failed verification, 2 input
parse error, 3 size cap exceeded, 4 feasibility budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .atoms import CatalogCapError, generate_atoms
from .bperfect import b_chi_bounded, derive_family, is_b_perfect
from .criticality import CRITICAL_CAP, critical_edges, critical_vertices
from .detection import atom_kind, contains_atom
from .feasibility import DEFAULT_BUDGET, FeasibilityUndecided
from .graph import GraphError, common_names
from .io import parse_graph, to_graph6
from .oracles import DEFAULT_CAP, OracleCapError, b_coloring, b_spectrum
from .report import DEFAULT_PARAMS, PARAMS, CapExceeded, analyze, is_undecided
from . import verify

OK, NO, PARSE_ERROR, CAP_EXCEEDED, UNDECIDED = 0, 1, 2, 3, 4


class _Exit(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def read_graph(source: str, fmt: str = "auto"):
    """A file path, ``-`` for stdin, or a built-in name such as ``K-3,3``."""
    names = common_names()
    if source in names and not Path(source).exists():
        return names[source]
    try:
        text = sys.stdin.read() if source == "-" else Path(source).read_text()
    except OSError as exc:
        raise _Exit(PARSE_ERROR, f"cannot read {source}: {exc}") from None
    try:
        return parse_graph(text, fmt)
    except (GraphError, ValueError) as exc:
        raise _Exit(PARSE_ERROR, f"{source}: {exc}") from None


def _emit(obj, out: str | None) -> None:
    text = json.dumps(obj, indent=2, sort_keys=False) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _cap(args) -> int | None:
    return None if args.cap is not None and args.cap <= 0 else args.cap


def cmd_analyze(args) -> int:
    g = read_graph(args.graph, args.format)
    params = tuple(p.strip() for p in args.params.split(",")) if args.params else DEFAULT_PARAMS
    bad = [p for p in params if p not in PARAMS]
    if bad:
        raise _Exit(PARSE_ERROR, f"unknown parameter(s) {bad}; choose from {', '.join(PARAMS)}")
    cap = DEFAULT_CAP if args.cap is None else _cap(args)
    rep = analyze(g, params, cap=cap, budget=args.budget, catalog_dir=args.catalog_dir)
    _emit(rep, args.out)
    return UNDECIDED if is_undecided(rep) else OK


def cmd_gen(args) -> int:
    cat = generate_atoms(args.kind, args.t, minimal=args.minimal, max_order=args.cap,
                         cache_dir=args.catalog_dir)
    if args.out:
        cat.save(args.out)
    summary = {"kind": cat.kind, "t": cat.t, "minimal": cat.minimal_only, "count": len(cat),
               "complete": cat.complete, "max_order": cat.max_order,
               "graph6": [to_graph6(g) for g in cat.graphs]}
    if args.out:
        summary["written"] = args.out
    sys.stdout.write(json.dumps(summary, indent=2) + "\n")
    return OK


def cmd_detect(args) -> int:
    g = read_graph(args.graph, args.format)
    found, emb = contains_atom(g, args.kind, args.t, catalog_dir=args.catalog_dir)
    _emit({"kind": atom_kind(args.kind), "t": args.t, "found": found,
           "embedding": emb.to_json() if emb else None}, args.out)
    return OK if found else NO


def cmd_verify(args) -> int:
    name = args.theorem_flag or args.theorem
    if name is None or name == "list":
        sys.stdout.write("\n".join(verify.THEOREMS) + "\n")
        return OK
    params = {"n_max": args.n_max, "samples": args.samples, "seed": args.seed}
    if args.t is not None:
        params["t_max"] = args.t
    try:
        rep = verify.run(name, **params)
    except ValueError as exc:
        raise _Exit(PARSE_ERROR, str(exc)) from None
    _emit(rep.to_json(), args.out)
    return OK if rep.passed else NO


def cmd_critical(args) -> int:
    g = read_graph(args.graph, args.format)
    cap = CRITICAL_CAP if args.cap is None else _cap(args)
    out = {"graph6": to_graph6(g),
           "vertices": critical_vertices(g, cap=cap, budget=args.budget).to_json(),
           "edges": critical_edges(g, cap=cap, budget=args.budget).to_json()}
    _emit(out, args.out)
    return OK


def cmd_bperfect(args) -> int:
    fam = derive_family(0, 4, catalog_dir=args.catalog_dir)
    if args.graph is None:
        # no host: export the family
        out = {"k": 0, "size": len(fam), "members": fam.to_json()}
        _emit(out, args.out)
        return OK
    g = read_graph(args.graph, args.format)
    ok, emb = is_b_perfect(g, fam)
    out = {"graph6": to_graph6(g), "b_perfect": ok,
           "forbidden_occurrence": emb.to_json() if emb else None}
    if args.k is not None:
        out["b_chi_bounded"] = b_chi_bounded(g, args.k).to_json()
    _emit(out, args.out)
    return OK


def cmd_spectrum(args) -> int:
    g = read_graph(args.graph, args.format)
    cap = DEFAULT_CAP if args.cap is None else _cap(args)
    spec = sorted(b_spectrum(g, cap=cap))
    out = {"graph6": to_graph6(g), "b_spectrum": spec,
           "gaps": [k for k in range(min(spec, default=1), max(spec, default=0) + 1) if k not in spec]}
    if args.t is not None:
        cert = b_coloring(g, args.t)
        out["t"] = args.t
        out["coloring"] = cert.to_json() if cert else None
    _emit(out, args.out)
    return OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("auto", "graph6", "edge_list"), default="auto",
                        help="input format (default: sniff the first line)")
    common.add_argument("--cap", type=int, help="size cap for the oracles / max catalog order (0: none)")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="feasibility node budget")
    common.add_argument("--catalog-dir", default="default",
                        help="catalog cache directory (default: $TATOMS_CACHE or ~/.cache/tatoms)")
    common.add_argument("--out", help="write JSON here instead of stdout")

    p = argparse.ArgumentParser(prog="tatoms", description="Coloring parameters of graphs through t-atoms.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="all parameters of a graph")
    a.add_argument("graph", help="file, '-' for stdin, or a built-in name (K-3,3, Petersen, ...)")
    a.add_argument("--params", help=f"comma list from {','.join(PARAMS)}")
    a.set_defaults(fn=cmd_analyze)

    gn = sub.add_parser("gen", parents=[common], help="generate an atom catalog")
    gn.add_argument("--kind", required=True, choices=("grundy", "pgrundy", "b"))
    gn.add_argument("--t", type=int, required=True)
    gn.add_argument("--minimal", action=argparse.BooleanOptionalAction, default=True)
    gn.set_defaults(fn=cmd_gen)

    d = sub.add_parser("detect", parents=[common], help="is there an induced minimal t-atom?")
    d.add_argument("graph")
    d.add_argument("--kind", required=True)
    d.add_argument("--t", type=int, required=True)
    d.set_defaults(fn=cmd_detect)

    v = sub.add_parser("verify", parents=[common], help="check a theorem against the oracles")
    v.add_argument("theorem", nargs="?", help="theorem name, or 'list'")
    v.add_argument("--theorem", dest="theorem_flag")
    v.add_argument("--n-max", type=int)
    v.add_argument("--samples", type=int)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--t", type=int, help="largest t for the catalog checks")
    v.set_defaults(fn=cmd_verify)

    c = sub.add_parser("critical", parents=[common], help="b-critical vertices and edges")
    c.add_argument("graph")
    c.set_defaults(fn=cmd_critical)

    b = sub.add_parser("bperfect", parents=[common], help="b-perfect recognition; no graph exports the family")
    b.add_argument("graph", nargs="?")
    b.add_argument("--k", type=int, help="also decide phi - chi >= k")
    b.set_defaults(fn=cmd_bperfect)

    s = sub.add_parser("spectrum", parents=[common], help="b-spectrum")
    s.add_argument("graph")
    s.add_argument("--t", type=int, help="also print a b-t-coloring")
    s.set_defaults(fn=cmd_spectrum)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except _Exit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (OracleCapError, CatalogCapError, CapExceeded) as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return CAP_EXCEEDED
    except FeasibilityUndecided as exc:
        print(f"undecided: {exc}", file=sys.stderr)
        return UNDECIDED


if __name__ == "__main__":
    sys.exit(main())

"""graph6 and plain edge-list reading/writing."""

from __future__ import annotations

from .graph import Graph, GraphError


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph) -> str:
    """Encode without the optional ``>>graph6<<`` header."""
    out = [_encode_n(g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 string", 1)
    if any(not 63 <= ord(ch) <= 126 for ch in s):
        raise ParseError("graph6 bytes must lie in 63..126", 1)
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] != 63:
        n, body = vals[0], vals[1:]
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise ParseError("truncated graph6 size field", 1)
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        body = vals[8:]
    else:
        if len(vals) < 4:
            raise ParseError("truncated graph6 size field", 1)
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise ParseError(f"expected {need} data bytes for n={n}, got {len(body)}", 1)
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    total = n * (n - 1) // 2
    if total % 6 and body and body[-1] & ((1 << (6 - total % 6)) - 1):
        raise ParseError("nonzero graph6 padding bits", 1)
    return Graph(n, adj)


def to_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    lines = [(i, ln.strip()) for i, ln in enumerate(text.splitlines(), start=1)]
    lines = [(i, ln) for i, ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ParseError("missing header line 'n m'", 1)
    hline, header = lines[0]
    try:
        n, m = (int(x) for x in header.split())
    except ValueError:
        raise ParseError(f"malformed header {header!r}", hline) from None
    if n < 0 or m < 0:
        raise ParseError("negative size in header", hline)
    if len(lines) - 1 != m:
        raise ParseError(f"header announces {m} edges, found {len(lines) - 1}", hline)
    adj = [0] * n
    for lineno, ln in lines[1:]:
        try:
            u, v = (int(x) for x in ln.split())
        except ValueError:
            raise ParseError(f"malformed edge {ln!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"endpoint out of range in {ln!r}", lineno)
        if u == v:
            raise ParseError(f"self-loop {ln!r}", lineno)
        if adj[u] >> v & 1:
            raise ParseError(f"duplicate edge {ln!r}", lineno)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


def parse_graph(text: str, format: str = "auto") -> Graph:
    """Parse ``graph6`` or ``edge_list`` text; ``auto`` sniffs the first line.

    Edge lists start with a digit (the header ``n m``); graph6 strings never
    contain whitespace.
    """
    if format == "auto":
        first = text.strip().split("\n", 1)[0].strip()
        format = "edge_list" if (" " in first or "\t" in first or first[:1].isdigit()) else "graph6"
    if format == "graph6":
        return from_graph6(text)
    if format == "edge_list":
        return from_edge_list(text)
    raise ValueError(f"unknown graph format {format!r}")

"""Text and byte formats: graph6, plain edge lists, incidence files, Cayley tables."""

from __future__ import annotations

from .graph import Graph, GraphError, from_edges


class ParseError(ValueError):
    pass


_HEADER = b">>graph6<<"


def _encode_size(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n < 68719476736:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError("graph too large for graph6")


def graph6_encode(g: Graph) -> bytes:
    """Encode without header or trailing newline."""
    out = bytearray(_encode_size(g.n))
    acc = nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def graph6_decode(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(_HEADER):
        data = data[len(_HEADER):]
    if not data:
        raise ParseError("empty graph6 string")
    if any(c < 63 or c > 126 for c in data):
        raise ParseError("graph6 byte out of range 63..126")
    vals = [c - 63 for c in data]
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise ParseError("truncated graph6 size field")
        n, pos = 0, 8
        for v in vals[2:8]:
            n = (n << 6) | v
    else:
        if len(vals) < 4:
            raise ParseError("truncated graph6 size field")
        n, pos = 0, 4
        for v in vals[1:4]:
            n = (n << 6) | v
    total = n * (n - 1) // 2
    need = (total + 5) // 6
    body = vals[pos:]
    if len(body) != need:
        raise ParseError(f"graph6 payload has {len(body)} bytes, expected {need}")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if need and body[-1] & ((1 << (need * 6 - total)) - 1):
        raise ParseError("nonzero graph6 padding bits")
    return Graph.from_adjacency(rows)


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``; ``#`` starts a comment."""
    lines = [ln.split("#", 1)[0].split() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or len(lines[0]) != 2:
        raise ParseError("edge list must start with 'n m'")
    try:
        n, m = int(lines[0][0]), int(lines[0][1])
        edges = [(int(a), int(b)) for a, b in lines[1:]]
    except ValueError as exc:
        raise ParseError(f"bad edge list: {exc}") from None
    if len(edges) != m:
        raise ParseError(f"header says {m} edges, found {len(edges)}")
    try:
        g = from_edges(n, edges)
    except GraphError as exc:
        raise ParseError(str(exc)) from None
    if g.num_edges != m:
        raise ParseError("duplicate edges in edge list")
    return g


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.num_edges}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def sniff_format(text: str) -> str:
    """A first line holding two integers means an edge list; anything else is graph6."""
    first = next((ln for ln in text.splitlines() if ln.strip()), "")
    parts = first.split()
    if len(parts) == 2 and all(p.lstrip("-").isdigit() for p in parts):
        return "edge-list"
    return "graph6"


def read_graph(text: str) -> Graph:
    if sniff_format(text) == "edge-list":
        return parse_edge_list(text)
    return graph6_decode(next((ln for ln in text.splitlines() if ln.strip()), ""))


def parse_incidence(text: str):
    """Parse ``"v b"`` then one block per line as point ids."""
    from .designs import IncidenceStructure

    lines = [ln.split("#", 1)[0].split() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or len(lines[0]) != 2:
        raise ParseError("incidence file must start with 'v b'")
    try:
        v, b = int(lines[0][0]), int(lines[0][1])
        blocks = [[int(x) for x in ln] for ln in lines[1:]]
    except ValueError as exc:
        raise ParseError(f"bad incidence file: {exc}") from None
    if len(blocks) != b:
        raise ParseError(f"header says {b} blocks, found {len(blocks)}")
    for blk in blocks:
        if any(p < 0 or p >= v for p in blk):
            raise ParseError(f"block {blk} has a point outside 0..{v - 1}")
        if len(set(blk)) != len(blk):
            raise ParseError(f"block {blk} repeats a point")
    return IncidenceStructure(v, tuple(tuple(sorted(blk)) for blk in blocks))


def format_incidence(s) -> str:
    lines = [f"{s.v} {len(s.blocks)}"] + [" ".join(map(str, blk)) for blk in s.blocks]
    return "\n".join(lines) + "\n"


def parse_cayley_table(text: str):
    """Parse ``n`` then ``n`` rows of ``n`` element indices; group axioms are validated."""
    from .groups import FiniteGroup, GroupError

    rows = [ln.split() for ln in text.splitlines() if ln.strip()]
    try:
        n = int(rows[0][0])
        table = [[int(x) for x in r] for r in rows[1:]]
    except (ValueError, IndexError) as exc:
        raise ParseError(f"bad Cayley table: {exc}") from None
    if len(table) != n or any(len(r) != n for r in table):
        raise ParseError("Cayley table is not n x n")
    try:
        return FiniteGroup.from_table(table)
    except GroupError as exc:
        raise ParseError(str(exc)) from None


def format_cayley_table(group) -> str:
    lines = [str(group.order)] + [" ".join(map(str, r)) for r in group.table]
    return "\n".join(lines) + "\n"

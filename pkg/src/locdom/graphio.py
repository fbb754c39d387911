"""Text serialization: graph6 and plain edge lists.

graph6 is the standard 6-bit ASCII encoding (upper-triangle bits packed
column by column, characters offset by 63); the optional ">>graph6<<"
header is tolerated.  Edge lists are one "u v" pair per line, 0-based,
with '#' comments and an optional leading line holding the vertex count
(needed to round-trip isolated vertices).
"""

from __future__ import annotations

from .graph import Graph, GraphFormatError

GRAPH6_HEADER = ">>graph6<<"


def _g6_decode_order(s: str) -> tuple[int, int]:
    """Return (n, index of first payload char)."""
    if not s:
        raise GraphFormatError("empty graph6 string")
    c = ord(s[0]) - 63
    if c < 0 or c > 63:
        raise GraphFormatError(f"graph6 character {s[0]!r} out of range")
    if c <= 62:
        return c, 1
    # 126 introduces a 3-character (18-bit) order; 126 126 an 8-character one,
    # which is far beyond the supported cap.
    if len(s) >= 2 and s[1] == "~":
        raise GraphFormatError("graph6 orders above 258047 are not supported")
    if len(s) < 4:
        raise GraphFormatError("truncated graph6 order field")
    n = 0
    for ch in s[1:4]:
        d = ord(ch) - 63
        if d < 0 or d > 63:
            raise GraphFormatError(f"graph6 character {ch!r} out of range")
        n = (n << 6) | d
    return n, 4


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if "\n" in s:
        raise GraphFormatError("expected a single graph6 line")
    n, start = _g6_decode_order(s)
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    payload = s[start:]
    if len(payload) != nchars:
        raise GraphFormatError(
            f"graph6 payload for order {n} needs {nchars} characters, got {len(payload)}"
        )
    bits = 0
    for ch in payload:
        d = ord(ch) - 63
        if d < 0 or d > 63:
            raise GraphFormatError(f"graph6 character {ch!r} out of range")
        bits = (bits << 6) | d
    bits >>= 6 * nchars - nbits  # drop the zero padding
    edges = []
    pos = nbits - 1
    for v in range(1, n):
        for u in range(v):
            if (bits >> pos) & 1:
                edges.append((u, v))
            pos -= 1
    return Graph(n, edges)


def to_graph6(g: Graph) -> str:
    n = g.n
    if n > 62:
        order = "~" + "".join(chr(((n >> k) & 63) + 63) for k in (12, 6, 0))
    else:
        order = chr(n + 63)
    bits = 0
    nbits = n * (n - 1) // 2
    pos = nbits - 1
    for v in range(1, n):
        for u in range(v):
            if g.has_edge(u, v):
                bits |= 1 << pos
            pos -= 1
    nchars = (nbits + 5) // 6
    bits <<= 6 * nchars - nbits
    payload = "".join(chr(((bits >> (6 * (nchars - 1 - i))) & 63) + 63) for i in range(nchars))
    return order + payload


def parse_edge_list(text: str) -> Graph:
    edges = []
    declared_n = None
    max_seen = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if len(toks) == 1 and declared_n is None and not edges:
            try:
                declared_n = int(toks[0])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: bad vertex count {toks[0]!r}") from None
            if declared_n < 0:
                raise GraphFormatError(f"line {lineno}: negative vertex count")
            continue
        if len(toks) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(toks[0]), int(toks[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer vertex in {line!r}") from None
        if u < 0 or v < 0:
            raise GraphFormatError(f"line {lineno}: negative vertex index")
        if u == v:
            raise GraphFormatError(f"line {lineno}: loop edge at vertex {u}")
        if declared_n is not None and (u >= declared_n or v >= declared_n):
            raise GraphFormatError(
                f"line {lineno}: vertex index {max(u, v)} >= declared count {declared_n}"
            )
        edges.append((u, v))
        max_seen = max(max_seen, u, v)
    n = declared_n if declared_n is not None else max_seen + 1
    return Graph(max(n, 0), edges)


def to_edge_list(g: Graph) -> str:
    lines = [str(g.n)]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_any(text: str) -> Graph:
    """Sniff the format: graph6 header, else edge list, else one graph6 line."""
    stripped = text.strip()
    if stripped.startswith(GRAPH6_HEADER):
        return parse_graph6(stripped)
    if stripped and "\n" not in stripped and " " not in stripped and not stripped.lstrip("-").isdigit():
        return parse_graph6(stripped)
    return parse_edge_list(text)

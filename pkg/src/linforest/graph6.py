"""graph6 codec for orders up to 62 (one-byte order encoding, no header).

The format packs the upper triangle of the adjacency matrix column by
column -- bit order (0,1),(0,2),(1,2),(0,3),... -- into 6-bit groups offset
by 63.  One graph per ASCII line.
"""

from __future__ import annotations

from .graphs import Graph


class Graph6Error(ValueError):
    """Base class for malformed graph6 input."""


class InvalidChar(Graph6Error):
    pass


class TruncatedBitVector(Graph6Error):
    pass


class UnsupportedOrder(Graph6Error):
    pass


# column-major upper-triangle bit positions, cached per order
_PAIRS: dict[int, list[tuple[int, int]]] = {}


def _pairs(n: int) -> list[tuple[int, int]]:
    ps = _PAIRS.get(n)
    if ps is None:
        ps = [(i, j) for j in range(1, n) for i in range(j)]
        _PAIRS[n] = ps
    return ps


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line into a Graph."""
    s = line.rstrip("\r\n")
    if not s:
        raise TruncatedBitVector("empty line")
    order_byte = ord(s[0])
    if order_byte == 126:
        raise UnsupportedOrder("orders above 62 (multi-byte encoding) are not supported")
    if not 63 <= order_byte <= 125:
        raise InvalidChar(f"invalid order character {s[0]!r}")
    n = order_byte - 63
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    body = s[1:]
    if len(body) < nchars:
        raise TruncatedBitVector(f"need {nchars} payload characters, got {len(body)}")
    if len(body) > nchars:
        raise InvalidChar(f"unexpected trailing characters {body[nchars:]!r}")
    adj = [0] * n
    pairs = _pairs(n)
    t = 0
    for ch in body:
        c = ord(ch) - 63
        if not 0 <= c <= 63:
            raise InvalidChar(f"invalid payload character {ch!r}")
        for shift in (5, 4, 3, 2, 1, 0):
            if t >= nbits:
                break
            if c >> shift & 1:
                i, j = pairs[t]
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            t += 1
    return Graph.from_adj(adj)


def write_graph6(g: Graph) -> str:
    """Encode a Graph as one graph6 line (no newline)."""
    n = g.n
    if n > 62:
        raise UnsupportedOrder("orders above 62 are not supported")
    adj = g.adj
    out = [chr(n + 63)]
    c = 0
    filled = 0
    for j in range(1, n):
        col = adj[j]
        for i in range(j):
            c = (c << 1) | (col >> i & 1)
            filled += 1
            if filled == 6:
                out.append(chr(c + 63))
                c = 0
                filled = 0
    if filled:
        out.append(chr((c << (6 - filled)) + 63))
    return "".join(out)

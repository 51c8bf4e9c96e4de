"""graph6 text encoding (the standard printable format for undirected graphs).

Short form covers n <= 62; the 4-byte long form extends to our build cap of
64 vertices.  Round-trip is the identity on labelled graphs.
"""

from __future__ import annotations

from .graphs import Graph, GraphError


class Graph6Error(GraphError):
    """Malformed graph6 input; carries the byte offset of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


def write_graph6(G: Graph) -> str:
    n = G.n
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    bits = []
    for v in range(1, n):
        col = G.rows[v]
        for u in range(v):
            bits.append(col >> u & 1)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = val << 1 | b
        chars.append(chr(val + 63))
    return head + "".join(chars)


def parse_graph6(text: str) -> Graph:
    if text.startswith(">>graph6<<"):
        text = text[10:]
    if not text:
        raise Graph6Error("empty graph6 string", 0)
    data = text.rstrip("\n")
    idx = 0
    c = ord(data[0])
    if c == 126:  # '~' long form
        if len(data) >= 2 and ord(data[1]) == 126:
            raise Graph6Error("8-byte vertex counts are not supported", 0)
        if len(data) < 4:
            raise Graph6Error("truncated long-form header", len(data))
        n = 0
        for i in range(1, 4):
            d = ord(data[i]) - 63
            if not 0 <= d < 64:
                raise Graph6Error("header byte out of range", i)
            n = n << 6 | d
        idx = 4
    else:
        n = c - 63
        if not 0 <= n <= 62:
            raise Graph6Error("header byte out of range", 0)
        idx = 1
    if n > 64:
        raise Graph6Error(f"vertex count {n} exceeds build cap 64", 0)

    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    if len(data) - idx != nchars:
        raise Graph6Error(
            f"expected {nchars} payload bytes for n={n}, got {len(data) - idx}", idx
        )
    rows = [0] * n
    bit = 0
    for i in range(nchars):
        d = ord(data[idx + i]) - 63
        if not 0 <= d < 64:
            raise Graph6Error("payload byte out of range", idx + i)
        for s in range(5, -1, -1):
            if bit >= nbits:
                if d >> s & 1:
                    raise Graph6Error("nonzero padding bits", idx + i)
                continue
            if d >> s & 1:
                v, u = _bit_to_pair(bit)
                rows[v] |= 1 << u
                rows[u] |= 1 << v
            bit += 1
    return Graph(n, rows)


def _bit_to_pair(bit: int) -> tuple[int, int]:
    # bits run column-wise: (0,1), (0,2), (1,2), (0,3), ...
    v = 1
    while v * (v - 1) // 2 <= bit:
        v += 1
    v -= 1
    return v, bit - v * (v - 1) // 2

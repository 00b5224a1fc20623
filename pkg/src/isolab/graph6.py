"""Reader and writer for the graph6 ASCII format.

Covers the standard encoding: 6-bit chunks offset by 63, vertex count as a
single byte for n < 63 or '~' + 3 bytes for 63 <= n < 258048, and the upper
triangle packed column by column (x_{0,1}, x_{0,2}, x_{1,2}, x_{0,3}, ...).
"""

from __future__ import annotations

from .graphs import Graph

__all__ = ["parse_graph6", "to_graph6", "iter_graph6_file", "load_graph6_file"]

_OFFSET = 63


def _read_n(data):
    """Decode the leading vertex count; returns (n, bytes consumed)."""
    if not data:
        raise ValueError("empty graph6 string")
    c0 = ord(data[0])
    if c0 < 63 or c0 > 126:
        raise ValueError(f"invalid graph6 byte {data[0]!r} at position 0")
    if c0 != 126:
        return c0 - _OFFSET, 1
    if len(data) >= 2 and ord(data[1]) == 126:
        if len(data) < 8:
            raise ValueError("truncated graph6 header")
        n = 0
        for c in data[2:8]:
            n = (n << 6) | (ord(c) - _OFFSET)
        return n, 8
    if len(data) < 4:
        raise ValueError("truncated graph6 header")
    n = 0
    for c in data[1:4]:
        n = (n << 6) | (ord(c) - _OFFSET)
    return n, 4


def parse_graph6(text, name=""):
    """Parse one graph6 string into a Graph."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    n, pos = _read_n(s)
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    body = s[pos:]
    if len(body) != nchars:
        raise ValueError(
            f"graph6 body has {len(body)} characters, expected {nchars} for n={n}"
            f" (body starts at position {pos})"
        )
    bits = 0
    for off, c in enumerate(body):
        v = ord(c) - _OFFSET
        if not 0 <= v < 64:
            raise ValueError(f"invalid graph6 byte {c!r} at position {pos + off}")
        bits = (bits << 6) | v
    bits >>= 6 * nchars - nbits  # drop the zero padding
    adj = [0] * n
    # bits now holds the upper triangle, most significant bit first
    k = nbits - 1
    for col in range(1, n):
        for row in range(col):
            if (bits >> k) & 1:
                adj[row] |= 1 << col
                adj[col] |= 1 << row
            k -= 1
    return Graph(n, adj, name=name)


def to_graph6(g):
    """Encode a Graph as a graph6 string (no trailing newline)."""
    n = g.n
    if n < 0 or n >= 258048:
        raise ValueError("graph6 supports 0 <= n < 258048")
    if n < 63:
        head = chr(n + _OFFSET)
    else:
        head = "~" + "".join(
            chr(((n >> shift) & 63) + _OFFSET) for shift in (12, 6, 0)
        )
    nbits = n * (n - 1) // 2
    bits = 0
    for col in range(1, n):
        for row in range(col):
            bits = (bits << 1) | ((g.adj[row] >> col) & 1)
    nchars = (nbits + 5) // 6
    bits <<= 6 * nchars - nbits
    body = []
    for i in range(nchars):
        shift = 6 * (nchars - 1 - i)
        body.append(chr(((bits >> shift) & 63) + _OFFSET))
    return head + "".join(body)


def iter_graph6_file(lines):
    """Yield (name, Graph) pairs from graph6 lines.

    A comment line '# some name' names the next graph; graphs without a
    preceding comment get an empty name.
    """
    pending = ""
    for raw in lines:
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            pending = line[1:].strip()
            continue
        yield pending, parse_graph6(line, name=pending)
        pending = ""


def load_graph6_file(path):
    with open(path, "r", encoding="ascii") as fh:
        return list(iter_graph6_file(fh))

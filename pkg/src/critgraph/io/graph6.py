"""graph6 encoding and decoding (bit-exact with the nauty format).

The header encodes ``n`` as one byte (``n + 63``) for ``n <= 62``, as ``~``
plus three 6-bit groups for ``n <= 258047``, and as ``~~`` plus six groups
beyond that. The body lists the upper triangle column by column
(x01, x02, x12, x03, ...), padded to a multiple of six bits.
"""

from __future__ import annotations

from ..errors import DecodeError
from ..graph import SimpleGraph

HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def _decode_n(s: str) -> tuple[int, int]:
    """Return ``(n, header_length)``."""
    if not s:
        raise DecodeError("empty graph6 string")
    if s[0] != "~":
        return ord(s[0]) - 63, 1
    if len(s) > 1 and s[1] == "~":
        if len(s) < 8:
            raise DecodeError("truncated graph6 size header")
        groups, start = s[2:8], 8
    else:
        if len(s) < 4:
            raise DecodeError("truncated graph6 size header")
        groups, start = s[1:4], 4
    n = 0
    for ch in groups:
        n = (n << 6) | (ord(ch) - 63)
    return n, start


def graph6_length(s: str) -> int:
    """Total length of the graph6 string starting at ``s[0]``, from its header."""
    n, start = _decode_n(s)
    return start + (n * (n - 1) // 2 + 5) // 6


def encode_graph6(g: SimpleGraph) -> str:
    bits = [1 if (i, j) in g.edges else 0 for j in range(1, g.n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    body = "".join(
        chr(63 + int("".join(map(str, bits[k:k + 6])), 2)) for k in range(0, len(bits), 6)
    )
    return _encode_n(g.n) + body


def decode_graph6(s: str) -> SimpleGraph:
    s = s.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if any(not (63 <= ord(ch) <= 126) for ch in s):
        raise DecodeError(f"character outside graph6 range in {s!r}")
    n, start = _decode_n(s)
    nbits = n * (n - 1) // 2
    body = s[start:]
    if len(body) != (nbits + 5) // 6:
        raise DecodeError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6} for n={n}")
    edges = set()
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                edges.add((i, j))
            k += 1
    return SimpleGraph(n, frozenset(edges))


def read_graph6_file(text: str) -> list[SimpleGraph]:
    return [decode_graph6(line) for line in text.splitlines() if line.strip()]

"""Edge-list format: first line ``n m``, then one ``u v`` pair per line."""

from __future__ import annotations

from ..errors import DecodeError, GraphError
from ..graph import SimpleGraph


def encode_edgelist(g: SimpleGraph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def decode_edgelist(text: str) -> SimpleGraph:
    rows = [line.split() for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]
    if not rows:
        raise DecodeError("empty edge list")
    try:
        n, m = map(int, rows[0])
        edges = [(int(u), int(v)) for u, v in rows[1:]]
    except ValueError as exc:
        raise DecodeError(f"malformed edge list: {exc}") from exc
    if len(edges) != m:
        raise DecodeError(f"header announces {m} edges, found {len(edges)}")
    try:
        return SimpleGraph.from_edges(n, edges)
    except GraphError as exc:
        raise DecodeError(str(exc)) from exc

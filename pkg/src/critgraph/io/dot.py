"""Graphviz DOT export."""

from __future__ import annotations

from typing import Optional

from ..constructions import ComposedGraph
from ..graph import SimpleGraph


def export_dot(g: SimpleGraph, meta: Optional[ComposedGraph] = None, name: str = "G") -> str:
    """Undirected DOT text with vertices named ``v0 .. v{n-1}``.

    With construction metadata the apex is drawn as a white node labelled
    ``z``, its edges dashed, and any other construction-added edge bold.
    """
    apex = meta.apex if meta is not None else None
    new_edges = meta.new_edges if meta is not None else frozenset()
    lines = [f"graph {name} {{", "  node [shape=circle, style=filled, fillcolor=black, fontcolor=white];"]
    for v in range(g.n):
        if v == apex:
            lines.append(f'  v{v} [label="z", fillcolor=white, fontcolor=black];')
        else:
            lines.append(f'  v{v} [label="{v}"];')
    for u, v in g.sorted_edges():
        attrs = ""
        if apex is not None and apex in (u, v):
            attrs = " [style=dashed]"
        elif (u, v) in new_edges:
            attrs = " [style=bold]"
        lines.append(f"  v{u} -- v{v}{attrs};")
    lines.append("}")
    return "\n".join(lines) + "\n"

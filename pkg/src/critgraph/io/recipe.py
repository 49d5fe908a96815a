"""Construction recipes: a small expression language naming seed graphs and
composition operators.

    expr  := BASE | "g6:" GRAPH6 | "file:" PATH | call
    call  := "ring(" item ("," item)+ ")" | "g3(" item "," item ")"
           | "g4(" item "," item ")"    | "hajos(" edged "," edged ")"
    item  := expr "@(" INT "," INT "," INT ")"
    edged := expr "@[" INT "," INT "]"

BASE is ``K4`` or ``W5``, plus the families ``Kn``, ``Cn``, ``Pn``, ``Wn``
(wheel on an n-cycle) and ``Ka,b``. A GRAPH6 token is delimited by the
length its own size header announces, so graph6 bytes such as ``@`` need no
escaping. A PATH runs up to the next ``@(``, ``@[``, ``,`` or ``)``.
Whitespace between tokens is ignored.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

from ..constructions import ComposedGraph, g3_compose, g4_compose, hajos_join, ring_compose
from ..errors import ArityError, DecodeError, EvenOperandCount, RecipeSyntaxError, UnknownBase
from ..graph import (
    SimpleGraph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
    wheel_graph,
)
from .edgelist import decode_edgelist
from .graph6 import decode_graph6, graph6_length

OPERATORS = ("ring", "g3", "g4", "hajos")


@dataclass(frozen=True)
class Base:
    name: str


@dataclass(frozen=True)
class Graph6Leaf:
    data: str


@dataclass(frozen=True)
class FileLeaf:
    path: str


@dataclass(frozen=True)
class Arg:
    expr: "Expr"
    # (a, b, c) face path for ring/g3/g4, (x, y) edge for hajos
    handle: tuple[int, ...]


@dataclass(frozen=True)
class Call:
    op: str
    args: tuple[Arg, ...]


Expr = Union[Base, Graph6Leaf, FileLeaf, Call]

_BASE_RE = re.compile(r"(?:K(\d+),(\d+)|([KCPW])(\d+))")


def base_graph(name: str) -> SimpleGraph:
    m = _BASE_RE.fullmatch(name)
    if not m:
        raise UnknownBase(f"unknown base graph {name!r}")
    if m.group(1):
        return complete_bipartite(int(m.group(1)), int(m.group(2)))
    kind, size = m.group(3), int(m.group(4))
    try:
        if kind == "K":
            return complete_graph(size)
        if kind == "P":
            return path_graph(size)
        if kind == "C":
            return cycle_graph(size)
        return wheel_graph(size)
    except Exception as exc:
        raise UnknownBase(f"cannot build {name!r}: {exc}") from exc


class _Parser:
    def __init__(self, text: str, allow_even: bool) -> None:
        self.text = text
        self.pos = 0
        self.allow_even = allow_even

    def error(self, msg: str, pos: Optional[int] = None) -> RecipeSyntaxError:
        pos = self.pos if pos is None else pos
        before = self.text[:pos]
        line = before.count("\n") + 1
        col = pos - (before.rfind("\n") + 1) + 1
        return RecipeSyntaxError(msg, line, col)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = repr(self.text[self.pos]) if self.pos < len(self.text) else "end of input"
            raise self.error(f"expected {ch!r}, found {found}")
        self.pos += 1

    def integer(self) -> int:
        self.skip_ws()
        m = re.compile(r"\d+").match(self.text, self.pos)
        if not m:
            raise self.error("expected an integer")
        self.pos = m.end()
        return int(m.group())

    def parse(self) -> Expr:
        node = self.expr()
        if self.peek():
            raise self.error(f"unexpected trailing input {self.text[self.pos:]!r}")
        return node

    def expr(self) -> Expr:
        self.skip_ws()
        m = re.compile(r"[A-Za-z][A-Za-z0-9]*").match(self.text, self.pos)
        if not m:
            raise self.error("expected a graph expression")
        word = m.group()
        self.pos = m.end()
        nxt = self.peek()
        if word in OPERATORS and nxt == "(":
            return self.call(word)
        if word in ("g6", "file") and nxt == ":":
            self.pos += 1
            return self.graph6_leaf() if word == "g6" else self.file_leaf()
        if nxt == "(" and not _BASE_RE.fullmatch(word):
            raise UnknownBase(f"unknown operator {word!r}")
        bip = re.compile(r"\s*,\s*(\d+)").match(self.text, self.pos)
        if re.fullmatch(r"K\d+", word) and bip:
            # an operand is always followed by '@', so ",digits" here is a bipartite size
            self.pos = bip.end()
            word = f"{word},{bip.group(1)}"
        base_graph(word)
        return Base(word)

    def graph6_leaf(self) -> Graph6Leaf:
        self.skip_ws()
        start = self.pos
        try:
            length = graph6_length(self.text[start:])
        except DecodeError as exc:
            raise self.error(f"bad graph6 token: {exc}") from exc
        data = self.text[start:start + length]
        if len(data) != length or any(not (63 <= ord(c) <= 126) for c in data):
            raise self.error("truncated or malformed graph6 token", start)
        self.pos = start + length
        return Graph6Leaf(data)

    def file_leaf(self) -> FileLeaf:
        start = self.pos
        m = re.compile(r"(?:(?!@[(\[])[^,)])+").match(self.text, start)
        if not m or not m.group().strip():
            raise self.error("expected a file path")
        self.pos = m.end()
        return FileLeaf(m.group().strip())

    def arg(self, edged: bool) -> Arg:
        expr = self.expr()
        self.expect("@")
        open_, close, count = ("[", "]", 2) if edged else ("(", ")", 3)
        self.expect(open_)
        vals = [self.integer()]
        for _ in range(count - 1):
            self.expect(",")
            vals.append(self.integer())
        self.expect(close)
        return Arg(expr, tuple(vals))

    def call(self, op: str) -> Call:
        self.expect("(")
        edged = op == "hajos"
        args = [self.arg(edged)]
        while self.peek() == ",":
            self.pos += 1
            args.append(self.arg(edged))
        self.expect(")")
        check_arity(op, len(args), self.allow_even)
        return Call(op, tuple(args))


def check_arity(op: str, count: int, allow_even: bool = False) -> None:
    if op == "ring":
        if count % 2 == 0 and not allow_even:
            raise EvenOperandCount(count)
        if count < (2 if allow_even else 3):
            raise ArityError(f"ring needs at least 3 operands, got {count}")
    elif count != 2:
        raise ArityError(f"{op} takes exactly 2 operands, got {count}")


def parse_recipe(text: str, *, allow_even: bool = False) -> Expr:
    return _Parser(text, allow_even).parse()


def format_recipe(node: Expr) -> str:
    """Canonical text: no whitespace, handles written as ``@(a,b,c)``/``@[x,y]``."""
    if isinstance(node, Base):
        return node.name
    if isinstance(node, Graph6Leaf):
        return f"g6:{node.data}"
    if isinstance(node, FileLeaf):
        return f"file:{node.path}"
    parts = []
    for a in node.args:
        inner = ",".join(map(str, a.handle))
        wrapped = f"[{inner}]" if node.op == "hajos" else f"({inner})"
        parts.append(f"{format_recipe(a.expr)}@{wrapped}")
    return f"{node.op}({','.join(parts)})"


def load_graph_file(path: Path) -> SimpleGraph:
    text = path.read_text()
    suffix = path.suffix.lower()
    if suffix == ".el":
        return decode_edgelist(text)
    if suffix == ".recipe":
        return evaluate_recipe(parse_recipe(text), base_dir=path.parent)[0]
    if suffix == ".g6":
        lines = [line for line in text.splitlines() if line.strip()]
        if not lines:
            raise DecodeError(f"{path} is empty")
        return decode_graph6(lines[0])
    return sniff_graph(text)


def sniff_graph(text: str) -> SimpleGraph:
    """Decode text whose format is unknown: an ``n m`` first line means an
    edge list, anything else is read as graph6."""
    first = next((line for line in text.splitlines() if line.strip()), "")
    if not first:
        raise DecodeError("empty input")
    if len(first.split()) == 2:
        return decode_edgelist(text)
    return decode_graph6(first)


def evaluate_recipe(
    node: Expr, *, base_dir: Path = Path("."), unsafe_even: bool = False
) -> tuple[SimpleGraph, Optional[ComposedGraph]]:
    """Build the graph a recipe describes; the second item is the outermost
    construction's metadata (``None`` for a bare leaf)."""
    if isinstance(node, Base):
        return base_graph(node.name), None
    if isinstance(node, Graph6Leaf):
        return decode_graph6(node.data), None
    if isinstance(node, FileLeaf):
        p = Path(node.path)
        return load_graph_file(p if p.is_absolute() else base_dir / p), None
    check_arity(node.op, len(node.args), unsafe_even)
    operands = [(evaluate_recipe(a.expr, base_dir=base_dir, unsafe_even=unsafe_even)[0], a.handle) for a in node.args]
    if node.op == "ring":
        cg = ring_compose(operands, unsafe_even=unsafe_even)
    elif node.op == "g3":
        cg = g3_compose(operands[0][0], operands[0][1], operands[1][0], operands[1][1])
    elif node.op == "g4":
        cg = g4_compose(operands[0][0], operands[0][1], operands[1][0], operands[1][1])
    else:
        cg = hajos_join(operands[0][0], operands[0][1], operands[1][0], operands[1][1])
    return cg.graph, cg

"""Command-line front end.

Artifacts (graphs, reports, colourings) go to stdout or ``--out``;
diagnostics go to stderr. Exit codes:

    0  success / graph is critical / colouring found / planar
    1  negative verdict (not critical, no colouring, nonplanar)
    2  recipe syntax, decode or I/O error
    3  construction precondition error
    4  exact-solver size guard hit
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from .coloring import DEFAULT_MAX_N, find_k_coloring
from .constructions import ComposedGraph, k4_ring_family
from .criticality import verify_k_critical
from .errors import (
    ColoringError,
    ConstructionError,
    CritGraphError,
    DecodeError,
    GraphError,
    RecipeError,
    TooLarge,
)
from .graph import SimpleGraph
from .io import encode_edgelist, encode_graph6, evaluate_recipe, export_dot, parse_recipe, serialize_report
from .io.recipe import load_graph_file, sniff_graph
from .planarity import planarity_test

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_CONSTRUCTION, EXIT_GUARD = 0, 1, 2, 3, 4

FAMILIES = ("k4ring",)
GRAPH_SUFFIXES = {".g6", ".el", ".recipe"}


class CliError(Exception):
    def __init__(self, message: str, code: int) -> None:
        super().__init__(message)
        self.code = code


def _diag(msg: str) -> None:
    print(msg, file=sys.stderr)


def load_input(source: str, unsafe_even: bool = False) -> tuple[SimpleGraph, Optional[ComposedGraph]]:
    """A graph file (.g6, .el, .recipe) or an inline recipe."""
    path = Path(source)
    try:
        if source == "-":
            return sniff_graph(sys.stdin.read()), None
        if path.suffix.lower() in GRAPH_SUFFIXES or (path.exists() and not path.is_dir()):
            if not path.exists():
                raise CliError(f"cannot read {source}", EXIT_INPUT)
            if path.suffix.lower() == ".recipe":
                tree = parse_recipe(path.read_text(), allow_even=unsafe_even)
                return evaluate_recipe(tree, base_dir=path.parent, unsafe_even=unsafe_even)
            return load_graph_file(path), None
        tree = parse_recipe(source, allow_even=unsafe_even)
        return evaluate_recipe(tree, unsafe_even=unsafe_even)
    except ConstructionError as exc:
        raise CliError(str(exc), EXIT_CONSTRUCTION) from exc
    except (RecipeError, DecodeError, OSError) as exc:
        raise CliError(str(exc), EXIT_INPUT) from exc
    except GraphError as exc:
        # surgery failures inside an operator, e.g. a Hajós edge that is absent
        raise CliError(str(exc), EXIT_CONSTRUCTION) from exc


def render(g: SimpleGraph, fmt: str, meta: Optional[ComposedGraph] = None) -> str:
    if fmt == "g6":
        return encode_graph6(g) + "\n"
    if fmt == "el":
        return encode_edgelist(g)
    return export_dot(g, meta)


def _format_for(args: argparse.Namespace) -> str:
    if args.format:
        return args.format
    if args.out:
        suffix = Path(args.out).suffix.lower().lstrip(".")
        if suffix in ("g6", "el", "dot"):
            return suffix
    return "g6"


def emit(text: str, out: Optional[str]) -> None:
    if out:
        try:
            Path(out).write_text(text)
        except OSError as exc:
            raise CliError(f"cannot write {out}: {exc}", EXIT_INPUT) from exc
    else:
        sys.stdout.write(text)


def cmd_construct(args: argparse.Namespace) -> int:
    g, meta = load_input(args.recipe, args.unsafe_even)
    _diag(f"n={g.n} m={g.m}")
    for w in meta.warnings if meta else ():
        _diag(f"warning: {w}")
    emit(render(g, _format_for(args), meta), args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g, _ = load_input(args.input, args.unsafe_even)
    try:
        report = verify_k_critical(g, args.k, jobs=args.jobs, max_n=args.max_n)
    except TooLarge as exc:
        raise CliError(f"{exc}; raise --max-n to override", EXIT_GUARD) from exc
    emit(serialize_report(report), args.out)
    verdict = "critical" if report.is_k_critical else "not critical"
    _diag(f"n={g.n} m={g.m} chromatic{report.chromatic_comparison}{args.k} planar={str(report.planar).lower()} "
          f"failing_edges={len(report.failing_edges)}: {args.k}-{verdict}")
    return EXIT_OK if report.is_k_critical else EXIT_NEGATIVE


def cmd_family(args: argparse.Namespace) -> int:
    if args.name not in FAMILIES:
        raise CliError(f"unknown family {args.name!r} (known: {', '.join(FAMILIES)})", EXIT_INPUT)
    try:
        cg = k4_ring_family(args.k)
    except CritGraphError as exc:
        raise CliError(str(exc), EXIT_INPUT) from exc
    _diag(f"n={cg.n} m={cg.m}")
    emit(render(cg.graph, _format_for(args), cg), args.out)
    return EXIT_OK


def parse_fix(text: Optional[str]) -> dict[int, int]:
    fixed: dict[int, int] = {}
    if not text:
        return fixed
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            v, c = part.split("=")
            fixed[int(v)] = int(c)
        except ValueError as exc:
            raise CliError(f"bad --fix entry {part!r}; expected v=c", EXIT_INPUT) from exc
    return fixed


def cmd_color(args: argparse.Namespace) -> int:
    g, _ = load_input(args.input, args.unsafe_even)
    fixed = parse_fix(args.fix)
    try:
        col = find_k_coloring(g, args.k, fixed, max_n=args.max_n)
    except TooLarge as exc:
        raise CliError(str(exc), EXIT_GUARD) from exc
    except ColoringError as exc:
        raise CliError(str(exc), EXIT_INPUT) from exc
    if col is None:
        emit("none\n", args.out)
        return EXIT_NEGATIVE
    emit(" ".join(f"{v}:{c}" for v, c in enumerate(col)) + "\n", args.out)
    return EXIT_OK


def cmd_planar(args: argparse.Namespace) -> int:
    g, _ = load_input(args.input, args.unsafe_even)
    res = planarity_test(g)
    lines = ["planar" if res.planar else "nonplanar"]
    if res.planar and args.rotation:
        lines += [f"{v}: {' '.join(map(str, order))}" for v, order in enumerate(res.rotation)]
    emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if res.planar else EXIT_NEGATIVE


def cmd_export(args: argparse.Namespace) -> int:
    g, meta = load_input(args.input, args.unsafe_even)
    emit(render(g, _format_for(args), meta), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="critgraph", description="Build and verify 4-critical planar graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, with_format: bool = False) -> None:
        p.add_argument("--out", help="write the artifact here instead of stdout")
        p.add_argument("--unsafe-even", action="store_true", help="allow even ring compositions")
        if with_format:
            p.add_argument("--format", choices=("g6", "el", "dot"))

    p = sub.add_parser("construct", help="build a graph from a recipe")
    p.add_argument("recipe", help="inline recipe or a .recipe file")
    common(p, with_format=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check k-criticality and write a report")
    p.add_argument("input")
    p.add_argument("--k", type=int, default=4)
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("family", help="emit a member of a catalog family")
    p.add_argument("name", help="family name: " + ", ".join(FAMILIES))
    p.add_argument("--k", type=int, default=1)
    common(p, with_format=True)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("color", help="find a k-colouring")
    p.add_argument("input")
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--fix", help="pinned colours, e.g. 0=0,3=1")
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    common(p)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("planar", help="test planarity")
    p.add_argument("input")
    p.add_argument("--rotation", action="store_true", help="also print the rotation system")
    common(p)
    p.set_defaults(func=cmd_planar)

    p = sub.add_parser("export", help="convert a graph between formats")
    p.add_argument("input")
    common(p, with_format=True)
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        _diag(f"error: {exc}")
        return exc.code


if __name__ == "__main__":
    sys.exit(main())

"""Criticality reports as JSON with a fixed key order."""

from __future__ import annotations

import json

from ..criticality import CriticalityReport

FORMAT = "critgraph-report/1"


def report_to_dict(r: CriticalityReport) -> dict:
    return {
        "format": FORMAT,
        "k": r.k,
        "n": r.n,
        "m": r.m,
        "chromatic": r.chromatic,
        "chromatic_comparison": r.chromatic_comparison,
        "planar": r.planar,
        "is_k_critical": r.is_k_critical,
        "failing_edges": [list(e) for e in r.failing_edges],
        "witnesses": [
            {"edge": list(e), "coloring": list(c)} for e, c in sorted(r.per_edge_witness.items())
        ],
    }


def serialize_report(r: CriticalityReport) -> str:
    return json.dumps(report_to_dict(r), indent=2) + "\n"


def parse_report(text: str) -> CriticalityReport:
    d = json.loads(text)
    return CriticalityReport(
        k=d["k"],
        chromatic=d["chromatic"],
        planar=d["planar"],
        n=d["n"],
        m=d["m"],
        failing_edges=tuple(tuple(e) for e in d["failing_edges"]),
        per_edge_witness={tuple(w["edge"]): tuple(w["coloring"]) for w in d["witnesses"]},
    )

"""k-criticality checked by definition: chromatic number exactly k and every
single-edge deletion (k-1)-colourable."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .coloring import DEFAULT_MAX_N, Coloring, chromatic_number, find_k_coloring, forced_equal, is_proper
from .errors import BoundExceeded, ColoringError, NotCritical
from .graph import Edge, SimpleGraph, remove_edge
from .planarity import planarity_test


@dataclass(frozen=True)
class CriticalityReport:
    k: int
    # exact chromatic number, or None when it exceeds k + 1
    chromatic: Optional[int]
    planar: bool
    n: int
    m: int
    failing_edges: tuple[Edge, ...] = ()
    per_edge_witness: dict[Edge, Coloring] = field(default_factory=dict)

    @property
    def chromatic_comparison(self) -> str:
        """Relation of the chromatic number to ``k``: ``<``, ``=`` or ``>``."""
        if self.chromatic is None or self.chromatic > self.k:
            return ">"
        return "=" if self.chromatic == self.k else "<"

    @property
    def is_k_critical(self) -> bool:
        return self.chromatic == self.k and not self.failing_edges


def _edge_witness(args: tuple[SimpleGraph, Edge, int, Optional[int]]) -> tuple[Edge, Optional[Coloring]]:
    g, e, k, max_n = args
    return e, find_k_coloring(remove_edge(g, e), k, max_n=max_n)


def verify_k_critical(
    g: SimpleGraph, k: int, *, jobs: int = 1, max_n: Optional[int] = DEFAULT_MAX_N
) -> CriticalityReport:
    """Build the full criticality report for ``g`` at target ``k``.

    ``jobs > 1`` farms the per-edge (k-1)-colouring checks out to worker
    processes; the report does not depend on completion order.
    """
    if k < 2:
        raise ColoringError(f"criticality needs k >= 2, got {k}")
    try:
        chi: Optional[int] = chromatic_number(g, k + 1, max_n=max_n) if g.n else 0
    except BoundExceeded:
        chi = None
    edges = g.sorted_edges()
    tasks = [(g, e, k - 1, max_n) for e in edges]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = dict(pool.map(_edge_witness, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        results = dict(map(_edge_witness, tasks))
    failing = []
    witnesses: dict[Edge, Coloring] = {}
    for e in edges:
        col = results[e]
        if col is None:
            failing.append(e)
        else:
            witnesses[e] = col
    return CriticalityReport(
        k=k,
        chromatic=chi,
        planar=planarity_test(g).planar,
        n=g.n,
        m=g.m,
        failing_edges=tuple(failing),
        per_edge_witness=witnesses,
    )


def check_witnesses(g: SimpleGraph, report: CriticalityReport) -> bool:
    """Independent O(E)-per-edge audit of the stored witness colourings."""
    for e, col in report.per_edge_witness.items():
        if max(col, default=-1) >= report.k - 1 or not is_proper(remove_edge(g, e), col):
            return False
    return True


def forced_equal_all_edges(g: SimpleGraph, k: int, report: Optional[CriticalityReport] = None) -> bool:
    """Cross-check criticality through the forced-equal lemma: every
    (k-1)-colouring of ``g - e`` colours both ends of ``e`` alike."""
    if report is None:
        report = verify_k_critical(g, k)
    if not report.is_k_critical:
        raise NotCritical(f"graph is not {k}-critical")
    return all(forced_equal(g, e, k - 1) for e in g.sorted_edges())

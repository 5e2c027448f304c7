"""Snark certification: run every structural check and record the outcome.

A graph is certified a snark iff it is cubic, connected, bridgeless, has
girth at least 5, has cyclic edge connectivity at least 4, and admits no
proper 3-edge-coloring.  Checks that cannot run (coloring on a non-cubic
graph, cut enumeration over budget) are recorded as unchecked rather than
guessed; an unchecked field never certifies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Union

from .coloring import solve_3_edge_coloring
from .goldberg import GoldbergGraph
from .graph import (
    BudgetExceededError,
    Graph,
    cyclic_edge_connectivity_ge,
    find_bridges,
    girth,
    is_connected,
    is_cubic,
)

GIRTH_REQUIREMENT = 5
CYCLIC_CUT_REQUIREMENT = 4

# Number of candidate cuts the certificate is willing to enumerate before
# reporting the cyclic-connectivity field as unchecked.
DEFAULT_CUT_ENUMERATION_BUDGET = 2_000_000


@dataclass(frozen=True)
class SearchStats:
    """Deterministic work counters plus wall-clock time for the certificate."""

    coloring_decisions: int | None = None
    coloring_forced: int | None = None
    cut_candidates: int | None = None
    elapsed_seconds: float = 0.0


@dataclass(frozen=True)
class SnarkCertificate:
    is_cubic: bool
    is_connected: bool
    bridge_edges: tuple[tuple[int, int], ...]
    girth: Union[int, float]
    cyclic_edge_connectivity_ge_4: bool | None
    three_edge_colorable: bool | None
    search_stats: SearchStats = field(compare=False)
    unchecked: tuple[str, ...] = ()

    @property
    def is_snark(self) -> bool:
        return (
            self.is_cubic
            and self.is_connected
            and not self.bridge_edges
            and self.girth >= GIRTH_REQUIREMENT
            and self.cyclic_edge_connectivity_ge_4 is True
            and self.three_edge_colorable is False
        )


def snark_certificate(
    g: Graph | GoldbergGraph,
    cut_enumeration_budget: int = DEFAULT_CUT_ENUMERATION_BUDGET,
    progress: Callable[[int], None] | None = None,
) -> SnarkCertificate:
    """Assemble the full certificate for a graph or a constructed family member."""
    graph = g.graph if isinstance(g, GoldbergGraph) else g
    cubic = is_cubic(graph)
    connected = is_connected(graph)
    bridges = tuple(find_bridges(graph))
    g_girth = girth(graph)
    unchecked: list[str] = []

    cyclic_ok: bool | None = None
    cut_candidates: int | None = None
    if cubic and connected:
        try:
            cyclic_ok = cyclic_edge_connectivity_ge(
                graph, CYCLIC_CUT_REQUIREMENT, max_subsets=cut_enumeration_budget
            )
            m = len(graph.edges)
            cut_candidates = sum(
                math.comb(m, s) for s in range(1, CYCLIC_CUT_REQUIREMENT)
            )
        except BudgetExceededError:
            unchecked.append("cyclic_edge_connectivity_ge_4")
    else:
        unchecked.append("cyclic_edge_connectivity_ge_4")

    colorable: bool | None = None
    decisions: int | None = None
    forced: int | None = None
    elapsed = 0.0
    if cubic:
        outcome = solve_3_edge_coloring(graph, progress=progress)
        colorable = outcome.colorable
        decisions = outcome.decisions
        forced = outcome.forced
        elapsed = outcome.elapsed_seconds
    else:
        unchecked.append("three_edge_colorable")

    return SnarkCertificate(
        is_cubic=cubic,
        is_connected=connected,
        bridge_edges=bridges,
        girth=g_girth,
        cyclic_edge_connectivity_ge_4=cyclic_ok,
        three_edge_colorable=colorable,
        search_stats=SearchStats(decisions, forced, cut_candidates, elapsed),
        unchecked=tuple(unchecked),
    )

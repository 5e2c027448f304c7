"""Independent cordial-labeling search.

Up to 24 vertices the search is exhaustive: vertex 0 is pinned to label 0
(complementing a labeling flips the vertex counts and keeps every edge
label, so cordiality is complement-invariant and half the space suffices)
and the remaining assignments are swept as integer bitmasks in ascending
order with vectorized counting.  The verdict is therefore a certificate:
"absent" means no cordial labeling exists.

Above 24 vertices a deterministic seeded local search flips single vertex
labels to shrink vertex_diff + edge_diff, restarting from fresh balanced
assignments when stuck; it reports "found" or "unknown", never "absent".
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .graph import Graph
from .labeling import Labeling, cordiality_report, induce_edge_labels

EXHAUSTIVE_VERTEX_LIMIT = 24
_CHUNK = 1 << 20

FOUND = "found"
ABSENT = "absent"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class SearchBudget:
    """Limits for the local-search regime; the exhaustive regime ignores them."""

    max_nodes: int = 500_000
    seed: int = 0


@dataclass(frozen=True)
class CordialSearchResult:
    status: str  # FOUND, ABSENT or UNKNOWN
    labeling: Labeling | None
    nodes: int

    @property
    def found(self) -> bool:
        return self.status == FOUND


def search_cordial(
    g: Graph,
    budget: SearchBudget | None = None,
    progress: Callable[[int], None] | None = None,
) -> CordialSearchResult:
    """Find a cordial labeling, certify absence, or give up within budget."""
    if budget is None:
        budget = SearchBudget()
    if g.vertex_count <= EXHAUSTIVE_VERTEX_LIMIT:
        return _exhaustive(g, progress)
    return _local_search(g, budget, progress)


def _labeling_from_mask(g: Graph, mask: int) -> Labeling:
    labels = [0] * g.vertex_count
    for v in range(1, g.vertex_count):
        labels[v] = (mask >> (v - 1)) & 1
    return induce_edge_labels(g, labels)


def _exhaustive(
    g: Graph, progress: Callable[[int], None] | None
) -> CordialSearchResult:
    n = g.vertex_count
    if n == 0:
        return CordialSearchResult(FOUND, induce_edge_labels(g, ()), 1)
    total = 1 << (n - 1)
    m = len(g.edges)
    shifts = [(u - 1, v - 1) for u, v in g.edges]
    next_tick = time.monotonic() + 10.0
    examined = 0
    for lo in range(0, total, _CHUNK):
        hi = min(lo + _CHUNK, total)
        masks = np.arange(lo, hi, dtype=np.uint64)
        ones = np.bitwise_count(masks).astype(np.int64)
        vertex_ok = np.abs(n - 2 * ones) <= 1
        e1 = np.zeros(hi - lo, dtype=np.int64)
        for su, sv in shifts:
            if su < 0:
                # Vertex 0 is pinned to label 0: the edge copies the other bit.
                e1 += (masks >> np.uint64(sv)).astype(np.int64) & 1
            else:
                e1 += ((masks >> np.uint64(su)) ^ (masks >> np.uint64(sv))).astype(
                    np.int64
                ) & 1
        ok = vertex_ok & (np.abs(m - 2 * e1) <= 1)
        hits = np.flatnonzero(ok)
        if hits.size:
            mask = int(masks[hits[0]])
            examined += int(hits[0]) + 1
            return CordialSearchResult(FOUND, _labeling_from_mask(g, mask), examined)
        examined += hi - lo
        if progress is not None and time.monotonic() >= next_tick:
            next_tick = time.monotonic() + 10.0
            progress(examined)
    return CordialSearchResult(ABSENT, None, examined)


def _local_search(
    g: Graph, budget: SearchBudget, progress: Callable[[int], None] | None
) -> CordialSearchResult:
    n = g.vertex_count
    m = len(g.edges)
    adj = g.adjacency
    rng = random.Random(budget.seed)
    nodes = 0
    next_tick = time.monotonic() + 10.0

    def fresh() -> list[int]:
        labels = [1] * (n // 2) + [0] * (n - n // 2)
        rng.shuffle(labels)
        return labels

    labels = fresh()
    v1 = sum(labels)
    e1 = sum(labels[u] ^ labels[v] for u, v in g.edges)

    def score(v1_: int, e1_: int) -> int:
        return abs(n - 2 * v1_) + abs(m - 2 * e1_)

    def cordial(v1_: int, e1_: int) -> bool:
        return abs(n - 2 * v1_) <= 1 and abs(m - 2 * e1_) <= 1

    while nodes < budget.max_nodes:
        if cordial(v1, e1):
            return CordialSearchResult(FOUND, induce_edge_labels(g, labels), nodes)
        current = score(v1, e1)
        best_vertex = -1
        best_score = current
        best_state = (v1, e1)
        for v in range(n):
            nodes += 1
            dv1 = v1 + (1 if labels[v] == 0 else -1)
            # Flipping v toggles the label of every incident edge.
            flipped_to_1 = sum(
                1 for w in adj[v] if labels[v] ^ labels[w] == 0
            )
            de1 = e1 + flipped_to_1 - (len(adj[v]) - flipped_to_1)
            s = score(dv1, de1)
            if s < best_score:  # strict improvement; ties keep the lowest id
                best_score = s
                best_vertex = v
                best_state = (dv1, de1)
            if nodes >= budget.max_nodes:
                break
        if progress is not None and time.monotonic() >= next_tick:
            next_tick = time.monotonic() + 10.0
            progress(nodes)
        if best_vertex < 0:
            labels = fresh()
            v1 = sum(labels)
            e1 = sum(labels[u] ^ labels[v] for u, v in g.edges)
            nodes += 1
            continue
        labels[best_vertex] ^= 1
        v1, e1 = best_state
    if cordial(v1, e1):
        return CordialSearchResult(FOUND, induce_edge_labels(g, labels), nodes)
    return CordialSearchResult(UNKNOWN, None, nodes)


def verify_found(g: Graph, result: CordialSearchResult) -> bool:
    """Recount a found labeling; True iff the report confirms cordiality."""
    if result.labeling is None:
        return False
    return cordiality_report(g, result.labeling).is_cordial

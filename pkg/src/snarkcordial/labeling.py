"""Binary vertex labelings, induced edge labels, and cordiality checking.

A labeling assigns each vertex 0 or 1; every edge receives the absolute
difference (equivalently XOR) of its endpoint labels.  A labeling is
cordial when both the vertex counts and the induced edge counts differ by
at most one.

Two slot patterns drive every family schedule:

    pattern 1: label 1 on odd slots, 0 on even slots
    pattern 2: label 1 on slots {1,2,3,5}, 0 on slots {4,6,7,8}

Both give any G_n exactly 4n/4n vertex and 6n/6n edge counts.  They agree
everywhere except slots 2 and 7, which is what the composite schedules
exploit at the attachment vertex (default slot 7).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

from .compositions import (
    ONE_POINT_UNION,
    OPEN_STAR,
    PATH_UNION,
    AttachmentPolicy,
    CompositeGraph,
    CopyKey,
    DEFAULT_POLICY,
    one_point_union_paths,
    open_star,
    path_union,
)
from .goldberg import BLOCK_SIZE
from .graph import Graph, GraphError, ParameterError


class LabelingError(GraphError):
    """A labeling does not fit its graph."""


PATTERN_1 = "p1"
PATTERN_2 = "p2"

SLOT_LABELS: dict[str, dict[int, int]] = {
    PATTERN_1: {j: j % 2 for j in range(1, 9)},
    PATTERN_2: {j: 1 if j in (1, 2, 3, 5) else 0 for j in range(1, 9)},
}


@dataclass(frozen=True)
class Labeling:
    """Vertex labels indexed by id; edge labels aligned with the canonical
    edge order of the owning graph.  Edge labels are always derived."""

    vertex_labels: tuple[int, ...]
    edge_labels: tuple[int, ...]

    def edge_label_map(self, g: Graph) -> dict[tuple[int, int], int]:
        if len(self.edge_labels) != len(g.edges):
            raise LabelingError("edge label count does not match graph")
        return dict(zip(g.edges, self.edge_labels))


@dataclass(frozen=True)
class CordialityReport:
    v0: int
    v1: int
    e0: int
    e1: int
    vertex_diff: int
    edge_diff: int
    is_cordial: bool


def induce_edge_labels(
    g: Graph, vertex_labels: Sequence[int] | Mapping[int, int]
) -> Labeling:
    """Attach the induced edge labels to a total vertex labeling."""
    if isinstance(vertex_labels, Mapping):
        try:
            flat = tuple(vertex_labels[v] for v in range(g.vertex_count))
        except KeyError as missing:
            raise LabelingError(f"vertex {missing.args[0]} has no label") from None
    else:
        flat = tuple(vertex_labels)
        if len(flat) != g.vertex_count:
            raise LabelingError(
                f"{len(flat)} labels for {g.vertex_count} vertices"
            )
    if any(x not in (0, 1) for x in flat):
        raise LabelingError("labels must be 0 or 1")
    edge = tuple(flat[u] ^ flat[v] for u, v in g.edges)
    return Labeling(flat, edge)


def cordiality_report(g: Graph, labeling: Labeling) -> CordialityReport:
    """Recount everything from scratch and render the verdict.

    The stored edge labels are re-derived from the vertex labels; any
    disagreement means the labeling belongs to a different graph.
    """
    if len(labeling.vertex_labels) != g.vertex_count:
        raise LabelingError("vertex label count does not match graph")
    induced = tuple(
        labeling.vertex_labels[u] ^ labeling.vertex_labels[v] for u, v in g.edges
    )
    if induced != labeling.edge_labels:
        raise LabelingError("edge labels are not the induced labels of this graph")
    v1 = sum(labeling.vertex_labels)
    v0 = g.vertex_count - v1
    e1 = sum(induced)
    e0 = len(g.edges) - e1
    vertex_diff = abs(v0 - v1)
    edge_diff = abs(e0 - e1)
    return CordialityReport(
        v0, v1, e0, e1, vertex_diff, edge_diff, vertex_diff <= 1 and edge_diff <= 1
    )


def complement(labeling: Labeling) -> Labeling:
    """Flip every vertex label; induced edge labels are unchanged."""
    return Labeling(
        tuple(1 - x for x in labeling.vertex_labels), labeling.edge_labels
    )


def _slot_pattern_labels(n: int, pattern: str) -> tuple[int, ...]:
    if n < 3 or n % 2 == 0:
        raise ParameterError(f"pattern labelings need odd n >= 3, got {n}")
    table = SLOT_LABELS[pattern]
    block = tuple(table[j] for j in range(1, BLOCK_SIZE + 1))
    return block * n


def pattern1(n: int) -> tuple[int, ...]:
    """Slot-parity labels for G_n: 1 on odd slots, 0 on even slots."""
    return _slot_pattern_labels(n, PATTERN_1)


def pattern2(n: int) -> tuple[int, ...]:
    """Slot-split labels for G_n: 1 on slots {1,2,3,5}, 0 on {4,6,7,8}."""
    return _slot_pattern_labels(n, PATTERN_2)


@dataclass(frozen=True)
class PatternSchedule:
    """Which pattern each copy of a composite receives, plus the apex label.

    Keys match the composite's copy keys: ``(k,)`` for path unions and open
    stars, ``(arm, position)`` for one-point unions.
    """

    patterns: Mapping[CopyKey, str]
    apex_label: int | None = None

    def pattern_for(self, key: CopyKey) -> str:
        return self.patterns[key]


def path_union_schedule(m: int) -> PatternSchedule:
    """Copies at positions 1,2 mod 4 take pattern 1, positions 3,0 pattern 2.

    At the default attachment slot the two patterns disagree, so the m-1
    joining edges alternate labels 0,1,0,1,... along the row.
    """
    if m < 1:
        raise ParameterError(f"need at least one copy, got {m}")
    return PatternSchedule(
        {(k,): PATTERN_1 if k % 4 in (1, 2) else PATTERN_2 for k in range(1, m + 1)}
    )


def open_star_schedule(t: int) -> PatternSchedule:
    """Apex 0; the first ceil(t/2) branches take pattern 1, the rest pattern 2."""
    if t < 2:
        raise ParameterError(f"need at least two branches, got {t}")
    half = math.ceil(t / 2)
    return PatternSchedule(
        {(k,): PATTERN_1 if k <= half else PATTERN_2 for k in range(1, t + 1)},
        apex_label=0,
    )


def one_point_union_schedule(t: int, p: int) -> PatternSchedule:
    """Apex 0; first ceil(t/2) arms take pattern 1 at every position, the
    remaining arms alternate pattern 2 / pattern 1 by position parity."""
    if t < 2:
        raise ParameterError(f"need at least two arms, got {t}")
    if p < 1:
        raise ParameterError(f"need at least one copy per arm, got {p}")
    half = math.ceil(t / 2)
    patterns: dict[CopyKey, str] = {}
    for arm in range(1, t + 1):
        for pos in range(1, p + 1):
            if arm <= half:
                patterns[(arm, pos)] = PATTERN_1
            else:
                patterns[(arm, pos)] = PATTERN_2 if pos % 2 == 1 else PATTERN_1
    return PatternSchedule(patterns, apex_label=0)


def schedule_for(composite: CompositeGraph) -> PatternSchedule:
    """The family schedule matching the composite's parameters."""
    if composite.family == PATH_UNION:
        assert composite.m is not None
        return path_union_schedule(composite.m)
    if composite.family == OPEN_STAR:
        assert composite.t is not None
        return open_star_schedule(composite.t)
    assert composite.t is not None and composite.p is not None
    return one_point_union_schedule(composite.t, composite.p)


def apply_schedule(
    composite: CompositeGraph, schedule: PatternSchedule
) -> Labeling:
    """Label every copy by its scheduled pattern and induce edge labels."""
    g = composite.graph
    labels = [0] * g.vertex_count
    if composite.has_apex:
        if schedule.apex_label is None:
            raise LabelingError("composite has an apex but the schedule labels none")
        labels[0] = schedule.apex_label
    for key in composite.copy_keys():
        table = SLOT_LABELS[schedule.pattern_for(key)]
        off = composite.copy_offset(key)
        for local in range(composite.copy_size):
            labels[off + local] = table[local % BLOCK_SIZE + 1]
    return induce_edge_labels(g, labels)


def label_path_union(
    n: int, m: int, policy: AttachmentPolicy = DEFAULT_POLICY
) -> Labeling:
    """Build the m-copy path union and label it by its schedule."""
    composite = path_union(n, m, policy)
    return apply_schedule(composite, path_union_schedule(m))


def label_open_star(
    n: int, t: int, policy: AttachmentPolicy = DEFAULT_POLICY
) -> Labeling:
    """Build the t-branch open star and label it by its schedule."""
    composite = open_star(n, t, policy)
    return apply_schedule(composite, open_star_schedule(t))


def label_one_point_union(
    n: int, t: int, p: int, policy: AttachmentPolicy = DEFAULT_POLICY
) -> Labeling:
    """Build the t-arm, p-copy one-point union and label it by its schedule."""
    composite = one_point_union_paths(n, t, p, policy)
    return apply_schedule(composite, one_point_union_schedule(t, p))

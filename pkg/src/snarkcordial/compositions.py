"""Derived families: path unions, open stars, and one-point unions of paths.

Every composite is built from disjoint copies of G_n plus joining edges.
The joining edges attach at one configurable vertex per copy (the
attachment policy, default block 1 slot 7); copies never share vertices so
joins cannot create loops or parallel edges.

Id layout keeps the degenerate cases byte-identical in canonical form:
the apex (when present) is id 0 and copies occupy contiguous 8n-slices in
copy order, so a path union with one copy equals G_n and a one-point union
with one copy per arm equals the open star on the same arm count.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .goldberg import BLOCK_SIZE, goldberg_edges
from .graph import Graph, ParameterError, VertexCoord

PATH_UNION = "path_union"
OPEN_STAR = "open_star"
ONE_POINT_UNION = "one_point_union"

CopyKey = tuple[int, ...]


@dataclass(frozen=True)
class AttachmentPolicy:
    """Which vertex of each copy carries the joining edges.

    The default slot 7 is one of the two slots where the two labeling
    patterns disagree, which is what makes the joining-edge labels
    alternate instead of all collapsing to 0.
    """

    block: int = 1
    slot: int = 7

    def __post_init__(self) -> None:
        if self.block < 1:
            raise ParameterError(f"attachment block must be >= 1, got {self.block}")
        if not 1 <= self.slot <= BLOCK_SIZE:
            raise ParameterError(f"attachment slot must be in 1..8, got {self.slot}")

    def offset(self) -> int:
        """Vertex offset of the attachment vertex inside one copy."""
        return BLOCK_SIZE * (self.block - 1) + (self.slot - 1)


DEFAULT_POLICY = AttachmentPolicy()


@dataclass(frozen=True)
class CompositeGraph:
    """A built composite with its coordinate system.

    Copy keys are ``(k,)`` for path unions and open stars and
    ``(l, q)`` (arm, position outward from the apex) for one-point unions.
    """

    family: str
    n: int
    graph: Graph
    policy: AttachmentPolicy
    m: int | None = None
    t: int | None = None
    p: int | None = None

    @property
    def has_apex(self) -> bool:
        return self.family in (OPEN_STAR, ONE_POINT_UNION)

    @property
    def apex_id(self) -> int | None:
        return 0 if self.has_apex else None

    @property
    def copy_size(self) -> int:
        return BLOCK_SIZE * self.n

    def copy_keys(self) -> Iterator[CopyKey]:
        if self.family == PATH_UNION:
            assert self.m is not None
            for k in range(1, self.m + 1):
                yield (k,)
        elif self.family == OPEN_STAR:
            assert self.t is not None
            for k in range(1, self.t + 1):
                yield (k,)
        else:
            assert self.t is not None and self.p is not None
            for arm in range(1, self.t + 1):
                for pos in range(1, self.p + 1):
                    yield (arm, pos)

    def copy_offset(self, key: CopyKey) -> int:
        if self.family == PATH_UNION:
            (k,) = key
            return self.copy_size * (k - 1)
        if self.family == OPEN_STAR:
            (k,) = key
            return 1 + self.copy_size * (k - 1)
        arm, pos = key
        assert self.p is not None
        return 1 + self.copy_size * (self.p * (arm - 1) + (pos - 1))

    def vertex_id(self, key: CopyKey, i: int, j: int) -> int:
        if not 1 <= i <= self.n:
            raise ParameterError(f"block index {i} outside 1..{self.n}")
        if not 1 <= j <= BLOCK_SIZE:
            raise ParameterError(f"slot {j} outside 1..{BLOCK_SIZE}")
        return self.copy_offset(key) + BLOCK_SIZE * (i - 1) + (j - 1)

    def attachment_vertex(self, key: CopyKey) -> int:
        return self.copy_offset(key) + self.policy.offset()

    def copy_key_of(self, vertex: int) -> CopyKey | None:
        """Copy key owning the vertex, or None for the apex."""
        if self.has_apex:
            if vertex == 0:
                return None
            vertex -= 1
        index = vertex // self.copy_size
        if self.family == ONE_POINT_UNION:
            assert self.p is not None
            return (index // self.p + 1, index % self.p + 1)
        return (index + 1,)

    def copy_subgraph(self, key: CopyKey) -> Graph:
        """Induced subgraph on one copy, relabeled to the G_n id layout."""
        off = self.copy_offset(key)
        size = self.copy_size
        edges = [
            (u - off, v - off)
            for u, v in self.graph.edges
            if off <= u < off + size and off <= v < off + size
        ]
        return Graph(size, tuple(edges))


def _validate_family_n(n: int) -> None:
    if n < 5 or n % 2 == 0:
        raise ParameterError(f"composites need odd n >= 5, got {n}")


def _copy_coord(family: str, key: CopyKey, i: int, j: int) -> VertexCoord:
    if family == ONE_POINT_UNION:
        arm, pos = key
        return VertexCoord(i=i, j=j, k=pos, l=arm, m=pos)
    (k,) = key
    return VertexCoord(i=i, j=j, k=k)


def _assemble(
    family: str,
    n: int,
    policy: AttachmentPolicy,
    keys: list[CopyKey],
    joins: list[tuple[CopyKey | None, CopyKey]],
    **params: int,
) -> CompositeGraph:
    if policy.block > n:
        raise ParameterError(
            f"attachment block {policy.block} exceeds block count {n}"
        )
    base = goldberg_edges(n)
    size = BLOCK_SIZE * n
    has_apex = family in (OPEN_STAR, ONE_POINT_UNION)
    shell = CompositeGraph(family, n, Graph(0), policy, **params)

    edges: list[tuple[int, int]] = []
    coords: dict[int, VertexCoord] = {}
    if has_apex:
        coords[0] = VertexCoord(apex=True)
    for key in keys:
        off = shell.copy_offset(key)
        edges.extend((u + off, v + off) for u, v in base)
        for local in range(size):
            i, j = local // BLOCK_SIZE + 1, local % BLOCK_SIZE + 1
            coords[off + local] = _copy_coord(family, key, i, j)
    for src, dst in joins:
        a = 0 if src is None else shell.attachment_vertex(src)
        b = shell.attachment_vertex(dst)
        edges.append((a, b) if a < b else (b, a))

    total = (1 if has_apex else 0) + size * len(keys)
    graph = Graph(total, tuple(sorted(edges)), coords)
    return CompositeGraph(family, n, graph, policy, **params)


def path_union(
    n: int, m: int, policy: AttachmentPolicy = DEFAULT_POLICY
) -> CompositeGraph:
    """m disjoint copies of G_n joined in a row: copy k to copy k+1."""
    _validate_family_n(n)
    if m < 1:
        raise ParameterError(f"need at least one copy, got {m}")
    keys: list[CopyKey] = [(k,) for k in range(1, m + 1)]
    joins: list[tuple[CopyKey | None, CopyKey]] = [
        ((k,), (k + 1,)) for k in range(1, m)
    ]
    return _assemble(PATH_UNION, n, policy, keys, joins, m=m)


def open_star(
    n: int, t: int, policy: AttachmentPolicy = DEFAULT_POLICY
) -> CompositeGraph:
    """One apex joined to t disjoint copies of G_n, one edge per branch."""
    _validate_family_n(n)
    if t < 2:
        raise ParameterError(f"need at least two branches, got {t}")
    keys: list[CopyKey] = [(k,) for k in range(1, t + 1)]
    joins: list[tuple[CopyKey | None, CopyKey]] = [(None, (k,)) for k in range(1, t + 1)]
    return _assemble(OPEN_STAR, n, policy, keys, joins, t=t)


def one_point_union_paths(
    n: int, t: int, p: int, policy: AttachmentPolicy = DEFAULT_POLICY
) -> CompositeGraph:
    """One apex with t arms, each arm a row of p copies of G_n.

    The apex joins the first copy of every arm; inside an arm consecutive
    copies are joined at the attachment vertex, positions counted outward.
    """
    _validate_family_n(n)
    if t < 2:
        raise ParameterError(f"need at least two arms, got {t}")
    if p < 1:
        raise ParameterError(f"need at least one copy per arm, got {p}")
    keys: list[CopyKey] = [
        (arm, pos) for arm in range(1, t + 1) for pos in range(1, p + 1)
    ]
    joins: list[tuple[CopyKey | None, CopyKey]] = []
    for arm in range(1, t + 1):
        joins.append((None, (arm, 1)))
        joins.extend(((arm, pos), (arm, pos + 1)) for pos in range(1, p))
    return _assemble(ONE_POINT_UNION, n, policy, keys, joins, t=t, p=p)

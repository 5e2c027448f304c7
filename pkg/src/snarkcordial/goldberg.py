"""Goldberg snark family builder.

G_n consists of n eight-vertex blocks arranged in a ring.  Inside block i
(slots j = 1..8) the nine edges are

    (1,3) (2,4) (3,5) (5,7)   slot j to j+2 for j in {1,2,3,5}
    (1,6) (3,8)               slot j to j+5 for j in {1,3}
    (1,2) (4,5) (6,7)         slot j to j+1 for j in {1,4,6}

and consecutive blocks (wrapping n -> 1) are linked by three edge families:
slot 8 to slot 8, slot 6 to slot 7, and slot 4 to slot 2 of the next block.
That gives 8n vertices and 9n + 3n = 12n edges, all of degree 3.

Vertex ids are laid out block-major: id = 8*(i-1) + (j-1), so each block is
a contiguous slice and the canonical serialization is stable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, ParameterError, VertexCoord

INTRA_BLOCK_SLOT_EDGES: tuple[tuple[int, int], ...] = (
    (1, 2),
    (1, 3),
    (1, 6),
    (2, 4),
    (3, 5),
    (3, 8),
    (4, 5),
    (5, 7),
    (6, 7),
)

# (slot in block i, slot in block i+1) families, wrapping around the ring.
INTER_BLOCK_SLOT_EDGES: tuple[tuple[int, int], ...] = ((8, 8), (6, 7), (4, 2))

BLOCK_SIZE = 8


@dataclass(frozen=True)
class GoldbergGraph:
    """A constructed member of the family, with its block coordinate system."""

    n: int
    graph: Graph

    @property
    def in_standard_range(self) -> bool:
        """The family is usually taken to start at n = 5; n = 3 is a
        constructible outlier (its ring of slot-8 edges is a triangle)."""
        return self.n >= 5

    def vertex_id(self, i: int, j: int) -> int:
        if not 1 <= i <= self.n:
            raise ParameterError(f"block index {i} outside 1..{self.n}")
        if not 1 <= j <= BLOCK_SIZE:
            raise ParameterError(f"slot {j} outside 1..{BLOCK_SIZE}")
        return BLOCK_SIZE * (i - 1) + (j - 1)

    def coord_of(self, vertex: int) -> tuple[int, int]:
        if not 0 <= vertex < self.graph.vertex_count:
            raise ParameterError(f"vertex {vertex} outside graph")
        return vertex // BLOCK_SIZE + 1, vertex % BLOCK_SIZE + 1

    @property
    def coord_index(self) -> dict[tuple[int, int], int]:
        return {
            (i, j): self.vertex_id(i, j)
            for i in range(1, self.n + 1)
            for j in range(1, BLOCK_SIZE + 1)
        }


def _validate_n(n: int) -> None:
    if n < 3:
        raise ParameterError(f"need at least 3 blocks, got {n}")
    if n % 2 == 0:
        raise ParameterError(f"block count must be odd, got {n}")


def goldberg_edges(n: int) -> list[tuple[int, int]]:
    """Canonical edge list of G_n on the block-major id layout."""
    _validate_n(n)
    edges = []
    for i in range(n):
        base = BLOCK_SIZE * i
        for a, b in INTRA_BLOCK_SLOT_EDGES:
            edges.append((base + a - 1, base + b - 1))
        nxt = BLOCK_SIZE * ((i + 1) % n)
        for a, b in INTER_BLOCK_SLOT_EDGES:
            u, v = base + a - 1, nxt + b - 1
            edges.append((u, v) if u < v else (v, u))
    edges.sort()
    return edges


def goldberg(n: int) -> GoldbergGraph:
    """Construct G_n for odd n >= 3 (8n vertices, 12n edges, cubic)."""
    edges = goldberg_edges(n)
    coords = {
        BLOCK_SIZE * i + j: VertexCoord(i=i + 1, j=j + 1)
        for i in range(n)
        for j in range(BLOCK_SIZE)
    }
    return GoldbergGraph(n, Graph(BLOCK_SIZE * n, tuple(edges), coords))


def block_subgraph(gg: GoldbergGraph, i: int) -> Graph:
    """Induced subgraph on block i's eight vertices, relabeled to 0..7.

    Slot order is preserved: new id j-1 holds slot j.  Exactly the nine
    intra-block edges survive since ring edges always leave the block.
    """
    if not 1 <= i <= gg.n:
        raise ParameterError(f"block index {i} outside 1..{gg.n}")
    base = BLOCK_SIZE * (i - 1)
    members = range(base, base + BLOCK_SIZE)
    edges = [
        (u - base, v - base)
        for u, v in gg.graph.edges
        if u in members and v in members
    ]
    coords = {j: VertexCoord(i=i, j=j + 1) for j in range(BLOCK_SIZE)}
    return Graph(BLOCK_SIZE, tuple(edges), coords)

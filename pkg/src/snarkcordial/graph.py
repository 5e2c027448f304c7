"""Simple undirected graphs with stable integer vertex ids.

Vertices are the dense range 0..vertex_count-1.  Edges are unordered pairs
stored canonically: each pair ascending, the edge tuple sorted
lexicographically.  Graphs are immutable; every operation returns a new
graph, so values can be shared freely across threads.

An optional coordinate map attaches a structured address (block, slot,
copy, arm, position) to each vertex.  The family builders use it to keep
labeling formulas readable while the search kernels work on flat ids.
"""

from __future__ import annotations

import math
from bisect import insort
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping, Sequence


class GraphError(ValueError):
    """Base class for graph construction and operation errors."""


class VertexRangeError(GraphError):
    """A vertex id is outside 0..vertex_count-1."""


class SelfLoopError(GraphError):
    """An edge joins a vertex to itself."""


class DuplicateEdgeError(GraphError):
    """An unordered pair appears more than once."""


class NonEdgeError(GraphError):
    """An operation referenced an edge the graph does not contain."""


class NotCubicError(GraphError):
    """An operation requiring a 3-regular graph got something else."""


class BudgetExceededError(GraphError):
    """An exhaustive search was asked to exceed its enumeration budget."""


class ParameterError(GraphError):
    """A family or operation parameter is invalid."""


@dataclass(frozen=True)
class VertexCoord:
    """Structured vertex address: block i, slot j, optional copy/arm/position.

    Apex vertices of star-shaped composites carry ``apex=True`` and no
    block/slot.  All indices are 1-based.
    """

    i: int | None = None
    j: int | None = None
    k: int | None = None
    l: int | None = None
    m: int | None = None
    apex: bool = False

    def __post_init__(self) -> None:
        if self.apex:
            if self.i is not None or self.j is not None:
                raise GraphError("apex coordinate must not carry block/slot")
        else:
            if self.i is None or self.j is None:
                raise GraphError("non-apex coordinate needs block i and slot j")
            if self.i < 1:
                raise GraphError(f"block index must be >= 1, got {self.i}")
            if not 1 <= self.j <= 8:
                raise GraphError(f"slot must be in 1..8, got {self.j}")


def _canonical_edges(
    vertex_count: int, edges: Iterable[tuple[int, int]]
) -> tuple[tuple[int, int], ...]:
    canon = []
    for u, v in edges:
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise VertexRangeError(f"edge ({u},{v}) outside 0..{vertex_count - 1}")
        canon.append((u, v) if u < v else (v, u))
    canon.sort()
    for a, b in zip(canon, canon[1:]):
        if a == b:
            raise DuplicateEdgeError(f"duplicate edge {a}")
    return tuple(canon)


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices 0..vertex_count-1."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...] = ()
    coords: Mapping[int, VertexCoord] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise ParameterError("vertex count must be nonnegative")
        object.__setattr__(
            self, "edges", _canonical_edges(self.vertex_count, self.edges)
        )
        if self.coords is not None:
            for v in self.coords:
                if not 0 <= v < self.vertex_count:
                    raise VertexRangeError(f"coordinate for unknown vertex {v}")
            seen = set(self.coords.values())
            if len(seen) != len(self.coords):
                raise GraphError("coordinate map is not injective")

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbor tuple per vertex."""
        nbrs: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(ns)) for ns in nbrs)

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edge_set


def new_graph(n: int) -> Graph:
    """Edgeless graph on n vertices."""
    return Graph(n)


def add_edge(g: Graph, u: int, v: int) -> Graph:
    """Return g plus the edge (u,v).

    Raises VertexRangeError, SelfLoopError or DuplicateEdgeError so callers
    can tell the three failure modes apart.
    """
    if not (0 <= u < g.vertex_count and 0 <= v < g.vertex_count):
        raise VertexRangeError(f"edge ({u},{v}) outside 0..{g.vertex_count - 1}")
    if u == v:
        raise SelfLoopError(f"self-loop at vertex {u}")
    e = (u, v) if u < v else (v, u)
    if e in g.edge_set:
        raise DuplicateEdgeError(f"duplicate edge {e}")
    edges = list(g.edges)
    insort(edges, e)
    return Graph(g.vertex_count, tuple(edges), g.coords)


def degree_sequence(g: Graph) -> list[int]:
    """Degree of every vertex, indexed by vertex id."""
    return [len(ns) for ns in g.adjacency]


def is_cubic(g: Graph) -> bool:
    """True iff every vertex has degree exactly 3."""
    return all(len(ns) == 3 for ns in g.adjacency)


def is_connected(g: Graph) -> bool:
    """True iff a traversal from vertex 0 reaches everything (true for <=1 vertex)."""
    if g.vertex_count <= 1:
        return True
    seen = bytearray(g.vertex_count)
    seen[0] = 1
    stack = [0]
    count = 1
    adj = g.adjacency
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = 1
                count += 1
                stack.append(w)
    return count == g.vertex_count


def find_bridges(g: Graph) -> list[tuple[int, int]]:
    """All edges whose removal increases the number of components.

    Iterative lowpoint traversal, linear in vertices plus edges.  Safe on
    graphs far deeper than the interpreter recursion limit.
    """
    n = g.vertex_count
    adj = g.adjacency
    disc = [0] * n  # 0 = unvisited, else 1-based discovery index
    low = [0] * n
    bridges: list[tuple[int, int]] = []
    counter = 1
    for root in range(n):
        if disc[root]:
            continue
        disc[root] = low[root] = counter
        counter += 1
        # Stack entries: (vertex, parent, next adjacency offset).
        stack = [(root, -1, 0)]
        while stack:
            v, parent, idx = stack.pop()
            if idx < len(adj[v]):
                stack.append((v, parent, idx + 1))
                w = adj[v][idx]
                if w == parent:
                    # Simple graph: skip exactly the tree edge back to parent.
                    # Only skip the first occurrence semantics are moot here
                    # because parallel edges cannot exist.
                    continue
                if disc[w]:
                    if disc[w] < low[v]:
                        low[v] = disc[w]
                else:
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, v, 0))
            else:
                if parent >= 0:
                    if low[v] < low[parent]:
                        low[parent] = low[v]
                    if low[v] > disc[parent]:
                        bridges.append((parent, v) if parent < v else (v, parent))
    bridges.sort()
    return bridges


def girth(g: Graph) -> int | float:
    """Length of the shortest cycle; math.inf for forests.

    Breadth-first search from every vertex; the minimum over all roots of
    the first non-tree contact gives the exact girth in a simple graph.
    """
    n = g.vertex_count
    adj = g.adjacency
    best: int | float = math.inf
    dist = [0] * n
    parent = [0] * n
    stamp = [0] * n  # visit generation per root, avoids clearing arrays
    for root in range(n):
        gen = root + 1
        stamp[root] = gen
        dist[root] = 0
        parent[root] = -1
        q = deque([root])
        while q:
            u = q.popleft()
            if 2 * dist[u] >= best - 1:
                break
            for w in adj[u]:
                if stamp[w] != gen:
                    stamp[w] = gen
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    q.append(w)
                elif w != parent[u]:
                    cycle = dist[u] + dist[w] + 1
                    if cycle < best:
                        best = cycle
        if best == 3:
            return 3
    return best


def _components_with_cycle_count(
    n: int,
    edges: Sequence[tuple[int, int]],
    adj_masks: list[int],
    removed: tuple[tuple[int, int], ...],
) -> int:
    """Number of connected components that contain at least one cycle."""
    overlay: dict[int, int] = {}
    for u, v in removed:
        overlay[u] = overlay.get(u, adj_masks[u]) & ~(1 << v)
        overlay[v] = overlay.get(v, adj_masks[v]) & ~(1 << u)
    removed_set = set(removed)
    unseen = (1 << n) - 1
    cyclic = 0
    while unseen:
        start = (unseen & -unseen).bit_length() - 1
        comp = 1 << start
        frontier = [start]
        while frontier:
            x = frontier.pop()
            nbs = overlay.get(x, adj_masks[x]) & ~comp
            while nbs:
                b = nbs & -nbs
                comp |= b
                frontier.append(b.bit_length() - 1)
                nbs ^= b
        vc = comp.bit_count()
        ec = sum(
            1
            for e in edges
            if (comp >> e[0]) & 1 and (comp >> e[1]) & 1 and e not in removed_set
        )
        if ec >= vc:  # a connected component is a tree iff ec == vc - 1
            cyclic += 1
            if cyclic >= 2:
                return cyclic
        unseen &= ~comp
    return cyclic


def cyclic_edge_connectivity_ge(
    g: Graph, k: int, max_subsets: int | None = None
) -> bool:
    """True iff no edge cut of size < k leaves two components that both contain a cycle.

    Exhaustive over all edge subsets of size < k.  Only thresholds up to 4
    are supported; larger budgets are refused rather than silently slow.
    """
    if k < 1:
        raise ParameterError("cut size threshold must be >= 1")
    if k > 4:
        raise BudgetExceededError(
            f"cut enumeration supports thresholds up to 4, got {k}"
        )
    m = len(g.edges)
    if max_subsets is not None:
        total = sum(math.comb(m, size) for size in range(1, k))
        if total > max_subsets:
            raise BudgetExceededError(
                f"{total} cut candidates exceed budget of {max_subsets}"
            )
    adj_masks = [0] * g.vertex_count
    for u, v in g.edges:
        adj_masks[u] |= 1 << v
        adj_masks[v] |= 1 << u
    if _components_with_cycle_count(g.vertex_count, g.edges, adj_masks, ()) >= 2:
        return False
    for size in range(1, k):
        for removed in combinations(g.edges, size):
            if (
                _components_with_cycle_count(
                    g.vertex_count, g.edges, adj_masks, removed
                )
                >= 2
            ):
                return False
    return True


def duplicate_vertex(g: Graph, v: int) -> Graph:
    """Add a new vertex whose neighborhood is exactly the neighborhood of v."""
    if not 0 <= v < g.vertex_count:
        raise VertexRangeError(f"vertex {v} outside 0..{g.vertex_count - 1}")
    new_id = g.vertex_count
    edges = list(g.edges)
    for w in g.adjacency[v]:
        edges.append((w, new_id))
    return Graph(new_id + 1, tuple(edges), g.coords)


def delete_edges(g: Graph, removed: Iterable[tuple[int, int]]) -> Graph:
    """Same vertices, edge set minus the given edges."""
    drop = set()
    for u, v in removed:
        e = (u, v) if u < v else (v, u)
        if e not in g.edge_set:
            raise NonEdgeError(f"cannot delete non-edge {e}")
        drop.add(e)
    return Graph(
        g.vertex_count, tuple(e for e in g.edges if e not in drop), g.coords
    )


def subdivide_edge(g: Graph, e: tuple[int, int]) -> Graph:
    """Replace edge e by a path of length 2 through one new vertex."""
    u, v = e
    canon = (u, v) if u < v else (v, u)
    if canon not in g.edge_set:
        raise NonEdgeError(f"cannot subdivide non-edge {canon}")
    w = g.vertex_count
    edges = [x for x in g.edges if x != canon]
    edges.append((canon[0], w))
    edges.append((canon[1], w))
    return Graph(w + 1, tuple(edges), g.coords)


ISOMORPHISM_VERTEX_BUDGET = 16


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Exact isomorphism test by backtracking over degree-compatible maps.

    Intended for small block graphs; inputs above 16 vertices are refused.
    """
    if (
        g1.vertex_count > ISOMORPHISM_VERTEX_BUDGET
        or g2.vertex_count > ISOMORPHISM_VERTEX_BUDGET
    ):
        raise BudgetExceededError(
            f"isomorphism test limited to {ISOMORPHISM_VERTEX_BUDGET} vertices"
        )
    n = g1.vertex_count
    if n != g2.vertex_count or len(g1.edges) != len(g2.edges):
        return False
    adj1, adj2 = g1.adjacency, g2.adjacency
    deg1 = [len(a) for a in adj1]
    deg2 = [len(a) for a in adj2]
    if sorted(deg1) != sorted(deg2):
        return False

    # Signature = own degree plus sorted neighbor degrees; must match 1:1.
    def signature(adj, deg, v):
        return (deg[v], tuple(sorted(deg[w] for w in adj[v])))

    sig1 = [signature(adj1, deg1, v) for v in range(n)]
    sig2 = [signature(adj2, deg2, v) for v in range(n)]
    if sorted(sig1) != sorted(sig2):
        return False
    candidates = [[w for w in range(n) if sig2[w] == sig1[v]] for v in range(n)]
    order = sorted(range(n), key=lambda v: (len(candidates[v]), v))
    mapping = [-1] * n
    used = [False] * n
    set1 = [set(a) for a in adj1]
    set2 = [set(a) for a in adj2]
    placed: list[int] = []

    def extend(idx: int) -> bool:
        if idx == n:
            return True
        v = order[idx]
        for w in candidates[v]:
            if used[w]:
                continue
            # Adjacency must be preserved in both directions against every
            # vertex already placed.
            if any((x in set1[v]) != (mapping[x] in set2[w]) for x in placed):
                continue
            mapping[v] = w
            used[w] = True
            placed.append(v)
            if extend(idx + 1):
                return True
            placed.pop()
            mapping[v] = -1
            used[w] = False
        return False

    return extend(0)


def petersen() -> Graph:
    """The Petersen graph: outer 5-cycle, inner pentagram, five spokes."""
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((5 + i, 5 + (i + 2) % 5))
        edges.append((i, i + 5))
    return Graph(10, tuple(edges))

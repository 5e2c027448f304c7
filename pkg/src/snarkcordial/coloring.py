"""Exact 3-edge-coloring search for cubic graphs.

Backtracking over edges in a fixed breadth-first sweep order.  Because the
graph is 3-regular, a proper 3-edge-coloring must give the three edges at
every vertex all three colors; whenever two edges at a vertex are colored
the third is forced, and forcings are propagated eagerly through a queue.
The search is complete: an absent result means no proper 3-edge-coloring
exists.

Color symmetry is broken by pinning the three edges at one root vertex per
component to colors 0,1,2 in edge order (sound: any proper coloring can be
renamed, per component, to agree with the pinning).  Everything is
deterministic: same graph, same result, same node counts.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from .graph import Graph, NotCubicError, is_cubic

EdgeColoring = dict[tuple[int, int], int]

_ALL_COLORS = 0b111


@dataclass(frozen=True)
class ColoringSearch:
    """Outcome of a 3-edge-coloring search."""

    coloring: EdgeColoring | None
    decisions: int
    forced: int
    elapsed_seconds: float

    @property
    def colorable(self) -> bool:
        return self.coloring is not None


def _bfs_edge_order(g: Graph) -> tuple[list[tuple[int, int]], list[int]]:
    """Edges in breadth-first sweep order plus one root vertex per component."""
    adj = g.adjacency
    order: list[tuple[int, int]] = []
    seen_edge = set()
    seen_vertex = bytearray(g.vertex_count)
    roots: list[int] = []
    for start in range(g.vertex_count):
        if seen_vertex[start]:
            continue
        roots.append(start)
        seen_vertex[start] = 1
        queue = [start]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            for w in adj[u]:
                e = (u, w) if u < w else (w, u)
                if e not in seen_edge:
                    seen_edge.add(e)
                    order.append(e)
                if not seen_vertex[w]:
                    seen_vertex[w] = 1
                    queue.append(w)
    return order, roots


class _Solver:
    def __init__(self, g: Graph, progress: Callable[[int], None] | None = None):
        order, roots = _bfs_edge_order(g)
        self.order = order
        self.roots = roots
        self.m = len(order)
        self.incident: list[list[int]] = [[] for _ in range(g.vertex_count)]
        for idx, (u, v) in enumerate(order):
            self.incident[u].append(idx)
            self.incident[v].append(idx)
        self.endpoints = order
        self.color = [-1] * self.m
        self.used = [0] * g.vertex_count  # bitmask of colors present at vertex
        self.colored_at = [0] * g.vertex_count
        self.decisions = 0
        self.forced = 0
        self.progress = progress
        self._next_tick = time.monotonic() + 10.0

    def _set(self, idx: int, c: int, trail: list[int]) -> bool:
        u, v = self.endpoints[idx]
        bit = 1 << c
        if (self.used[u] | self.used[v]) & bit:
            return False
        self.color[idx] = c
        self.used[u] |= bit
        self.used[v] |= bit
        self.colored_at[u] += 1
        self.colored_at[v] += 1
        trail.append(idx)
        return True

    def _assign(self, assignments: list[tuple[int, int]], trail: list[int]) -> bool:
        """Apply assignments simultaneously, then propagate forcings to fixpoint."""
        for idx, c in assignments:
            if self.color[idx] != -1:
                if self.color[idx] != c:
                    return False
                continue
            if not self._set(idx, c, trail):
                return False
        queue = [idx for idx, _ in assignments]
        head = 0
        while head < len(queue):
            idx = queue[head]
            head += 1
            for v in self.endpoints[idx]:
                if self.colored_at[v] != 2:
                    continue
                missing = _ALL_COLORS ^ self.used[v]
                target = -1
                for e in self.incident[v]:
                    if self.color[e] == -1:
                        target = e
                        break
                if target < 0:
                    continue
                if not self._set(target, missing.bit_length() - 1, trail):
                    return False
                self.forced += 1
                queue.append(target)
        return True

    def _undo(self, trail: list[int], mark: int) -> None:
        while len(trail) > mark:
            idx = trail.pop()
            c = self.color[idx]
            self.color[idx] = -1
            bit = 1 << c
            u, v = self.endpoints[idx]
            self.used[u] &= ~bit
            self.used[v] &= ~bit
            self.colored_at[u] -= 1
            self.colored_at[v] -= 1

    def solve(self) -> EdgeColoring | None:
        trail: list[int] = []
        # Pin root edges per component: colors 0,1,2 in edge-index order,
        # applied simultaneously before any propagation runs.
        pins: list[tuple[int, int]] = []
        for r in self.roots:
            pins.extend((e, c) for c, e in enumerate(sorted(self.incident[r])))
        if not self._assign(pins, trail):
            return None
        if self._search(0):
            return {self.endpoints[i]: self.color[i] for i in range(self.m)}
        return None

    def _search(self, pos: int) -> bool:
        while pos < self.m and self.color[pos] != -1:
            pos += 1
        if pos == self.m:
            return True
        if self.progress is not None and time.monotonic() >= self._next_tick:
            self._next_tick = time.monotonic() + 10.0
            self.progress(self.decisions)
        u, v = self.endpoints[pos]
        banned = self.used[u] | self.used[v]
        trail: list[int] = []
        for c in range(3):
            if banned & (1 << c):
                continue
            self.decisions += 1
            if self._assign([(pos, c)], trail) and self._search(pos + 1):
                return True
            self._undo(trail, 0)
        return False


def solve_3_edge_coloring(
    g: Graph, progress: Callable[[int], None] | None = None
) -> ColoringSearch:
    """Complete search; returns the coloring (or None) with search statistics."""
    if not is_cubic(g):
        raise NotCubicError("3-edge-coloring search requires a cubic graph")
    start = time.perf_counter()
    solver = _Solver(g, progress)
    coloring = solver.solve()
    elapsed = time.perf_counter() - start
    if coloring is not None:
        _check_proper(g, coloring)
    return ColoringSearch(coloring, solver.decisions, solver.forced, elapsed)


def find_3_edge_coloring(g: Graph) -> EdgeColoring | None:
    """Proper 3-edge-coloring of a cubic graph, or None if none exists."""
    return solve_3_edge_coloring(g).coloring


def _check_proper(g: Graph, coloring: EdgeColoring) -> None:
    """Adjacency-conflict scan, independent of the search bookkeeping."""
    at_vertex: dict[int, set[int]] = {v: set() for v in range(g.vertex_count)}
    if set(coloring) != set(g.edges):
        raise AssertionError("coloring does not cover the edge set")
    for (u, v), c in coloring.items():
        if c not in (0, 1, 2):
            raise AssertionError(f"color {c} out of range")
        if c in at_vertex[u] or c in at_vertex[v]:
            raise AssertionError(f"adjacent edges share color {c} at ({u},{v})")
        at_vertex[u].add(c)
        at_vertex[v].add(c)

"""Par(a x b) as a graph: covering relations, BFS distances, Wiener index."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .arith import DEFAULT_MAX_VERTICES, CapExceeded, binomial, exact_div
from .partitions import BoundLike, Partition, as_bound, enumerate_partitions


@dataclass(frozen=True)
class HasseGraph:
    vertices: tuple[Partition, ...]
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def index(self, lam) -> int:
        return self.vertices.index(Partition(lam))


def _neighbours(padded: tuple[int, ...], cols: int):
    """Padded vectors reachable by adding or removing one box inside the rectangle."""
    rows = len(padded)
    for i, x in enumerate(padded):
        if x < cols and (i == 0 or padded[i - 1] > x):
            yield padded[:i] + (x + 1,) + padded[i + 1:]
        if x > 0 and (i == rows - 1 or padded[i + 1] < x):
            yield padded[:i] + (x - 1,) + padded[i + 1:]


def build_hasse(bound: BoundLike, max_vertices: int | None = DEFAULT_MAX_VERTICES) -> HasseGraph:
    bound = as_bound(bound)
    count = bound.count()
    if max_vertices is not None and count > max_vertices:
        raise CapExceeded(f"vertices of Par({bound.rows}x{bound.cols})", count, max_vertices)
    verts = enumerate_partitions(bound)
    pos = {v.padded(bound.rows): i for i, v in enumerate(verts)}
    adjacency = tuple(
        tuple(sorted(pos[w] for w in _neighbours(v.padded(bound.rows), bound.cols)))
        for v in verts
    )
    return HasseGraph(tuple(verts), adjacency)


def bfs_distances(g: HasseGraph, source: int) -> list[int]:
    dist = [-1] * len(g.vertices)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def wiener_bfs(g: HasseGraph) -> int:
    """Sum of shortest-path lengths over ordered vertex pairs."""
    total = 0
    for src in range(len(g.vertices)):
        dist = bfs_distances(g, src)
        if min(dist) < 0:
            raise RuntimeError(f"Hasse graph is disconnected at source {g.vertices[src]!r}")
        total += sum(dist)
    return total


def wiener_formula(a: int, b: int) -> int:
    """ab/(4a+4b+2) * C(2a+2b+2, 2a+1), checked for exact divisibility."""
    if a < 1 or b < 1:
        raise ValueError(f"wiener_formula needs a, b >= 1, got ({a}, {b})")
    return exact_div(a * b * binomial(2 * a + 2 * b + 2, 2 * a + 1), 4 * a + 4 * b + 2,
                     f"Wiener index of Par({a}x{b})")

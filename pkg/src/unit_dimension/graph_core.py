"""Finite simple graphs and the traversals every other module builds on.

Graphs are immutable values. Vertices carry string labels and are indexed
``0..V-1`` in label insertion order; all traversals visit neighbours in
ascending index order and pick the least unvisited vertex as the next root, so
every walk or colouring they return is reproducible.
"""

from __future__ import annotations

import logging
from bisect import bisect_left
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence, Union

from .errors import GraphStructureError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with labelled vertices.

    Attributes:
        labels: Distinct vertex labels, position = vertex index
        adjacency: For each vertex index, the sorted tuple of neighbour indices
    """

    labels: tuple[str, ...]
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.labels) != len(self.adjacency):
            raise GraphStructureError(
                f"{len(self.labels)} labels but {len(self.adjacency)} adjacency rows"
            )
        if len(set(self.labels)) != len(self.labels):
            raise GraphStructureError("vertex labels must be unique")
        n = len(self.labels)
        for u, row in enumerate(self.adjacency):
            if list(row) != sorted(set(row)):
                raise GraphStructureError(f"adjacency of vertex {u} is not strictly sorted")
            for v in row:
                if not 0 <= v < n:
                    raise GraphStructureError(f"vertex {u} has out-of-range neighbour {v}")
                if v == u:
                    raise GraphStructureError(f"self-loop at {self.labels[u]!r}")
                if not _contains(self.adjacency[v], u):
                    raise GraphStructureError(
                        f"adjacency is not symmetric between {self.labels[u]!r} and {self.labels[v]!r}"
                    )

    @classmethod
    def from_edges(
        cls, labels: Sequence[str], edges: Iterable[tuple[int, int]]
    ) -> Graph:
        """Build a graph from vertex labels and index pairs.

        Raises:
            GraphStructureError: On a self-loop, a repeated edge or a bad index
        """
        n = len(labels)
        rows: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphStructureError(f"edge ({u}, {v}) references a missing vertex")
            if u == v:
                raise GraphStructureError(f"self-loop at {labels[u]!r}")
            if v in rows[u]:
                raise GraphStructureError(
                    f"duplicate edge {labels[u]!r}-{labels[v]!r}"
                )
            rows[u].add(v)
            rows[v].add(u)
        return cls(tuple(labels), tuple(tuple(sorted(row)) for row in rows))

    @classmethod
    def from_labelled_edges(
        cls, pairs: Iterable[tuple[str, str]], vertices: Sequence[str] = ()
    ) -> Graph:
        """Build a graph from label pairs; vertex order is first appearance.

        ``vertices`` are registered first, which allows isolated vertices.
        """
        index: dict[str, int] = {}
        for label in vertices:
            index.setdefault(label, len(index))
        edges = []
        for a, b in pairs:
            edges.append((index.setdefault(a, len(index)), index.setdefault(b, len(index))))
        return cls.from_edges(list(index), edges)

    @property
    def num_vertices(self) -> int:
        return len(self.labels)

    @cached_property
    def num_edges(self) -> int:
        return sum(len(row) for row in self.adjacency) // 2

    @cached_property
    def _index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    def index_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise GraphStructureError(f"unknown vertex {label!r}") from None

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < len(self.adjacency) and _contains(self.adjacency[u], v)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u, row in enumerate(self.adjacency) for v in row if u < v]


@dataclass(frozen=True)
class Bipartition:
    """Proper 2-colouring of a bipartite graph, one entry per vertex."""

    color: tuple[int, ...]
    component: tuple[int, ...]

    @property
    def num_components(self) -> int:
        return max(self.component, default=-1) + 1


@dataclass(frozen=True)
class Walk:
    """Sequence of vertex indices, consecutive entries adjacent."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def is_closed(self) -> bool:
        return len(self.vertices) > 0 and self.vertices[0] == self.vertices[-1]

    def is_walk_in(self, g: Graph) -> bool:
        if not self.vertices:
            return False
        if any(not 0 <= v < g.num_vertices for v in self.vertices):
            return False
        return all(g.has_edge(u, v) for u, v in zip(self.vertices, self.vertices[1:]))


def _contains(row: Sequence[int], v: int) -> bool:
    i = bisect_left(row, v)
    return i < len(row) and row[i] == v


def _path_to_root(parent: list[int], v: int) -> list[int]:
    path = [v]
    while parent[path[-1]] != -1:
        path.append(parent[path[-1]])
    return path


def connected_components(g: Graph) -> tuple[int, ...]:
    """Component id per vertex, numbered in order of least contained index."""
    component = [-1] * g.num_vertices
    next_id = 0
    for root in range(g.num_vertices):
        if component[root] != -1:
            continue
        component[root] = next_id
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in g.adjacency[u]:
                if component[v] == -1:
                    component[v] = next_id
                    queue.append(v)
        next_id += 1
    return tuple(component)


def bipartition_or_odd_walk(g: Graph) -> Union[Bipartition, Walk]:
    """Two-colour ``g`` or return a closed walk of odd length.

    The walk is built from the BFS tree of the first component in which a
    monochromatic edge ``u-v`` shows up: root to ``u``, the edge, then ``v``
    back to the root.
    """
    color = [-1] * g.num_vertices
    component = [-1] * g.num_vertices
    parent = [-1] * g.num_vertices
    next_id = 0
    for root in range(g.num_vertices):
        if color[root] != -1:
            continue
        color[root] = 0
        component[root] = next_id
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in g.adjacency[u]:
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    component[v] = next_id
                    parent[v] = u
                    queue.append(v)
                elif color[v] == color[u]:
                    to_u = _path_to_root(parent, u)[::-1]
                    from_v = _path_to_root(parent, v)
                    walk = Walk(tuple(to_u + from_v))
                    logger.debug(f"Odd closed walk of length {walk.length} found")
                    return walk
        next_id += 1
    return Bipartition(tuple(color), tuple(component))


def find_cycle(g: Graph) -> Optional[Walk]:
    """Return a cycle of ``g`` as a closed walk, or ``None`` for a forest."""
    parent = [-1] * g.num_vertices
    seen = [False] * g.num_vertices
    for root in range(g.num_vertices):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in g.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    parent[v] = u
                    queue.append(v)
                elif v != parent[u]:
                    up_u = _path_to_root(parent, u)
                    up_v = _path_to_root(parent, v)
                    ancestors = set(up_u)
                    meet = next(w for w in up_v if w in ancestors)
                    left = up_u[: up_u.index(meet) + 1]
                    right = up_v[: up_v.index(meet)][::-1]
                    return Walk(tuple(left + right + [u]))
    return None


def contains_cycle(g: Graph) -> bool:
    return find_cycle(g) is not None


def shortest_path(g: Graph, source: int, target: int) -> Optional[Walk]:
    """Shortest walk from ``source`` to ``target`` (BFS, ascending neighbours)."""
    parent = [-1] * g.num_vertices
    seen = [False] * g.num_vertices
    seen[source] = True
    queue = deque([source])
    while queue:
        u = queue.popleft()
        if u == target:
            return Walk(tuple(_path_to_root(parent, u)[::-1]))
        for v in g.adjacency[u]:
            if not seen[v]:
                seen[v] = True
                parent[v] = u
                queue.append(v)
    return None


def is_triangle_free(g: Graph) -> bool:
    for u, v in g.edges():
        if set(g.adjacency[u]) & set(g.adjacency[v]):
            return False
    return True


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph induced on ``vertices``, keeping their given order."""
    position = {v: i for i, v in enumerate(vertices)}
    edges = [
        (position[u], position[v])
        for u, v in g.edges()
        if u in position and v in position
    ]
    return Graph.from_edges([g.labels[v] for v in vertices], edges)

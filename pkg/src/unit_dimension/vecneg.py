"""The auxiliary graph VecNeg(G) and the dimension >= 3 obstruction test.

VecNeg(G) has one vertex per directed edge of G. Two directed edges A->B and
C->D are adjacent when C->D is the reversal of A->B, or when A, B, C, D are
distinct and A-B-C-D-A is a closed walk in G. In any unit-distance drawing of
G in the plane adjacent directed edges are opposite vectors (a 4-cycle of unit
edges is a rhombus), so an odd closed walk in VecNeg(G), or an even walk
between two directed edges leaving the same vertex, rules out dimension 2.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import NamedTuple, Optional, Union

import numpy as np

from .errors import InvalidDirectedEdgeError, InvalidParameterError
from .graph_core import (
    Bipartition,
    Graph,
    Walk,
    bipartition_or_odd_walk,
    find_cycle,
    shortest_path,
)

logger = logging.getLogger(__name__)


class DirectedEdge(NamedTuple):
    tail: int
    head: int

    def reversed(self) -> DirectedEdge:
        return DirectedEdge(self.head, self.tail)


class ObstructionKind(str, Enum):
    ODD_CLOSED_WALK = "odd_closed_walk"
    EVEN_APEX_WALK = "even_apex_walk"


@dataclass(frozen=True)
class Obstruction:
    """Certificate that a graph has dimension at least 3.

    ``walk`` is a walk in VecNeg(G). For ``even_apex_walk`` it runs from
    ``apex->a`` to ``apex->b``.
    """

    kind: ObstructionKind
    walk: tuple[DirectedEdge, ...]
    apex: Optional[int] = None
    a: Optional[int] = None
    b: Optional[int] = None

    @property
    def length(self) -> int:
        return len(self.walk) - 1


class LowerBoundReason(str, Enum):
    TRIVIAL = "trivial"
    HAS_CYCLE = "has_cycle"
    VECNEG_OBSTRUCTION = "vecneg_obstruction"


class LowerBound(NamedTuple):
    bound: int
    reason: LowerBoundReason
    certificate: Union[Obstruction, Walk, None]


def check_directed_edge(g: Graph, e: DirectedEdge) -> None:
    if e.tail == e.head or not g.has_edge(e.tail, e.head):
        raise InvalidDirectedEdgeError(f"({e.tail}, {e.head}) is not a directed edge of the graph")


def vecneg_adjacent(g: Graph, e1: DirectedEdge, e2: DirectedEdge) -> bool:
    """Decide adjacency in VecNeg(g) straight from the definition."""
    check_directed_edge(g, e1)
    check_directed_edge(g, e2)
    a, b = e1
    c, d = e2
    if c == b and d == a:
        return True
    if len({a, b, c, d}) != 4:
        return False
    # a~b and c~d hold already; close the walk a-b-c-d-a
    return g.has_edge(b, c) and g.has_edge(d, a)


@dataclass(frozen=True)
class VecNegGraph:
    """VecNeg(base) with directed edges sorted by (tail, head)."""

    base: Graph
    vertices: tuple[DirectedEdge, ...]
    adjacency: tuple[tuple[int, ...], ...]

    @cached_property
    def index(self) -> dict[DirectedEdge, int]:
        return {e: i for i, e in enumerate(self.vertices)}

    @cached_property
    def graph(self) -> Graph:
        """VecNeg as a plain ``Graph`` over directed-edge indices."""
        return Graph(tuple(str(i) for i in range(len(self.vertices))), self.adjacency)

    @cached_property
    def labeling(self) -> Union[Bipartition, Walk]:
        """Component/parity labels, or an odd closed walk if there are none."""
        return bipartition_or_odd_walk(self.graph)

    @property
    def num_edges(self) -> int:
        return self.graph.num_edges

    def edge_pairs(self) -> list[tuple[DirectedEdge, DirectedEdge]]:
        return [(self.vertices[i], self.vertices[j]) for i, j in self.graph.edges()]


def build_vecneg(g: Graph) -> VecNegGraph:
    """Construct VecNeg(g) by enumerating closed 4-walks through each directed edge."""
    vertices = tuple(
        DirectedEdge(a, b) for a in range(g.num_vertices) for b in g.adjacency[a]
    )
    index = {e: i for i, e in enumerate(vertices)}
    rows: list[set[int]] = [set() for _ in vertices]
    for i, (a, b) in enumerate(vertices):
        rows[i].add(index[DirectedEdge(b, a)])
        for d in g.adjacency[a]:
            if d == b:
                continue
            for c in g.adjacency[b]:
                if c == a or c == d:
                    continue
                if g.has_edge(c, d):
                    rows[i].add(index[DirectedEdge(c, d)])
    adjacency = tuple(tuple(sorted(row)) for row in rows)
    vn = VecNegGraph(g, vertices, adjacency)
    logger.debug(f"VecNeg: {len(vertices)} directed edges, {vn.num_edges} adjacencies")
    return vn


def _to_directed(vn: VecNegGraph, walk: Walk) -> tuple[DirectedEdge, ...]:
    return tuple(vn.vertices[i] for i in walk.vertices)


def find_obstruction(g: Graph, vn: Optional[VecNegGraph] = None) -> Optional[Obstruction]:
    """Look for a certificate that ``dim(g) >= 3``.

    Condition (1), an odd closed walk in VecNeg, is tried first. Otherwise the
    component/parity labels of VecNeg are compared for every vertex F and every
    pair of its neighbours A < B: equal labels on F->A and F->B mean an even
    walk between them exists, and the shortest one is returned.
    """
    vn = vn or build_vecneg(g)
    labeling = vn.labeling
    if isinstance(labeling, Walk):
        return Obstruction(ObstructionKind.ODD_CLOSED_WALK, _to_directed(vn, labeling))

    for apex in range(g.num_vertices):
        groups: dict[tuple[int, int], int] = {}
        for a in g.adjacency[apex]:
            i = vn.index[DirectedEdge(apex, a)]
            key = (labeling.component[i], labeling.color[i])
            if key not in groups:
                groups[key] = a
                continue
            first = groups[key]
            path = shortest_path(
                vn.graph, vn.index[DirectedEdge(apex, first)], i
            )
            return Obstruction(
                ObstructionKind.EVEN_APEX_WALK,
                _to_directed(vn, path),
                apex=apex,
                a=first,
                b=a,
            )
    return None


def lower_bound_dim(g: Graph) -> LowerBound:
    """A sound lower bound on the unit-distance dimension of ``g``.

    3 with a VecNeg certificate, else 2 with a witness cycle, else 1. The
    bound is never claimed to be tight.

    Raises:
        InvalidParameterError: If ``g`` has no vertices
    """
    if g.num_vertices == 0:
        raise InvalidParameterError("the dimension of the empty graph is not defined")
    obstruction = find_obstruction(g)
    if obstruction is not None:
        return LowerBound(3, LowerBoundReason.VECNEG_OBSTRUCTION, obstruction)
    cycle = find_cycle(g)
    if cycle is not None:
        return LowerBound(2, LowerBoundReason.HAS_CYCLE, cycle)
    return LowerBound(1, LowerBoundReason.TRIVIAL, None)


def mobius_ladder_certificate(k: int) -> Obstruction:
    """The explicit odd closed walk of length 2k-1 in VecNeg of the Möbius ladder.

    A1->B1, B2->A2, A2->B2, B3->A3, ..., Bk->Ak, Ak->Bk, A1->B1; uses the
    vertex indices of ``mobius_ladder(k)``.
    """
    if k < 3:
        raise InvalidParameterError(f"Möbius ladder requires k >= 3, got {k}")

    def a(j: int) -> int:
        return j - 1

    def b(j: int) -> int:
        return k + j - 1

    walk = [DirectedEdge(a(1), b(1))]
    for j in range(2, k + 1):
        walk.append(DirectedEdge(b(j), a(j)))
        walk.append(DirectedEdge(a(j), b(j)))
    walk.append(DirectedEdge(a(1), b(1)))
    return Obstruction(ObstructionKind.ODD_CLOSED_WALK, tuple(walk))


def max_negation_defect(vn: VecNegGraph, points: np.ndarray) -> float:
    """Largest ``|AB + CD|`` over the VecNeg edges {A->B, C->D} for given points.

    Zero (up to rounding) for every planar unit-distance drawing of the base
    graph.
    """
    pairs = vn.edge_pairs()
    if not pairs:
        return 0.0
    first = np.array([[e.tail, e.head] for e, _ in pairs])
    second = np.array([[f.tail, f.head] for _, f in pairs])
    sums = (points[first[:, 1]] - points[first[:, 0]]) + (
        points[second[:, 1]] - points[second[:, 0]]
    )
    return float(np.max(np.linalg.norm(sums, axis=1)))


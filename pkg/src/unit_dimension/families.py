"""Generators for the named graph families and the Mycielskian operator.

Labels follow the usual drawing conventions: cycles, paths and complete graphs
use "0".."n-1"; Möbius ladders use A1..Ak, B1..Bk; the Mycielskian keeps an
original label ``v`` for the copy (v, 1), writes ``v'`` for the shadow (v, 0)
and ``F`` for the apex.
"""

import logging
from enum import Enum
from itertools import combinations
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from .errors import InvalidParameterError, LabelCollisionError
from .graph_core import Graph

logger = logging.getLogger(__name__)

APEX_LABEL = "F"
SHADOW_SUFFIX = "'"


class FamilyKind(str, Enum):
    CYCLE = "cycle"
    COMPLETE = "complete"
    PATH = "path"
    MOBIUS_LADDER = "mobius_ladder"
    MYCIELSKI_CYCLE = "mycielski_cycle"


MIN_SIZE = {
    FamilyKind.CYCLE: 3,
    FamilyKind.COMPLETE: 2,
    FamilyKind.PATH: 1,
    FamilyKind.MOBIUS_LADDER: 3,
    FamilyKind.MYCIELSKI_CYCLE: 3,
}


class FamilySpec(BaseModel):
    """A member of one of the generated families, e.g. ``cycle`` of size 10."""

    model_config = ConfigDict(frozen=True)

    kind: FamilyKind
    size: int

    @model_validator(mode="after")
    def _check_size(self) -> "FamilySpec":
        minimum = MIN_SIZE[self.kind]
        if self.size < minimum:
            raise ValueError(
                f"{self.kind.value} requires size >= {minimum}, got {self.size}"
            )
        return self

    @property
    def name(self) -> str:
        return f"{self.kind.value}_{self.size}"


def _require(n: int, minimum: int, family: str) -> None:
    if n < minimum:
        raise InvalidParameterError(f"{family} requires n >= {minimum}, got {n}")


def _numbered(n: int) -> list[str]:
    return [str(j) for j in range(n)]


def cycle_graph(n: int) -> Graph:
    _require(n, 3, "cycle graph")
    return Graph.from_edges(_numbered(n), [(j, (j + 1) % n) for j in range(n)])


def complete_graph(n: int) -> Graph:
    _require(n, 2, "complete graph")
    return Graph.from_edges(_numbered(n), combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    _require(n, 1, "path graph")
    return Graph.from_edges(_numbered(n), [(j, j + 1) for j in range(n - 1)])


def mobius_ladder(k: int) -> Graph:
    """Möbius ladder on A1..Ak, B1..Bk: rungs, two rails and the twisted ends.

    Vertex Aj has index j-1 and Bj has index k+j-1.
    """
    _require(k, 3, "Möbius ladder")
    labels = [f"A{j}" for j in range(1, k + 1)] + [f"B{j}" for j in range(1, k + 1)]
    rungs = [(j, k + j) for j in range(k)]
    rails = [(j, j + 1) for j in range(k - 1)] + [(k + j, k + j + 1) for j in range(k - 1)]
    twist = [(0, 2 * k - 1), (k - 1, k)]
    return Graph.from_edges(labels, rungs + rails + twist)


def mycielskian(g: Graph) -> Graph:
    """Mycielskian M(g).

    Index layout: the copies (v, 1) first in the order of ``g`` (so the first
    ``|V|`` vertices induce ``g`` itself), then the shadows (v, 0), then the apex.

    Raises:
        InvalidParameterError: If ``g`` has no vertices
        LabelCollisionError: If a label of ``g`` is ``F`` or ends in a prime
    """
    n = g.num_vertices
    if n == 0:
        raise InvalidParameterError("the Mycielskian of the empty graph is not defined")
    for label in g.labels:
        if label == APEX_LABEL or label.endswith(SHADOW_SUFFIX):
            raise LabelCollisionError(
                f"vertex label {label!r} collides with the Mycielskian naming scheme"
            )
    labels = list(g.labels) + [f"{label}{SHADOW_SUFFIX}" for label in g.labels] + [APEX_LABEL]
    apex = 2 * n
    edges = []
    for a, b in g.edges():
        edges.append((a, b))
        edges.append((n + a, b))
        edges.append((a, n + b))
    edges.extend((n + v, apex) for v in range(n))
    m = Graph.from_edges(labels, edges)
    logger.debug(f"Mycielskian: {n} -> {m.num_vertices} vertices, {m.num_edges} edges")
    return m


def mycielski_cycle(n: int) -> Graph:
    return mycielskian(cycle_graph(n))


def random_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    """Erdős–Rényi graph G(n, p) on "0".."n-1"; pairs are drawn in lexicographic order."""
    _require(n, 1, "random graph")
    if not 0 <= p <= 1:
        raise InvalidParameterError(f"edge probability must lie in [0, 1], got {p}")
    pairs = list(combinations(range(n), 2))
    keep = rng.random(len(pairs)) < p
    return Graph.from_edges(_numbered(n), [pair for pair, kept in zip(pairs, keep) if kept])


GENERATORS = {
    FamilyKind.CYCLE: cycle_graph,
    FamilyKind.COMPLETE: complete_graph,
    FamilyKind.PATH: path_graph,
    FamilyKind.MOBIUS_LADDER: mobius_ladder,
    FamilyKind.MYCIELSKI_CYCLE: mycielski_cycle,
}


def build_family(spec: FamilySpec) -> Graph:
    return GENERATORS[spec.kind](spec.size)


def _candidate_sizes(kind: FamilyKind, num_vertices: int) -> Optional[int]:
    if kind is FamilyKind.MOBIUS_LADDER:
        return num_vertices // 2 if num_vertices % 2 == 0 else None
    if kind is FamilyKind.MYCIELSKI_CYCLE:
        return (num_vertices - 1) // 2 if num_vertices % 2 == 1 else None
    return num_vertices


def _labelled_edge_set(g: Graph) -> frozenset[frozenset[str]]:
    return frozenset(frozenset((g.labels[u], g.labels[v])) for u, v in g.edges())


def recognise_family(g: Graph) -> Optional[FamilySpec]:
    """Return the family member whose generator reproduces ``g`` up to vertex order.

    Labels and labelled edges must match, so a relabelled cycle is not
    recognised, but a graph read back from an edge list is.
    """
    edges = _labelled_edge_set(g)
    for kind in FamilyKind:
        size = _candidate_sizes(kind, g.num_vertices)
        if size is None or size < MIN_SIZE[kind]:
            continue
        candidate = GENERATORS[kind](size)
        if set(candidate.labels) == set(g.labels) and _labelled_edge_set(candidate) == edges:
            return FamilySpec(kind=kind, size=size)
    return None

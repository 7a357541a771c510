"""Embeddings and the numerical verifier used as ground truth everywhere.

An embedding is a unit-distance witness when every edge has length 1 and the
vertex map is injective. Non-edges are unconstrained: dimension is defined via
subgraphs, not induced subgraphs, of the unit-distance graph.
"""

import logging
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.spatial.distance import pdist

from .errors import EmbeddingMismatchError, InvalidParameterError
from .graph_core import Graph

logger = logging.getLogger(__name__)

EXACT_TOL_EDGE = 1e-9
EXACT_TOL_SEP = 1e-6


@dataclass(frozen=True, eq=False)
class Embedding:
    """Coordinates for labelled vertices.

    Attributes:
        labels: Vertex labels, one per row of ``points``
        points: Array of shape (V, m) with finite entries
    """

    labels: tuple[str, ...]
    points: np.ndarray

    def __post_init__(self) -> None:
        points = np.asarray(self.points, dtype=float)
        if points.ndim != 2:
            raise EmbeddingMismatchError(f"points must be a (V, m) array, got shape {points.shape}")
        if points.shape[0] != len(self.labels):
            raise EmbeddingMismatchError(
                f"{len(self.labels)} labels but {points.shape[0]} points"
            )
        if points.shape[1] < 1:
            raise EmbeddingMismatchError("embedding dimension must be at least 1")
        if not np.all(np.isfinite(points)):
            raise EmbeddingMismatchError("embedding coordinates must be finite")
        object.__setattr__(self, "points", points)

    @property
    def dimension(self) -> int:
        return int(self.points.shape[1])

    @cached_property
    def _row(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    def aligned_to(self, g: Graph) -> np.ndarray:
        """Points reordered to the vertex order of ``g``.

        Raises:
            EmbeddingMismatchError: If the labels are not exactly those of ``g``
        """
        if set(self._row) != set(g.labels) or len(self.labels) != g.num_vertices:
            missing = sorted(set(g.labels) - set(self._row))
            extra = sorted(set(self._row) - set(g.labels))
            raise EmbeddingMismatchError(
                f"embedding does not cover the graph (missing {missing}, extra {extra})"
            )
        if self.labels == g.labels:
            return self.points
        return self.points[[self._row[label] for label in g.labels]]

    def scaled(self, factor: float) -> "Embedding":
        return Embedding(self.labels, self.points * factor)


def pad_embedding(emb: Embedding, dimension: int) -> Embedding:
    """Append zero coordinates so ``emb`` lives in a higher-dimensional space."""
    if dimension < emb.dimension:
        raise InvalidParameterError(
            f"cannot pad a {emb.dimension}-dimensional embedding down to {dimension}"
        )
    padding = np.zeros((len(emb.labels), dimension - emb.dimension))
    return Embedding(emb.labels, np.hstack([emb.points, padding]))


@dataclass(frozen=True)
class VerificationReport:
    max_edge_residual: float
    min_pair_separation: float
    ok: bool


def edge_lengths(g: Graph, points: np.ndarray) -> np.ndarray:
    edges = np.array(g.edges(), dtype=int).reshape(-1, 2)
    return np.linalg.norm(points[edges[:, 0]] - points[edges[:, 1]], axis=1)


def verify_embedding(
    g: Graph,
    emb: Embedding,
    tol_edge: float = EXACT_TOL_EDGE,
    tol_sep: float = EXACT_TOL_SEP,
) -> VerificationReport:
    """Measure how well ``emb`` realises ``g`` as a unit-distance graph.

    Args:
        g: Graph to check against
        emb: Embedding covering exactly the vertices of ``g``
        tol_edge: Largest accepted ``| |p_u - p_v| - 1 |`` over edges
        tol_sep: Smallest accepted distance between distinct vertices

    Returns:
        Report with the worst edge residual, the closest pair distance and
        whether both tolerances are met
    """
    if tol_edge <= 0 or tol_sep <= 0:
        raise InvalidParameterError("verification tolerances must be positive")
    points = emb.aligned_to(g)

    lengths = edge_lengths(g, points)
    max_edge_residual = float(np.max(np.abs(lengths - 1.0))) if lengths.size else 0.0
    min_pair_separation = float(np.min(pdist(points))) if g.num_vertices > 1 else float("inf")
    ok = max_edge_residual <= tol_edge and min_pair_separation >= tol_sep

    if not ok:
        logger.info(
            f"Embedding rejected: edge residual {max_edge_residual:.3e}, "
            f"separation {min_pair_separation:.3e}"
        )
    return VerificationReport(max_edge_residual, min_pair_separation, ok)

"""Closed-form unit-distance embeddings.

Each constructor returns coordinates in the vertex order of the matching
generator in ``families``. Angles are always computed
directly from the vertex index (never accumulated) so large rings don't drift.
"""

import logging
from dataclasses import dataclass
from math import gcd
from typing import Optional

import numpy as np

from .errors import InvalidParameterError, UnsupportedDimensionError
from .graph_core import Graph
from .families import (
    FamilyKind,
    FamilySpec,
    complete_graph,
    cycle_graph,
    mycielski_cycle,
    path_graph,
)
from .verification import Embedding, pad_embedding

logger = logging.getLogger(__name__)

GOLDEN_RATIO = (1 + np.sqrt(5)) / 2

# Inner-radius selection for the three-layer construction
MIN_INNER_RADIUS = 1e-3
MIN_LAYER_HEIGHT = 1e-6
MAX_RADIUS_STEPS = 60


def _ring(n: int, radius: float, step: int = 1, height: Optional[float] = None) -> np.ndarray:
    """``n`` points on a circle; point j at angle 2*pi*(step*j mod n)/n."""
    angles = 2 * np.pi * ((step * np.arange(n)) % n) / n
    columns = [radius * np.cos(angles), radius * np.sin(angles)]
    if height is not None:
        columns.append(np.full(n, height))
    return np.column_stack(columns)


def embed_cycle_polygon(n: int) -> Embedding:
    """Regular n-gon with unit sides."""
    g = cycle_graph(n)
    return Embedding(g.labels, _ring(n, 1 / (2 * np.sin(np.pi / n))))


def embed_complete_simplex(n: int) -> Embedding:
    """Regular simplex with unit edges in R^(n-1).

    The scaled standard basis ``e_i / sqrt(2)`` has all pairwise distances 1;
    centring it and expressing it in an orthonormal basis of its span drops
    one coordinate.
    """
    g = complete_graph(n)
    corners = np.eye(n) / np.sqrt(2)
    corners -= corners.mean(axis=0)
    _, _, vt = np.linalg.svd(corners)
    return Embedding(g.labels, corners @ vt[: n - 1].T)


def embed_path_line(n: int) -> Embedding:
    g = path_graph(n)
    return Embedding(g.labels, np.arange(n, dtype=float).reshape(-1, 1))


def embed_subgraph_of_simplex(g: Graph) -> Embedding:
    """Any graph on V vertices sits inside K_V, so the simplex is a witness.

    Gives ``dim(g) <= max(1, V - 1)``.
    """
    if g.num_vertices == 0:
        raise InvalidParameterError("cannot embed the empty graph")
    if g.num_vertices == 1:
        return Embedding(g.labels, np.zeros((1, 1)))
    simplex = embed_complete_simplex(g.num_vertices)
    return Embedding(g.labels, simplex.points)


def embed_mycielski_c10() -> tuple[Graph, Embedding]:
    """Planar embedding of M(C10) on two concentric decagons.

    Apex at the origin, shadow j' at angle pi*j/5 on the unit circle, copy j at
    the same angle on the circle of radius phi; cos(36 deg) = phi/2 makes every
    shadow-to-copy edge unit.
    """
    g = mycielski_cycle(10)
    points = np.vstack([
        _ring(10, GOLDEN_RATIO),
        _ring(10, 1.0),
        np.zeros((1, 2)),
    ])
    return g, Embedding(g.labels, points)


@dataclass(frozen=True)
class RingParameters:
    """Geometry of the three-layer embedding of M(C_n) in R^3.

    The outer ring is a regular star polygon: copy j sits at angle
    ``2*pi*winding*j/n``, radius ``R_outer`` and height ``h``; shadow j at the
    same angle, radius ``rho_inner`` and height 0; the apex at depth ``g``.
    """

    n: int
    winding: int
    R_outer: float
    rho_inner: float
    h: float
    g: float

    @property
    def angle_step(self) -> float:
        return 2 * np.pi * self.winding / self.n


def _outer_radius(alpha: float) -> float:
    return 1 / (2 * np.sin(alpha / 2))


def _height_squared(R: float, rho: float, alpha: float) -> float:
    return 1 - (R * R + rho * rho - 2 * R * rho * np.cos(alpha))


def _windings(n: int, winding: Optional[int]) -> list[int]:
    if winding is not None:
        if not (1 <= winding < n / 2 and gcd(winding, n) == 1):
            raise InvalidParameterError(
                f"winding {winding} must be coprime to n={n} and below n/2"
            )
        return [winding]
    return [k for k in range(1, (n + 1) // 2) if gcd(k, n) == 1]


def _pick_inner_radius(R: float, alpha: float) -> Optional[float]:
    lo = max(MIN_INNER_RADIUS, R * np.cos(alpha) - np.sin(alpha / 2))
    hi = min(1.0, R * np.cos(alpha) + np.sin(alpha / 2))
    if lo >= hi:
        return None
    rho = lo + 0.5 * (hi - lo)
    for _ in range(MAX_RADIUS_STEPS):
        if _height_squared(R, rho, alpha) >= MIN_LAYER_HEIGHT**2:
            return rho
        rho = lo + 0.5 * (rho - lo)
    return None


def ring_parameters(
    n: int, rho_inner: Optional[float] = None, winding: Optional[int] = None
) -> RingParameters:
    """Radii and heights for the three-layer embedding of M(C_n).

    The smallest admissible winding is used: 1 (the plain polygon) whenever its
    feasible inner-radius interval leaves room for a positive height, which is
    the case for n <= 9. Beyond that the apex-to-shadow constraint
    (rho <= 1) and the shadow-to-copy constraint cannot both hold around a
    polygon that large, and the outer cycle is wound into a star polygon.

    Args:
        n: Cycle length, at least 3
        rho_inner: Fixed inner radius instead of the interior choice
        winding: Fixed winding instead of the smallest admissible one

    Raises:
        InvalidParameterError: If ``n < 3`` or the fixed choices are infeasible
    """
    if n < 3:
        raise InvalidParameterError(f"three-layer embedding requires n >= 3, got {n}")
    if rho_inner is not None and not 0 < rho_inner <= 1:
        raise InvalidParameterError(f"inner radius must lie in (0, 1], got {rho_inner}")

    for k in _windings(n, winding):
        alpha = 2 * np.pi * k / n
        R = _outer_radius(alpha)
        if rho_inner is None:
            rho = _pick_inner_radius(R, alpha)
            if rho is None:
                continue
        else:
            rho = rho_inner
            if _height_squared(R, rho, alpha) < MIN_LAYER_HEIGHT**2:
                continue
        h = float(np.sqrt(_height_squared(R, rho, alpha)))
        depth = float(np.sqrt(max(0.0, 1 - rho * rho)))
        if k > 1:
            logger.debug(f"M(C_{n}): plain polygon infeasible, using winding {k}")
        return RingParameters(n=n, winding=k, R_outer=float(R), rho_inner=float(rho), h=h, g=depth)

    raise InvalidParameterError(
        f"no feasible three-layer parameters for n={n}"
        + (f" with inner radius {rho_inner}" if rho_inner is not None else "")
        + (f" and winding {winding}" if winding is not None else "")
    )


def embed_mycielski_cycle_3d(
    n: int, params: Optional[RingParameters] = None
) -> tuple[Graph, Embedding]:
    """Unit-distance embedding of M(C_n) in R^3 on three layers."""
    params = params or ring_parameters(n)
    if params.n != n:
        raise InvalidParameterError(f"ring parameters are for n={params.n}, not {n}")
    g = mycielski_cycle(n)
    points = np.vstack([
        _ring(n, params.R_outer, params.winding, params.h),
        _ring(n, params.rho_inner, params.winding, 0.0),
        np.array([[0.0, 0.0, -params.g]]),
    ])
    return g, Embedding(g.labels, points)


def natural_dimension(spec: FamilySpec) -> int:
    """Dimension of the closed-form embedding used for ``spec``."""
    if spec.kind is FamilyKind.CYCLE:
        return 2
    if spec.kind is FamilyKind.COMPLETE:
        return spec.size - 1
    if spec.kind is FamilyKind.PATH:
        return 1
    if spec.kind is FamilyKind.MYCIELSKI_CYCLE:
        return 2 if spec.size == 10 else 3
    raise UnsupportedDimensionError(f"no closed-form embedding for {spec.kind.value}")


def exact_embedding(
    spec: FamilySpec, dimension: Optional[int] = None
) -> tuple[Graph, Embedding]:
    """Closed-form embedding of a family member, padded up to ``dimension``.

    Raises:
        UnsupportedDimensionError: If no closed form exists in that dimension
    """
    natural = natural_dimension(spec)
    dimension = natural if dimension is None else dimension
    if dimension < natural:
        raise UnsupportedDimensionError(
            f"no closed-form embedding of {spec.name} in R^{dimension} "
            f"(the construction needs R^{natural})"
        )

    if spec.kind is FamilyKind.CYCLE:
        g, emb = cycle_graph(spec.size), embed_cycle_polygon(spec.size)
    elif spec.kind is FamilyKind.COMPLETE:
        g, emb = complete_graph(spec.size), embed_complete_simplex(spec.size)
    elif spec.kind is FamilyKind.PATH:
        g, emb = path_graph(spec.size), embed_path_line(spec.size)
    elif natural == 2:
        g, emb = embed_mycielski_c10()
    else:
        g, emb = embed_mycielski_cycle_3d(spec.size)

    if emb.dimension < dimension:
        emb = pad_embedding(emb, dimension)
    return g, emb

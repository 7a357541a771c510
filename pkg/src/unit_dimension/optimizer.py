"""Numerical search for unit-distance embeddings.

Minimises ``sum over edges (|p_u - p_v|^2 - 1)^2`` from random starts with a
trust-region least-squares solver on the per-edge residual vector. The
objective has zero-residual minima where non-adjacent vertices coincide, so
every descent starts with a hinge penalty keeping non-adjacent vertices apart
and ends on the plain objective. A failed search means "no embedding found",
never "no embedding exists".
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from scipy.optimize import least_squares
from scipy.spatial.distance import pdist

from .errors import InvalidParameterError
from .graph_core import Graph
from .verification import Embedding, verify_embedding

logger = logging.getLogger(__name__)

MIN_PAIR_LENGTH = 1e-12
SOLVER_TOL = 1e-15


class SearchConfig(BaseModel):
    """Settings of one embedding search.

    Restart ``k`` draws from a generator seeded with ``seed ^ k``, so restarts
    can run in any order or in parallel with the same outcome.
    """

    model_config = ConfigDict(frozen=True)

    dimension: int = Field(ge=1)
    restarts: int = Field(default=50, ge=1)
    max_iterations: int = Field(default=2000, ge=1)
    success_tol: float = Field(default=1e-6, gt=0)
    separation_tol: float = Field(default=1e-3, gt=0)
    seed: int = Field(default=1, ge=0, lt=2**64)
    init_box: float = Field(default=1.5, gt=0)
    hops: int = Field(default=4, ge=0)
    hop_scale: float = Field(default=0.3, gt=0)
    repulsion_distance: float = Field(default=0.5, gt=0)
    repulsion_weight: float = Field(default=1.0, gt=0)
    stop_on_success: bool = True
    workers: int = Field(default=1, ge=1)


@dataclass(frozen=True)
class SearchResult:
    success: bool
    best_embedding: Embedding
    best_residual: float
    restarts_used: int
    iterations_total: int


@dataclass(frozen=True)
class _Candidate:
    points: np.ndarray
    residual: float
    separated: bool
    success: bool

    @property
    def key(self) -> tuple[bool, bool, float]:
        return (not self.success, not self.separated, self.residual)


@dataclass(frozen=True)
class _RestartOutcome:
    restart: int
    best: _Candidate
    iterations: int

    @property
    def success(self) -> bool:
        return self.best.success

    @property
    def rank(self) -> tuple[bool, bool, float, int]:
        return (*self.best.key, self.restart)


@dataclass(frozen=True)
class _Repulsion:
    """Hinge residuals ``weight * max(0, distance - |p_a - p_b|)`` on vertex pairs."""

    pairs: np.ndarray
    distance: float
    weight: float

    def _lengths(self, points: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        diff = points[self.pairs[:, 0]] - points[self.pairs[:, 1]]
        return diff, np.sqrt(np.einsum("ij,ij->i", diff, diff))

    def residuals(self, points: np.ndarray) -> np.ndarray:
        _, d = self._lengths(points)
        return self.weight * np.maximum(0.0, self.distance - d)

    def jacobian(self, points: np.ndarray) -> np.ndarray:
        diff, d = self._lengths(points)
        slope = np.where(d < self.distance, -self.weight / np.maximum(d, MIN_PAIR_LENGTH), 0.0)
        term = slope[:, None] * diff
        rows = np.arange(len(self.pairs))
        J = np.zeros((len(self.pairs), *points.shape))
        J[rows, self.pairs[:, 0]] = term
        J[rows, self.pairs[:, 1]] = -term
        return J.reshape(len(self.pairs), -1)


def _edge_array(g: Graph) -> np.ndarray:
    return np.array(g.edges(), dtype=int).reshape(-1, 2)


def _non_edge_pairs(g: Graph, edges: np.ndarray) -> np.ndarray:
    free = np.triu(np.ones((g.num_vertices, g.num_vertices), dtype=bool), k=1)
    free[edges[:, 0], edges[:, 1]] = False
    return np.argwhere(free)


def _squared_lengths(edges: np.ndarray, points: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    diff = points[edges[:, 0]] - points[edges[:, 1]]
    return diff, np.einsum("ij,ij->i", diff, diff)


def residual(g: Graph, points: np.ndarray) -> float:
    """Sum over edges of ``(|p_u - p_v|^2 - 1)^2``."""
    _, d2 = _squared_lengths(_edge_array(g), np.asarray(points, dtype=float))
    return float(np.sum((d2 - 1.0) ** 2))


def residual_gradient(g: Graph, points: np.ndarray) -> np.ndarray:
    """Analytic gradient of :func:`residual`, same shape as ``points``."""
    points = np.asarray(points, dtype=float)
    edges = _edge_array(g)
    diff, d2 = _squared_lengths(edges, points)
    term = 4.0 * (d2 - 1.0)[:, None] * diff
    grad = np.zeros_like(points)
    np.add.at(grad, edges[:, 0], term)
    np.add.at(grad, edges[:, 1], -term)
    return grad


def _polish(
    edges: np.ndarray,
    points: np.ndarray,
    max_iterations: int,
    repulsion: Optional[_Repulsion] = None,
) -> tuple[np.ndarray, int]:
    """Local least-squares solve on the per-edge residuals ``|p_u - p_v|^2 - 1``,
    plus the hinge residuals of ``repulsion`` when given."""
    shape = points.shape
    if len(edges) == 0:
        return points, 0
    rows = np.arange(len(edges))
    m = shape[1]

    def fun(x: np.ndarray) -> np.ndarray:
        x = x.reshape(shape)
        _, d2 = _squared_lengths(edges, x)
        if repulsion is None:
            return d2 - 1.0
        return np.concatenate([d2 - 1.0, repulsion.residuals(x)])

    def jac(x: np.ndarray) -> np.ndarray:
        x = x.reshape(shape)
        diff, _ = _squared_lengths(edges, x)
        J = np.zeros((len(edges), shape[0], m))
        J[rows, edges[:, 0]] = 2.0 * diff
        J[rows, edges[:, 1]] = -2.0 * diff
        J = J.reshape(len(edges), -1)
        if repulsion is None:
            return J
        return np.vstack([J, repulsion.jacobian(x)])

    solution = least_squares(
        fun,
        points.ravel(),
        jac=jac,
        method="trf",
        max_nfev=max_iterations,
        ftol=SOLVER_TOL,
        xtol=SOLVER_TOL,
        gtol=SOLVER_TOL,
    )
    return solution.x.reshape(shape), int(solution.nfev)


def _run_restart(
    g: Graph, cfg: SearchConfig, edges: np.ndarray, pairs: np.ndarray, restart: int
) -> _RestartOutcome:
    """One restart: a random start, then ``cfg.hops`` perturb-and-descend rounds.

    Each descent first polishes with the repulsion hinge, which pushes apart
    non-adjacent vertices closer than ``cfg.repulsion_distance``, then
    re-polishes on the plain objective. A hop is kept when it improves
    (not success, not separated, residual).
    """
    rng = np.random.default_rng(cfg.seed ^ restart)
    shape = (g.num_vertices, cfg.dimension)
    repulsion = (
        _Repulsion(pairs, cfg.repulsion_distance, cfg.repulsion_weight) if len(pairs) else None
    )
    iterations = 0

    def candidate(points: np.ndarray) -> _Candidate:
        report = verify_embedding(
            g, Embedding(g.labels, points), cfg.success_tol, cfg.separation_tol
        )
        separated = g.num_vertices < 2 or float(np.min(pdist(points))) >= cfg.separation_tol
        return _Candidate(points, residual(g, points), separated, report.ok)

    def descend(start: np.ndarray) -> _Candidate:
        nonlocal iterations
        spread, used = _polish(edges, start, cfg.max_iterations, repulsion)
        iterations += used
        if repulsion is None:
            return candidate(spread)
        settled, used = _polish(edges, spread, cfg.max_iterations)
        iterations += used
        return min(candidate(spread), candidate(settled), key=lambda c: c.key)

    best = descend(rng.uniform(-cfg.init_box, cfg.init_box, size=shape))
    for _ in range(cfg.hops):
        if best.success:
            break
        trial = descend(best.points + rng.normal(scale=cfg.hop_scale, size=shape))
        if trial.key < best.key:
            best = trial
    if not best.separated:
        logger.debug(f"Restart {restart} ended with coincident vertices")
    return _RestartOutcome(restart, best, iterations)


def search_embedding(g: Graph, cfg: SearchConfig) -> SearchResult:
    """Search for a unit-distance embedding of ``g`` in ``R^cfg.dimension``.

    Restarts are evaluated in batches of ``cfg.workers``; with
    ``stop_on_success`` the search ends after the first batch containing a
    verified embedding. The best restart is the one minimising
    (not success, not separated, residual, restart index), so the outcome
    does not depend on the order restarts finish in.

    Raises:
        InvalidParameterError: If ``g`` has no vertices
    """
    if g.num_vertices == 0:
        raise InvalidParameterError("cannot search for an embedding of the empty graph")
    edges = _edge_array(g)
    pairs = _non_edge_pairs(g, edges)
    logger.info(
        f"Searching R^{cfg.dimension} for {g.num_vertices} vertices / {g.num_edges} edges "
        f"({cfg.restarts} restarts, seed {cfg.seed})"
    )

    outcomes: list[_RestartOutcome] = []
    with ThreadPoolExecutor(max_workers=cfg.workers) as executor:
        for start in range(0, cfg.restarts, cfg.workers):
            batch = range(start, min(start + cfg.workers, cfg.restarts))
            outcomes.extend(executor.map(lambda k: _run_restart(g, cfg, edges, pairs, k), batch))
            if cfg.stop_on_success and any(o.success for o in outcomes):
                break

    best = min(outcomes, key=lambda o: o.rank)
    result = SearchResult(
        success=best.success,
        best_embedding=Embedding(g.labels, best.best.points),
        best_residual=best.best.residual,
        restarts_used=len(outcomes),
        iterations_total=sum(o.iterations for o in outcomes),
    )
    if result.success:
        logger.info(
            f"Found an embedding in R^{cfg.dimension} after {result.restarts_used} restarts "
            f"(residual {result.best_residual:.3e})"
        )
    else:
        logger.info(
            f"No embedding found in R^{cfg.dimension}; best residual {result.best_residual:.3e}"
        )
    return result

"""Two-sided dimension reports: certified lower bound, witnessed upper bound.

The upper bound always comes with an embedding: a verified closed form, a
verified search result, or the simplex on all vertices. The interval is never
narrowed beyond what both sides prove.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .constructions import embed_subgraph_of_simplex, exact_embedding, natural_dimension
from .errors import InconsistentBoundsError, UnsupportedDimensionError
from .families import recognise_family
from .graph_core import Graph
from .optimizer import SearchConfig, search_embedding
from .vecneg import LowerBound, LowerBoundReason, lower_bound_dim
from .verification import (
    EXACT_TOL_EDGE,
    EXACT_TOL_SEP,
    Embedding,
    verify_embedding,
)

logger = logging.getLogger(__name__)


class UpperBoundSource(str, Enum):
    EXACT = "exact"
    SEARCH = "search"
    SIMPLEX = "simplex"


@dataclass(frozen=True)
class DimensionInterval:
    lower: int
    upper: int
    lower_reason: LowerBoundReason
    upper_source: UpperBoundSource

    @property
    def is_tight(self) -> bool:
        return self.lower == self.upper

    def __str__(self) -> str:
        if self.is_tight:
            return f"dim = {self.lower}"
        return f"{self.lower} ≤ dim ≤ {self.upper}"


def simplex_upper_bound(g: Graph) -> int:
    """Every graph on V vertices is a subgraph of K_V, which embeds in R^(V-1)."""
    return max(1, g.num_vertices - 1)


def combine_bounds(
    g: Graph,
    lower: LowerBound,
    exact_dimension: Optional[int] = None,
    search_dimension: Optional[int] = None,
) -> DimensionInterval:
    """Smallest witnessed upper bound against the certified lower bound.

    Ties prefer an exact construction over a search witness over the simplex.

    Raises:
        InconsistentBoundsError: If a witness sits below the certified lower
            bound, which means a certificate or a verification is wrong
    """
    candidates = [
        (dimension, rank, source)
        for rank, (dimension, source) in enumerate([
            (exact_dimension, UpperBoundSource.EXACT),
            (search_dimension, UpperBoundSource.SEARCH),
            (simplex_upper_bound(g), UpperBoundSource.SIMPLEX),
        ])
        if dimension is not None
    ]
    upper, _, source = min(candidates)
    if upper < lower.bound:
        raise InconsistentBoundsError(
            f"{source.value} witness in R^{upper} contradicts the certified "
            f"lower bound {lower.bound} ({lower.reason.value})"
        )
    return DimensionInterval(lower.bound, upper, lower.reason, source)


def exact_upper_bound(g: Graph) -> Optional[tuple[int, Embedding]]:
    """Dimension and verified embedding from a closed-form constructor, if ``g`` is a known family."""
    spec = recognise_family(g)
    if spec is None:
        return None
    try:
        dimension = natural_dimension(spec)
    except UnsupportedDimensionError:
        logger.info(f"{spec.name} is recognised but has no closed-form embedding")
        return None
    _, emb = exact_embedding(spec, dimension)
    report = verify_embedding(g, emb, EXACT_TOL_EDGE, EXACT_TOL_SEP)
    if not report.ok:
        logger.warning(f"Closed-form embedding of {spec.name} failed verification")
        return None
    return dimension, emb


def dimension_interval(
    g: Graph, search: Optional[SearchConfig] = None
) -> tuple[DimensionInterval, LowerBound, Optional[Embedding]]:
    """Full two-sided report for ``g``.

    The numerical search runs only when it could close the gap, at the
    dimension of the lower bound. ``search=None`` skips it.

    Returns:
        The interval, the lower bound with its certificate, and the witness
        embedding behind the upper bound (``None`` only for the empty graph)
    """
    lower = lower_bound_dim(g)
    witness: Optional[Embedding] = None
    exact_dimension = None
    exact = exact_upper_bound(g)
    if exact is not None:
        exact_dimension, witness = exact

    search_dimension = None
    best_so_far = min(filter(None, [exact_dimension, simplex_upper_bound(g)]))
    if search is not None and best_so_far > lower.bound:
        cfg = search.model_copy(update={"dimension": lower.bound})
        result = search_embedding(g, cfg)
        if result.success:
            search_dimension = lower.bound
            witness = result.best_embedding

    interval = combine_bounds(g, lower, exact_dimension, search_dimension)
    if interval.upper_source is UpperBoundSource.SIMPLEX:
        witness = embed_subgraph_of_simplex(g) if g.num_vertices else None
    logger.info(f"{g.num_vertices} vertices, {g.num_edges} edges: {interval}")
    return interval, lower, witness

"""
Search pipeline: numerical witnesses for the graphs and dimensions listed in the parameters.
"""

import logging
from typing import Any

import pandas as pd

from unit_dimension.io_utils import corpus_graphs, embedding_to_dict
from unit_dimension.optimizer import SearchConfig, search_embedding

logger = logging.getLogger(__name__)


def witness_key(graph: str, dimension: int) -> str:
    return f"{graph}@{dimension}"


def search_listed_graphs(
    graph_corpus: dict[str, dict[str, Any]], search_params: dict[str, Any]
) -> tuple[pd.DataFrame, dict[str, Any]]:
    """Run the embedding search for every ``(graph, dimension)`` target.

    Args:
        graph_corpus: Stored corpus
        search_params: ``defaults`` (any ``SearchConfig`` field but ``dimension``)
            and ``targets``, a list of ``{graph, dimension}`` with optional overrides

    Returns:
        Tuple of (one row per target, verified embeddings keyed by ``graph@dimension``)
    """
    graphs = corpus_graphs(graph_corpus)
    defaults = search_params.get("defaults", {})
    rows = []
    witnesses = {}
    for target in search_params["targets"]:
        overrides = {k: v for k, v in target.items() if k != "graph"}
        cfg = SearchConfig(**{**defaults, **overrides})
        name = target["graph"]
        result = search_embedding(graphs[name], cfg)
        rows.append({
            "graph": name,
            "dimension": cfg.dimension,
            "success": result.success,
            "best_residual": result.best_residual,
            "restarts_used": result.restarts_used,
            "iterations_total": result.iterations_total,
        })
        if result.success:
            witnesses[witness_key(name, cfg.dimension)] = embedding_to_dict(result.best_embedding)
        logger.info(
            f"{name} in R^{cfg.dimension}: {'found' if result.success else 'not found'} "
            f"(residual {result.best_residual:.3e})"
        )

    return pd.DataFrame(rows), witnesses

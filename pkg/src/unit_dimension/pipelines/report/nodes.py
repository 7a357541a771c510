"""
Report pipeline: dimension intervals, the corpus consistency gate and SVG figures.
"""

import logging
from typing import Any, Optional

import pandas as pd

from unit_dimension.bounds import combine_bounds
from unit_dimension.errors import InconsistentBoundsError
from unit_dimension.io_utils import corpus_graphs, embedding_from_dict
from unit_dimension.svg_utils import render_svg
from unit_dimension.vecneg import LowerBound, LowerBoundReason

logger = logging.getLogger(__name__)

PLANAR = 2


def _min_dimension(frame: pd.DataFrame, graph: str, passed: str) -> Optional[int]:
    dims = frame.loc[(frame["graph"] == graph) & frame[passed].astype(bool), "dimension"]
    return int(dims.min()) if len(dims) else None


def compute_dimension_intervals(
    graph_corpus: dict[str, dict[str, Any]],
    lower_bounds: pd.DataFrame,
    verification_report: pd.DataFrame,
    search_results: pd.DataFrame,
) -> pd.DataFrame:
    """Combine lower bounds with closed-form and search witnesses per graph."""
    graphs = corpus_graphs(graph_corpus)
    rows = []
    for record in lower_bounds.itertuples(index=False):
        g = graphs[record.graph]
        lower = LowerBound(int(record.lower_bound), LowerBoundReason(record.reason), None)
        interval = combine_bounds(
            g,
            lower,
            exact_dimension=_min_dimension(verification_report, record.graph, "ok"),
            search_dimension=_min_dimension(search_results, record.graph, "success"),
        )
        rows.append({
            "graph": record.graph,
            "vertices": g.num_vertices,
            "edges": g.num_edges,
            "lower": interval.lower,
            "upper": interval.upper,
            "interval": str(interval),
            "lower_reason": interval.lower_reason.value,
            "upper_source": interval.upper_source.value,
        })

    intervals = pd.DataFrame(rows)
    tight = int((intervals["lower"] == intervals["upper"]).sum())
    logger.info(f"Dimension known exactly for {tight} of {len(intervals)} graphs")
    return intervals


def check_corpus_consistency(
    lower_bounds: pd.DataFrame,
    verification_report: pd.DataFrame,
    search_results: pd.DataFrame,
) -> dict[str, Any]:
    """Fail the run if a graph has both an obstruction and a planar witness.

    Raises:
        InconsistentBoundsError: Listing every conflicting graph
    """
    obstructed = set(lower_bounds.loc[lower_bounds["lower_bound"] >= 3, "graph"])
    planar_exact = set(verification_report.loc[
        verification_report["ok"].astype(bool) & (verification_report["dimension"] <= PLANAR), "graph"
    ])
    planar_search = set(search_results.loc[
        search_results["success"].astype(bool) & (search_results["dimension"] <= PLANAR), "graph"
    ])
    conflicts = sorted(obstructed & (planar_exact | planar_search))
    if conflicts:
        raise InconsistentBoundsError(
            f"graphs with a VecNeg obstruction and a verified planar embedding: {conflicts}"
        )
    logger.info(f"Corpus consistent: {len(obstructed)} obstructed graphs, none with a planar witness")
    return {
        "graphs_checked": int(lower_bounds["graph"].nunique()),
        "obstructed": len(obstructed),
        "planar_witnesses": len(planar_exact | planar_search),
        "conflicts": conflicts,
    }


def render_figures(
    graph_corpus: dict[str, dict[str, Any]],
    exact_embeddings: dict[str, Any],
    search_embeddings: dict[str, Any],
    figures: list[str],
) -> dict[str, str]:
    """SVG drawings for the listed embeddings.

    Plain graph names refer to closed-form embeddings, ``graph@m`` to search
    witnesses. Entries without a stored embedding are skipped with a warning.
    """
    graphs = corpus_graphs(graph_corpus)
    rendered = {}
    for key in figures:
        source = search_embeddings if "@" in key else exact_embeddings
        if key not in source:
            logger.warning(f"No embedding stored for figure {key!r}")
            continue
        emb, _ = embedding_from_dict(source[key])
        rendered[key.replace("@", "_search_R")] = render_svg(graphs[key.split("@")[0]], emb)

    logger.info(f"Rendered {len(rendered)} figures")
    return rendered

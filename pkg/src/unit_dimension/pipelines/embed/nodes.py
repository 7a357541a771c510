"""
Embed pipeline: closed-form upper-bound witnesses and their verification.
"""

import logging
from typing import Any

import pandas as pd
from matplotlib.figure import Figure

from unit_dimension.constructions import (
    embed_mycielski_c10,
    embed_mycielski_cycle_3d,
    exact_embedding,
    natural_dimension,
    ring_parameters,
)
from unit_dimension.errors import UnitDimensionError, UnsupportedDimensionError
from unit_dimension.families import FamilySpec
from unit_dimension.io_utils import corpus_graphs, embedding_from_dict, embedding_to_dict
from unit_dimension.vecneg import build_vecneg, max_negation_defect
from unit_dimension.verification import verify_embedding

from .plot_utils import create_ring_parameter_figure

logger = logging.getLogger(__name__)


def compute_exact_embeddings(graph_corpus: dict[str, dict[str, Any]]) -> dict[str, Any]:
    """Closed-form embedding of every corpus graph whose family has one."""
    embeddings = {}
    for name, entry in graph_corpus.items():
        spec = FamilySpec(kind=entry["family"], size=entry["size"])
        try:
            natural_dimension(spec)
        except UnsupportedDimensionError:
            logger.debug(f"No closed form for {name}")
            continue
        _, emb = exact_embedding(spec)
        embeddings[name] = embedding_to_dict(emb)

    logger.info(f"Built closed-form embeddings for {len(embeddings)} of {len(graph_corpus)} graphs")
    return embeddings


def verify_exact_embeddings(
    graph_corpus: dict[str, dict[str, Any]],
    exact_embeddings: dict[str, Any],
    tolerances: dict[str, float],
) -> pd.DataFrame:
    """Verification report for the closed-form embeddings.

    Raises:
        UnitDimensionError: If a closed-form embedding fails verification
    """
    graphs = corpus_graphs(graph_corpus)
    rows = []
    for name, doc in exact_embeddings.items():
        emb, _ = embedding_from_dict(doc)
        report = verify_embedding(graphs[name], emb, tolerances["tol_edge"], tolerances["tol_sep"])
        rows.append({
            "graph": name,
            "dimension": emb.dimension,
            "max_edge_residual": report.max_edge_residual,
            "min_pair_separation": report.min_pair_separation,
            "ok": report.ok,
        })

    verification = pd.DataFrame(rows)
    failed = verification.loc[~verification["ok"], "graph"].tolist()
    if failed:
        raise UnitDimensionError(f"closed-form embeddings failed verification: {failed}")
    logger.info(
        f"Verified {len(verification)} closed-form embeddings, worst edge residual "
        f"{verification['max_edge_residual'].max():.3e}"
    )
    return verification


def sweep_ring_parameters(
    sweep_params: dict[str, int], tolerances: dict[str, float]
) -> pd.DataFrame:
    """Three-layer parameters and verification for every n in the sweep.

    Raises:
        UnitDimensionError: If any embedding in the sweep fails verification
    """
    rows = []
    for n in range(sweep_params["start"], sweep_params["stop"] + 1):
        params = ring_parameters(n)
        g, emb = embed_mycielski_cycle_3d(n, params)
        report = verify_embedding(g, emb, tolerances["tol_edge"], tolerances["tol_sep"])
        rows.append({
            "n": n,
            "winding": params.winding,
            "R_outer": params.R_outer,
            "rho_inner": params.rho_inner,
            "h": params.h,
            "g": params.g,
            "max_edge_residual": report.max_edge_residual,
            "min_pair_separation": report.min_pair_separation,
            "ok": report.ok,
        })

    table = pd.DataFrame(rows)
    if not table["ok"].all():
        raise UnitDimensionError(f"three-layer embedding rejected for n = {table.loc[~table['ok'], 'n'].tolist()}")
    logger.info(f"Three-layer embeddings verified for n = {sweep_params['start']}..{sweep_params['stop']}")
    return table


def plot_ring_parameters(ring_parameter_table: pd.DataFrame) -> Figure:
    return create_ring_parameter_figure(ring_parameter_table)


def check_planar_negation(tol: float) -> dict[str, Any]:
    """Opposite-vector check of every VecNeg edge on the planar M(C10) drawing.

    Raises:
        UnitDimensionError: If some pair of VecNeg-adjacent displacements does not cancel
    """
    g, emb = embed_mycielski_c10()
    vn = build_vecneg(g)
    defect = max_negation_defect(vn, emb.aligned_to(g))
    if defect > tol:
        raise UnitDimensionError(f"VecNeg negation defect {defect:.3e} exceeds {tol:.1e}")
    logger.info(f"All {vn.num_edges} VecNeg edges of M(C10) are negated vectors (defect {defect:.2e})")
    return {"graph": "mycielski_cycle_10", "vecneg_edges": vn.num_edges, "max_negation_defect": defect}

"""
Obstruction pipeline: certified lower bounds on the dimension of every corpus graph,
plus the audits that keep the VecNeg machinery honest.
"""

import logging
from typing import Any

import numpy as np
import pandas as pd

from unit_dimension.errors import UnitDimensionError
from unit_dimension.families import mobius_ladder, random_graph
from unit_dimension.graph_core import Walk
from unit_dimension.io_utils import certificate_to_dict, corpus_graphs, obstruction_from_dict
from unit_dimension.validation import validate_obstruction, vecneg_oracle_mismatches
from unit_dimension.vecneg import (
    ObstructionKind,
    build_vecneg,
    find_obstruction,
    lower_bound_dim,
    mobius_ladder_certificate,
)

logger = logging.getLogger(__name__)


def compute_lower_bounds(
    graph_corpus: dict[str, dict[str, Any]],
) -> tuple[pd.DataFrame, dict[str, Any]]:
    """Run the lower-bound test on every corpus graph.

    Returns:
        Tuple of (one row per graph with bound, reason and certificate size,
        certificates keyed by graph name; ``None`` for graphs without one)
    """
    logger.info(f"Computing lower bounds for {len(graph_corpus)} graphs")
    rows = []
    certificates: dict[str, Any] = {}
    for name, g in corpus_graphs(graph_corpus).items():
        lower = lower_bound_dim(g)
        cert = lower.certificate
        rows.append({
            "graph": name,
            "family": graph_corpus[name]["family"],
            "size": graph_corpus[name]["size"],
            "vertices": g.num_vertices,
            "edges": g.num_edges,
            "lower_bound": lower.bound,
            "reason": lower.reason.value,
            "certificate_kind": "cycle" if isinstance(cert, Walk) else (cert.kind.value if cert else None),
            "certificate_length": cert.length if cert is not None else None,
        })
        certificates[name] = certificate_to_dict(g, cert)

    bounds = pd.DataFrame(rows)
    obstructed = int((bounds["lower_bound"] == 3).sum())
    logger.info(f"{obstructed} of {len(bounds)} graphs carry a VecNeg obstruction")
    return bounds, certificates


def validate_certificates(
    graph_corpus: dict[str, dict[str, Any]], certificates: dict[str, Any]
) -> pd.DataFrame:
    """Re-check every stored VecNeg certificate from its label form.

    Raises:
        UnitDimensionError: If any certificate fails validation
    """
    graphs = corpus_graphs(graph_corpus)
    rows = []
    for name, doc in certificates.items():
        if doc is None or doc["kind"] == "cycle":
            continue
        g = graphs[name]
        cert = obstruction_from_dict(g, doc)
        rows.append({
            "graph": name,
            "kind": cert.kind.value,
            "walk_length": cert.length,
            "valid": validate_obstruction(g, cert),
        })

    report = pd.DataFrame(rows, columns=["graph", "kind", "walk_length", "valid"])
    invalid = report.loc[~report["valid"].astype(bool), "graph"].tolist()
    if invalid:
        raise UnitDimensionError(f"certificates failed validation: {invalid}")
    logger.info(f"All {len(report)} VecNeg certificates re-validated")
    return report


def audit_vecneg_oracle(oracle_params: dict[str, Any]) -> dict[str, Any]:
    """Compare the VecNeg construction with the pairwise definition on random graphs.

    Args:
        oracle_params: ``graphs``, ``max_vertices``, ``edge_probability`` and ``seed``

    Raises:
        UnitDimensionError: If any random graph shows a difference
    """
    rng = np.random.default_rng(oracle_params["seed"])
    p = oracle_params["edge_probability"]
    mismatched = []
    directed_edges = 0
    for i in range(oracle_params["graphs"]):
        n = int(rng.integers(1, oracle_params["max_vertices"] + 1))
        g = random_graph(n, p, rng)
        vn = build_vecneg(g)
        directed_edges += len(vn.vertices)
        if vecneg_oracle_mismatches(g, vn):
            mismatched.append(i)

    if mismatched:
        raise UnitDimensionError(f"VecNeg construction disagrees with its definition on graphs {mismatched}")
    logger.info(f"VecNeg matches the pairwise definition on {oracle_params['graphs']} random graphs")
    return {**oracle_params, "directed_edges_checked": directed_edges, "mismatches": 0}


def audit_mobius_certificates(mobius_params: dict[str, int]) -> pd.DataFrame:
    """Check both the search and the explicit odd walk for each Möbius ladder.

    Raises:
        UnitDimensionError: If either certificate is missing or invalid
    """
    rows = []
    for k in range(mobius_params["start"], mobius_params["stop"] + 1):
        g = mobius_ladder(k)
        found = find_obstruction(g)
        explicit = mobius_ladder_certificate(k)
        rows.append({
            "k": k,
            "found_kind": found.kind.value if found else None,
            "found_valid": found is not None and validate_obstruction(g, found),
            "explicit_length": explicit.length,
            "explicit_valid": validate_obstruction(g, explicit),
        })

    audit = pd.DataFrame(rows)
    ok = (
        (audit["found_kind"] == ObstructionKind.ODD_CLOSED_WALK.value)
        & audit["found_valid"]
        & audit["explicit_valid"]
        & (audit["explicit_length"] == 2 * audit["k"] - 1)
    )
    if not ok.all():
        raise UnitDimensionError(f"Möbius ladder audit failed for k = {audit.loc[~ok, 'k'].tolist()}")
    logger.info(f"Möbius ladders k = {mobius_params['start']}..{mobius_params['stop']} all obstructed")
    return audit

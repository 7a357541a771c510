"""Independent re-checking of obstruction certificates.

Validation never trusts the search that produced a certificate: every step of
the walk is re-decided with the pairwise VecNeg definition.
"""

import logging
from itertools import combinations

from .graph_core import Graph
from .vecneg import (
    DirectedEdge,
    Obstruction,
    ObstructionKind,
    VecNegGraph,
    check_directed_edge,
    vecneg_adjacent,
)

logger = logging.getLogger(__name__)


def validate_obstruction(g: Graph, cert: Obstruction) -> bool:
    """Check that ``cert`` really proves ``dim(g) >= 3``.

    Args:
        g: Graph the certificate claims something about
        cert: Certificate to check

    Returns:
        True iff every walk step is a VecNeg adjacency and the parity, closure
        and apex conditions of the certificate's kind hold

    Raises:
        InvalidDirectedEdgeError: If the walk mentions a pair that is not an edge of ``g``
    """
    walk = cert.walk
    if not walk:
        logger.warning("Certificate has an empty walk")
        return False
    for e in walk:
        check_directed_edge(g, e)

    for step, (e1, e2) in enumerate(zip(walk, walk[1:])):
        if not vecneg_adjacent(g, e1, e2):
            logger.warning(f"Certificate step {step} is not a VecNeg adjacency: {e1} -> {e2}")
            return False

    length = len(walk) - 1
    if cert.kind is ObstructionKind.ODD_CLOSED_WALK:
        return walk[0] == walk[-1] and length % 2 == 1

    if cert.apex is None or cert.a is None or cert.b is None:
        return False
    return (
        length % 2 == 0
        and cert.a != cert.b
        and g.has_edge(cert.apex, cert.a)
        and g.has_edge(cert.apex, cert.b)
        and walk[0] == (cert.apex, cert.a)
        and walk[-1] == (cert.apex, cert.b)
    )


def vecneg_edges_by_definition(g: Graph) -> set[frozenset[DirectedEdge]]:
    """All VecNeg adjacencies found by testing every pair of directed edges."""
    directed = [DirectedEdge(a, b) for a in range(g.num_vertices) for b in g.adjacency[a]]
    return {
        frozenset(pair) for pair in combinations(directed, 2) if vecneg_adjacent(g, *pair)
    }


def vecneg_oracle_mismatches(g: Graph, vn: VecNegGraph) -> set[frozenset[DirectedEdge]]:
    """Symmetric difference between ``vn`` and the pairwise definition; empty when they agree."""
    built = {frozenset(pair) for pair in vn.edge_pairs()}
    return built ^ vecneg_edges_by_definition(g)

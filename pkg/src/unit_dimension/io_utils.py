"""Text formats: edge lists for graphs, JSON for embeddings and certificates.

Edge lists are the format subcommands pass to each other through pipes. JSON
documents refer to vertices by label, never by index, so they stay valid when
a graph is reloaded with a different vertex order.
"""

import json
import logging
from collections import deque
from typing import Any, Optional, Union

import numpy as np

from .errors import EdgeListParseError, EmbeddingMismatchError, GraphStructureError
from .graph_core import Graph, Walk
from .verification import Embedding, VerificationReport
from .vecneg import DirectedEdge, Obstruction, ObstructionKind

logger = logging.getLogger(__name__)


def parse_edge_list(text: str) -> Graph:
    """Parse ``labelU labelV`` lines into a graph.

    Blank lines and lines starting with ``#`` are skipped. A line holding a
    single label declares an isolated vertex. Vertices are indexed in order of
    first appearance.

    Raises:
        EdgeListParseError: On a malformed line, a self-loop or a repeated edge
    """
    index: dict[str, int] = {}
    seen: set[frozenset[int]] = set()
    edges: list[tuple[int, int]] = []
    for line_number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = stripped.split()
        if len(tokens) == 1:
            index.setdefault(tokens[0], len(index))
            continue
        if len(tokens) != 2:
            raise EdgeListParseError(line_number, f"expected 'labelU labelV', got {stripped!r}")
        a, b = tokens
        if a == b:
            raise EdgeListParseError(line_number, f"self-loop at {a!r}")
        u = index.setdefault(a, len(index))
        v = index.setdefault(b, len(index))
        key = frozenset((u, v))
        if key in seen:
            raise EdgeListParseError(line_number, f"duplicate edge {a!r}-{b!r}")
        seen.add(key)
        edges.append((u, v))
    return Graph.from_edges(list(index), edges)


def _first_appearance_order(g: Graph) -> list[int]:
    """Breadth-first vertex order, which is also the order in which the sorted
    output below mentions the vertices; isolated vertices come last."""
    rank: dict[int, int] = {}
    for root in [v for v in range(g.num_vertices) if g.degree(v) > 0]:
        if root in rank:
            continue
        rank[root] = len(rank)
        queue = deque([root])
        while queue:
            for w in g.adjacency[queue.popleft()]:
                if w not in rank:
                    rank[w] = len(rank)
                    queue.append(w)
    for v in range(g.num_vertices):
        rank.setdefault(v, len(rank))
    return sorted(rank, key=rank.__getitem__)


def write_edge_list(g: Graph) -> str:
    """Canonical edge list: vertices renumbered in first-appearance order,
    edges sorted by that numbering, isolated vertices last.

    Parsing the output and writing it again reproduces it exactly.
    """
    order = _first_appearance_order(g)
    position = {v: i for i, v in enumerate(order)}
    pairs = sorted(tuple(sorted((position[u], position[v]))) for u, v in g.edges())
    lines = [f"{g.labels[order[a]]} {g.labels[order[b]]}" for a, b in pairs]
    lines.extend(g.labels[v] for v in order if g.degree(v) == 0)
    return "".join(f"{line}\n" for line in lines)


def labelled_edges(g: Graph) -> list[list[str]]:
    return [[g.labels[u], g.labels[v]] for u, v in g.edges()]


def embedding_to_dict(emb: Embedding, g: Optional[Graph] = None) -> dict[str, Any]:
    """JSON-ready embedding; ``g`` adds its edge list so the document stands alone."""
    doc: dict[str, Any] = {
        "dimension": emb.dimension,
        "points": {label: [float(x) for x in row] for label, row in zip(emb.labels, emb.points)},
    }
    if g is not None:
        doc["edges"] = labelled_edges(g)
    return doc


def write_embedding_json(emb: Embedding, g: Optional[Graph] = None) -> str:
    # repr of a float is its shortest exact decimal form, so coordinates survive a round trip
    return json.dumps(embedding_to_dict(emb, g), indent=2) + "\n"


def embedding_from_dict(doc: dict[str, Any]) -> tuple[Embedding, Optional[Graph]]:
    """Inverse of :func:`embedding_to_dict`.

    Raises:
        EmbeddingMismatchError: If points disagree on their number of coordinates
    """
    try:
        points = doc["points"]
    except (KeyError, TypeError):
        raise EmbeddingMismatchError("embedding document has no 'points' object") from None
    labels = list(points)
    lengths = {len(points[label]) for label in labels}
    if len(lengths) > 1:
        raise EmbeddingMismatchError(f"points have mixed dimensions {sorted(lengths)}")
    dimension = doc.get("dimension", lengths.pop() if lengths else None)
    if labels and len(points[labels[0]]) != dimension:
        raise EmbeddingMismatchError(
            f"declared dimension {dimension} but points have {len(points[labels[0]])} coordinates"
        )
    coords = np.array([points[label] for label in labels], dtype=float).reshape(len(labels), -1)
    emb = Embedding(tuple(labels), coords)

    graph = None
    if "edges" in doc:
        graph = Graph.from_labelled_edges([tuple(e) for e in doc["edges"]], vertices=labels)
    return emb, graph


def parse_embedding_json(text: str) -> tuple[Embedding, Optional[Graph]]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise EmbeddingMismatchError(f"embedding is not valid JSON: {e}") from e
    return embedding_from_dict(doc)


def report_to_dict(report: VerificationReport) -> dict[str, Any]:
    separation = report.min_pair_separation
    return {
        "ok": report.ok,
        "max_edge_residual": report.max_edge_residual,
        "min_pair_separation": separation if np.isfinite(separation) else None,
    }


def obstruction_to_dict(g: Graph, cert: Obstruction) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "kind": cert.kind.value,
        "walk": [[g.labels[e.tail], g.labels[e.head]] for e in cert.walk],
    }
    if cert.kind is ObstructionKind.EVEN_APEX_WALK:
        doc.update(apex=g.labels[cert.apex], a=g.labels[cert.a], b=g.labels[cert.b])
    return doc


def obstruction_from_dict(g: Graph, doc: dict[str, Any]) -> Obstruction:
    """Rebuild a certificate against ``g`` from its label-based form.

    Raises:
        GraphStructureError: If the document names a vertex ``g`` does not have
    """
    try:
        kind = ObstructionKind(doc["kind"])
        walk = tuple(DirectedEdge(g.index_of(t), g.index_of(h)) for t, h in doc["walk"])
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, GraphStructureError):
            raise
        raise GraphStructureError(f"malformed certificate document: {e}") from e
    apex = a = b = None
    if kind is ObstructionKind.EVEN_APEX_WALK:
        apex, a, b = (g.index_of(doc[key]) for key in ("apex", "a", "b"))
    return Obstruction(kind, walk, apex=apex, a=a, b=b)


def certificate_to_dict(g: Graph, cert: Union[Obstruction, Walk, None]) -> Optional[dict[str, Any]]:
    """Serialise either a VecNeg certificate or a witness cycle."""
    if cert is None:
        return None
    if isinstance(cert, Walk):
        return {"kind": "cycle", "walk": [g.labels[v] for v in cert.vertices]}
    return obstruction_to_dict(g, cert)


def graph_to_dict(g: Graph, **extra: Any) -> dict[str, Any]:
    return {**extra, "labels": list(g.labels), "edges": labelled_edges(g)}


def graph_from_dict(doc: dict[str, Any]) -> Graph:
    return Graph.from_labelled_edges([tuple(e) for e in doc["edges"]], vertices=doc["labels"])


def corpus_graphs(corpus: dict[str, dict[str, Any]]) -> dict[str, Graph]:
    """Graphs of a stored corpus document, keyed by name, in document order."""
    return {name: graph_from_dict(entry) for name, entry in corpus.items()}

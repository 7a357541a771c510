import json

import numpy as np
import pytest

from unit_dimension.constructions import embed_mycielski_c10, embed_mycielski_cycle_3d
from unit_dimension.errors import EdgeListParseError, EmbeddingMismatchError, GraphStructureError
from unit_dimension.families import cycle_graph, mycielski_cycle
from unit_dimension.graph_core import Graph
from unit_dimension.io_utils import (
    certificate_to_dict,
    corpus_graphs,
    graph_from_dict,
    graph_to_dict,
    obstruction_from_dict,
    parse_edge_list,
    parse_embedding_json,
    report_to_dict,
    write_edge_list,
    write_embedding_json,
)
from unit_dimension.validation import validate_obstruction
from unit_dimension.vecneg import find_obstruction, lower_bound_dim
from unit_dimension.verification import Embedding, verify_embedding


class TestEdgeList:
    def test_triangle(self):
        g = parse_edge_list("0 1\n1 2\n2 0\n")
        assert g.labels == ("0", "1", "2")
        assert g.num_edges == 3

    def test_comments_and_blank_lines(self):
        g = parse_edge_list("# a path\n\na b\n   \nb c\n")
        assert g.labels == ("a", "b", "c")
        assert g.num_edges == 2

    def test_isolated_vertex(self):
        g = parse_edge_list("a b\nc\n")
        assert g.labels == ("a", "b", "c")
        assert write_edge_list(g) == "a b\nc\n"

    def test_self_loop_reports_line(self):
        with pytest.raises(EdgeListParseError, match="line 1") as excinfo:
            parse_edge_list("a a\n")
        assert excinfo.value.line_number == 1

    def test_duplicate_edge_reports_line(self):
        with pytest.raises(EdgeListParseError, match="line 3"):
            parse_edge_list("a b\n# again\nb a\n")

    def test_malformed_line(self):
        with pytest.raises(EdgeListParseError, match="line 2"):
            parse_edge_list("a b\na b c\n")

    def test_parse_errors_are_graph_errors(self):
        with pytest.raises(GraphStructureError):
            parse_edge_list("x x\n")

    @pytest.mark.parametrize(
        "text", ["2 0\n0 1\n1 2\n", "b a\nc a\nd c\n", write_edge_list(mycielski_cycle(7))]
    )
    def test_canonical_output_is_a_fixed_point(self, text):
        once = write_edge_list(parse_edge_list(text))
        assert write_edge_list(parse_edge_list(once)) == once

    def test_canonical_output_sorts_edges(self):
        assert write_edge_list(cycle_graph(4)) == "0 1\n0 3\n1 2\n3 2\n"

    def test_rereading_keeps_vertex_order(self):
        once = write_edge_list(mycielski_cycle(7))
        reread = parse_edge_list(once)
        assert write_edge_list(reread) == once
        firsts = [line.split()[0] for line in once.splitlines()]
        assert [reread.labels[u] for u, _ in reread.edges()] == firsts


class TestEmbeddingJson:
    def test_mycielski_c10_document(self):
        g, emb = embed_mycielski_c10()
        doc = json.loads(write_embedding_json(emb))
        assert doc["dimension"] == 2
        assert len(doc["points"]) == 21
        assert all(len(p) == 2 for p in doc["points"].values())

    def test_round_trip_is_lossless(self):
        g, emb = embed_mycielski_cycle_3d(13)
        parsed, _ = parse_embedding_json(write_embedding_json(emb))
        assert parsed.labels == emb.labels
        assert np.array_equal(parsed.points, emb.points)
        assert verify_embedding(g, parsed) == verify_embedding(g, emb)

    def test_edges_travel_with_the_embedding(self):
        g, emb = embed_mycielski_c10()
        parsed, graph = parse_embedding_json(write_embedding_json(emb, g))
        assert set(graph.labels) == set(g.labels)
        assert verify_embedding(graph, parsed).ok

    def test_mixed_dimensions(self):
        text = json.dumps({"points": {"a": [0.0, 0.0], "b": [1.0, 0.0, 0.0]}})
        with pytest.raises(EmbeddingMismatchError, match="mixed"):
            parse_embedding_json(text)

    def test_declared_dimension_disagrees(self):
        text = json.dumps({"dimension": 3, "points": {"a": [0.0, 0.0]}})
        with pytest.raises(EmbeddingMismatchError, match="declared"):
            parse_embedding_json(text)

    def test_not_json(self):
        with pytest.raises(EmbeddingMismatchError):
            parse_embedding_json("{not json")

    def test_report(self, square, unit_square_points):
        report = verify_embedding(square, Embedding(square.labels, unit_square_points))
        assert report_to_dict(report) == {"ok": True, "max_edge_residual": 0.0, "min_pair_separation": 1.0}


class TestCertificates:
    @pytest.mark.parametrize("n", [3, 5, 7, 11])
    def test_obstruction_survives_parse_round_trip(self, n):
        g = mycielski_cycle(n)
        doc = json.loads(json.dumps(certificate_to_dict(g, find_obstruction(g))))
        reread = parse_edge_list(write_edge_list(g))
        assert validate_obstruction(reread, obstruction_from_dict(reread, doc))

    def test_cycle_certificate(self, square):
        doc = certificate_to_dict(square, lower_bound_dim(square).certificate)
        assert doc == {"kind": "cycle", "walk": ["3", "0", "1", "2", "3"]}

    def test_no_certificate(self):
        g = Graph.from_labelled_edges([("a", "b")])
        assert certificate_to_dict(g, lower_bound_dim(g).certificate) is None

    def test_unknown_vertex(self, square):
        with pytest.raises(GraphStructureError):
            obstruction_from_dict(square, {"kind": "odd_closed_walk", "walk": [["0", "z"]]})


class TestCorpus:
    def test_graph_dict_round_trip(self):
        g = mycielski_cycle(5)
        assert graph_from_dict(graph_to_dict(g, family="mycielski_cycle")) == g

    def test_corpus_graphs(self, triangle):
        corpus = {"cycle_3": graph_to_dict(triangle, family="cycle", size=3)}
        assert corpus_graphs(corpus) == {"cycle_3": triangle}

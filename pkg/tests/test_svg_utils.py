import re
import xml.etree.ElementTree as ET
from pathlib import Path

import numpy as np
import pytest

from unit_dimension.constructions import (
    embed_complete_simplex,
    embed_cycle_polygon,
    embed_mycielski_c10,
    embed_mycielski_cycle_3d,
)
from unit_dimension.errors import UnsupportedDimensionError
from unit_dimension.families import complete_graph, cycle_graph, path_graph
from unit_dimension.graph_core import Graph
from unit_dimension.svg_utils import CANVAS_SIZE, fit_to_canvas, project_to_page, render_svg
from unit_dimension.verification import Embedding

SVG_NS = "{http://www.w3.org/2000/svg}"
GOLDEN = Path(__file__).parent / "data"


def _circles(svg: str) -> np.ndarray:
    root = ET.fromstring(svg.split("\n", 2)[2])
    return np.array([
        [float(c.get("cx")), float(c.get("cy"))] for c in root.iter(f"{SVG_NS}circle")
    ])


class TestRenderSvg:
    def test_hexagon(self):
        svg = render_svg(cycle_graph(6), embed_cycle_polygon(6))
        root = ET.fromstring(svg.split("\n", 2)[2])
        assert root.get("viewBox") == "0 0 600 600"
        assert len(list(root.iter(f"{SVG_NS}line"))) == 6
        assert len(list(root.iter(f"{SVG_NS}circle"))) == 6
        assert [t.text for t in root.iter(f"{SVG_NS}text")] == ["0", "1", "2", "3", "4", "5"]

    def test_hexagon_is_regular_on_the_canvas(self):
        centres = _circles(render_svg(cycle_graph(6), embed_cycle_polygon(6)))
        radii = np.linalg.norm(centres - centres.mean(axis=0), axis=1)
        assert np.allclose(radii, radii[0], atol=1e-2)

    def test_matches_golden_file(self):
        g = path_graph(2)
        svg = render_svg(g, Embedding(g.labels, np.array([[0.0, 0.0], [1.0, 0.0]])))
        assert svg == (GOLDEN / "unit_segment.svg").read_text(encoding="utf-8")

    def test_byte_identical(self):
        g, emb = embed_mycielski_c10()
        assert render_svg(g, emb) == render_svg(g, emb)

    def test_mycielski_c10_fills_the_margin_box(self):
        g, emb = embed_mycielski_c10()
        centres = _circles(render_svg(g, emb))
        assert centres.min() == pytest.approx(30.0, abs=1e-3)
        assert centres.max() == pytest.approx(570.0, abs=1e-3)
        # apex sits in the middle of both decagons
        assert centres[20] == pytest.approx([300.0, 300.0], abs=1e-3)

    def test_three_dimensional_embedding(self):
        g, emb = embed_mycielski_cycle_3d(7)
        svg = render_svg(g, emb)
        assert len(re.findall("<circle", svg)) == 15
        assert len(re.findall("<line", svg)) == 28

    def test_four_dimensional_embedding_is_rejected(self):
        with pytest.raises(UnsupportedDimensionError):
            render_svg(complete_graph(5), embed_complete_simplex(5))

    def test_labels_are_escaped(self):
        g = Graph(("<a>", "b&c", "d"), cycle_graph(3).adjacency)
        svg = render_svg(g, Embedding(g.labels, embed_cycle_polygon(3).points))
        assert "&lt;a&gt;" in svg and "b&amp;c" in svg


class TestProjection:
    def test_planar_points_unchanged(self):
        points = np.array([[1.0, 2.0], [3.0, 4.0]])
        assert np.array_equal(project_to_page(points), points)

    def test_axonometric(self):
        flat = project_to_page(np.array([[1.0, 2.0, 3.0]]))
        assert flat[0] == pytest.approx([1.0 + 0.45 * 2.0, 3.0 + 0.25 * 2.0])

    def test_single_point_is_centred(self):
        mapped = fit_to_canvas(np.zeros((1, 2)))
        assert mapped[0] == pytest.approx([CANVAS_SIZE / 2, CANVAS_SIZE / 2])

    def test_y_axis_points_up(self):
        mapped = fit_to_canvas(np.array([[0.0, 0.0], [0.0, 1.0]]))
        assert mapped[1, 1] < mapped[0, 1]

"""Deterministic SVG drawings of embedded graphs.

Coordinates are printed with a fixed number of decimals and elements are
emitted in vertex/edge index order, so equal inputs give byte-identical files.
"""

import logging
from xml.sax.saxutils import escape

import numpy as np

from .errors import UnsupportedDimensionError
from .graph_core import Graph
from .verification import Embedding

logger = logging.getLogger(__name__)

CANVAS_SIZE = 600
MARGIN_FRACTION = 0.05
VERTEX_RADIUS = 3

# Axonometric flattening of (x, y, z) onto the page
PROJECTION_3D = np.array([[1.0, 0.0], [0.45, 0.25], [0.0, 1.0]])


class SvgCanvas:
    def __init__(self, width: int, height: int):
        self.width = width
        self.height = height
        self.svg = (
            '<?xml version="1.0" standalone="no"?>\n'
            '<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN" '
            '"http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">\n'
            f'<svg version="1.1" width="{width}" height="{height}" '
            f'viewBox="0 0 {width} {height}" xmlns="http://www.w3.org/2000/svg">\n'
            f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>\n'
        )

    def group_start(self, css_class: str) -> None:
        self.svg += f'<g class="{css_class}">\n'

    def group_end(self) -> None:
        self.svg += "</g>\n"

    def line(self, x1: float, y1: float, x2: float, y2: float) -> None:
        self.svg += (
            f'<line x1="{x1:.3f}" y1="{y1:.3f}" x2="{x2:.3f}" y2="{y2:.3f}" '
            'stroke="black" stroke-width="1"/>\n'
        )

    def circle(self, x: float, y: float, r: float) -> None:
        self.svg += f'<circle cx="{x:.3f}" cy="{y:.3f}" r="{r}" fill="black"/>\n'

    def text(self, x: float, y: float, string: str) -> None:
        self.svg += (
            f'<text x="{x:.3f}" y="{y:.3f}" font-family="sans-serif" '
            f'font-size="10">{escape(string)}</text>\n'
        )

    def get_svg(self) -> str:
        return f"{self.svg}</svg>\n"


def project_to_page(points: np.ndarray) -> np.ndarray:
    """Flatten 2D or 3D coordinates to the drawing plane.

    Raises:
        UnsupportedDimensionError: For any other dimension
    """
    m = points.shape[1]
    if m == 2:
        return points
    if m == 3:
        return points @ PROJECTION_3D
    raise UnsupportedDimensionError(f"can only draw 2D or 3D embeddings, got dimension {m}")


def fit_to_canvas(flat: np.ndarray, size: int = CANVAS_SIZE) -> np.ndarray:
    """Map page coordinates into the canvas with a uniform scale and y pointing up."""
    margin = MARGIN_FRACTION * size
    lo = flat.min(axis=0)
    span = flat.max(axis=0) - lo
    extent = float(span.max())
    scale = (size - 2 * margin) / extent if extent > 0 else 0.0
    # centre the shorter axis
    offset = margin + (size - 2 * margin - span * scale) / 2
    x = offset[0] + (flat[:, 0] - lo[0]) * scale
    y = size - (offset[1] + (flat[:, 1] - lo[1]) * scale)
    return np.column_stack([x, y])


def render_svg(g: Graph, emb: Embedding) -> str:
    """Draw ``g`` at the positions of ``emb``: edges first, then vertices with labels."""
    points = emb.aligned_to(g)
    canvas_points = fit_to_canvas(project_to_page(points))

    canvas = SvgCanvas(CANVAS_SIZE, CANVAS_SIZE)
    canvas.group_start("edges")
    for u, v in g.edges():
        (x1, y1), (x2, y2) = canvas_points[u], canvas_points[v]
        canvas.line(x1, y1, x2, y2)
    canvas.group_end()

    canvas.group_start("vertices")
    for label, (x, y) in zip(g.labels, canvas_points):
        canvas.circle(x, y, VERTEX_RADIUS)
        canvas.text(x + VERTEX_RADIUS + 1, y - VERTEX_RADIUS - 1, label)
    canvas.group_end()

    logger.debug(f"Rendered {g.num_vertices} vertices, {g.num_edges} edges")
    return canvas.get_svg()

"""Text and SVG renderings of a triangle window."""

from __future__ import annotations

import json
import xml.etree.ElementTree as ET
from dataclasses import dataclass

from .geometry import ConfigSpec, PointSet
from .triangle import TriangleWindow, window

FORMATS = ("ascii", "csv", "json", "svg")


@dataclass
class RenderOptions:
    """``rows`` is the last row drawn; rows ``0 .. rows`` are rendered."""

    rows: int
    format: str = "ascii"
    highlight: ConfigSpec | None = None
    cell: int = 40

    def __post_init__(self):
        if self.rows < 1:
            raise ValueError("rows must be at least 1")
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}; choose from {', '.join(FORMATS)}")


def _marked(points: PointSet | None) -> set[tuple[int, int]]:
    if points is None:
        return set()
    return {(p.r, p.k) for p in points.coords}


def to_ascii(win: TriangleWindow, points: PointSet | None = None) -> str:
    marked = _marked(points)
    width = max(len(str(v)) for values in win.rows for v in values)
    if marked:
        width += 2
    if (width + 1) % 2:
        width += 1  # half a cell must be a whole number of columns
    half = (width + 1) // 2
    lines = []
    for r, values in win:
        cells = []
        for k, v in enumerate(values):
            text = f"[{v}]" if (r, k) in marked else str(v)
            cells.append(text.center(width))
        indent = " " * ((win.last_row - r) * half)
        lines.append((indent + " ".join(cells)).rstrip())
    return "\n".join(lines) + "\n"


def to_csv(win: TriangleWindow) -> str:
    return "".join(",".join(str(v) for v in values) + "\n" for values in win.rows)


def to_json(win: TriangleWindow, points: PointSet | None = None) -> str:
    doc = {
        "first_row": win.first_row,
        "last_row": win.last_row,
        "rows": [[str(v) for v in values] for values in win.rows],
    }
    if points is not None:
        doc["highlight"] = points.to_dict()
    return json.dumps(doc, indent=2) + "\n"


def to_svg(win: TriangleWindow, points: PointSet | None = None, cell: int = 40) -> str:
    """Entry ``(r, k)`` sits at ``x = (k - r/2) * cell``, ``y = r * cell``."""
    marked = _marked(points)
    span = win.last_row - win.first_row
    width = (win.last_row + 2) * cell
    height = (span + 2) * cell
    x0 = width / 2
    y0 = cell - win.first_row * cell

    def pos(r, k):
        return x0 + (k - r / 2) * cell, y0 + r * cell

    svg = ET.Element("svg", xmlns="http://www.w3.org/2000/svg", width=str(width), height=str(height),
                     viewBox=f"0 0 {width} {height}", **{"font-family": "monospace"})
    ET.SubElement(svg, "rect", width="100%", height="100%", fill="white")
    if points is not None and len(points) > 1:
        path = " ".join("%g,%g" % pos(p.r, p.k) for p in points.coords if win.first_row <= p.r <= win.last_row)
        ET.SubElement(svg, "polyline", points=path, fill="none", stroke="#d62728",
                      **{"stroke-width": "2", "stroke-opacity": "0.5", "class": "config-path"})
    font = max(6, cell // 3)
    for r, values in win:
        for k, v in enumerate(values):
            x, y = pos(r, k)
            hot = (r, k) in marked
            g = ET.SubElement(svg, "g", **{"class": "entry highlight" if hot else "entry",
                                           "data-r": str(r), "data-k": str(k), "data-value": str(v)})
            ET.SubElement(g, "circle", cx="%g" % x, cy="%g" % y, r=str(cell * 0.45),
                          fill="#ffd27f" if hot else "#f2f2f2",
                          stroke="#d62728" if hot else "#999999")
            label = ET.SubElement(g, "text", x="%g" % x, y="%g" % y, **{
                "text-anchor": "middle", "dominant-baseline": "central",
                "font-size": str(font if len(str(v)) < 5 else max(5, font * 4 // len(str(v))))})
            label.text = str(v)
    return ET.tostring(svg, encoding="unicode") + "\n"


def render(opts: RenderOptions) -> str:
    win = window(0, opts.rows)
    points = opts.highlight.materialize() if opts.highlight is not None else None
    if opts.format == "ascii":
        return to_ascii(win, points)
    if opts.format == "csv":
        return to_csv(win)
    if opts.format == "json":
        return to_json(win, points)
    return to_svg(win, points, opts.cell)

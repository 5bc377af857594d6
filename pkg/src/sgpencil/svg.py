"""SVG drawings of support graphs in the complex line (vertex ``y_a`` at ``(re y, im y)``)."""

from __future__ import annotations

import xml.etree.ElementTree as ET

SVG_NS = "http://www.w3.org/2000/svg"


def _box(points, size, margin):
    xs = [p.real for p in points] or [0.0]
    ys = [p.imag for p in points] or [0.0]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    span = max(x1 - x0, y1 - y0, 1e-9)
    scale = (size - 2 * margin) / span

    def to_px(z):
        # SVG y grows downward
        return margin + (z.real - x0) * scale, size - margin - (z.imag - y0) * scale

    return to_px


def graph_svg(g, size=400, margin=30, title=None):
    """Return SVG 1.1 text: one circle per vertex, one line per edge."""
    pts = [complex(y) for y in g.ys]
    to_px = _box(pts, size, margin)
    root = ET.Element("svg", {
        "xmlns": SVG_NS, "version": "1.1",
        "width": str(size), "height": str(size),
        "viewBox": f"0 0 {size} {size}",
    })
    if title:
        ET.SubElement(root, "title").text = title
    edges = ET.SubElement(root, "g", {"class": "edges", "stroke": "#2a7d2a", "stroke-width": "2"})
    for e in g.edges:
        (xa, ya), (xb, yb) = to_px(pts[e.a]), to_px(pts[e.b])
        ET.SubElement(edges, "line", {
            "class": "edge", "x1": f"{xa:.3f}", "y1": f"{ya:.3f}", "x2": f"{xb:.3f}", "y2": f"{yb:.3f}",
        })
    verts = ET.SubElement(root, "g", {"class": "vertices", "fill": "#1f3b73"})
    for a, z in enumerate(pts):
        cx, cy = to_px(z)
        ET.SubElement(verts, "circle", {"class": "vertex", "cx": f"{cx:.3f}", "cy": f"{cy:.3f}", "r": "5"})
        label = ET.SubElement(verts, "text", {"x": f"{cx + 7:.3f}", "y": f"{cy - 7:.3f}", "font-size": "12"})
        label.text = f"y{a + 1}"
    return ET.tostring(root, encoding="unicode") + "\n"

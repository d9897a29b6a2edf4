"""SVG pictures of rank-2 alcoves coloured by Shi-variety component."""
from __future__ import annotations

import math
import xml.etree.ElementTree as ET
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .affine_weyl import AffineElement, AffineWeylGroup, affine_weyl_group
from .root_system import RootSystem
from .variety import enumerate_admitted, lambda_array

PALETTE = (
    "#f4a6c6", "#f7e07b", "#8ec5f0", "#ffffff", "#b5e3a1", "#d7b5f0",
    "#f7b87b", "#9de0d8", "#e89a9a", "#c9c9c9", "#f0d0a0", "#a0b8f0",
)
SVG_NS = "http://www.w3.org/2000/svg"

Point = Tuple[float, float]


class PlotError(ValueError):
    pass


def embedding(rs: RootSystem) -> Tuple[Point, Point]:
    """Plane vectors for the two simple roots with the right lengths and angle."""
    if rs.rank != 2:
        raise PlotError(f"plots need a rank-2 type, got {rs.label}")
    a, b = (1, 0), (0, 1)
    la = math.sqrt(rs.inner(a, a))
    lb = math.sqrt(rs.inner(b, b))
    cos = float(rs.inner(a, b)) / (la * lb)
    angle = math.acos(cos)
    return (la, 0.0), (lb * math.cos(angle), lb * math.sin(angle))


def fundamental_alcove(group: AffineWeylGroup) -> List[Tuple[Fraction, ...]]:
    """Vertices of ``A_e`` in simple-root coordinates: ``0`` and ``omega_i / d_i``."""
    rs = group.rs
    d = rs.coroot_coordinates(group.theta_short)
    verts = [tuple(Fraction(0) for _ in range(rs.rank))]
    for w, di in zip(rs.fundamental_weights(), d):
        verts.append(tuple(c / di for c in w))
    return verts


def alcove_vertices(group: AffineWeylGroup, w: AffineElement) -> List[Tuple[Fraction, ...]]:
    """``A_w = w(A_e)``, vertex by vertex: ``v -> x + u v``."""
    out = []
    for v in fundamental_alcove(group):
        uv = [sum(row[j] * v[j] for j in range(len(v))) for row in w.finite.matrix]
        out.append(tuple(x + c for x, c in zip(w.translation, uv)))
    return out


def _to_plane(basis: Tuple[Point, Point], c: Sequence) -> Point:
    (ax, ay), (bx, by) = basis
    return (float(c[0]) * ax + float(c[1]) * bx, float(c[0]) * ay + float(c[1]) * by)


def colour_map(vectors: Sequence[Tuple[int, ...]]) -> Dict[Tuple[int, ...], str]:
    return {v: PALETTE[i % len(PALETTE)] for i, v in enumerate(sorted(vectors))}


def render(
    rs: RootSystem,
    radius: int = 6,
    scale: float = 60.0,
    show_parallelepiped: bool = True,
) -> ET.Element:
    """SVG element showing every alcove of length ``<= radius``."""
    group = affine_weyl_group(rs)
    basis = embedding(rs)
    table = enumerate_admitted(rs)
    colours = colour_map(table.vectors)

    found = group.ball(radius)
    lams = lambda_array(rs, found.shi)
    polys = []
    for i in range(len(found)):
        pts = [_to_plane(basis, v) for v in alcove_vertices(group, found.element(i))]
        polys.append((pts, tuple(int(t) for t in lams[i])))

    xs = [p[0] for pts, _ in polys for p in pts]
    ys = [p[1] for pts, _ in polys for p in pts]
    pad = 0.5
    x0, x1 = min(xs) - pad, max(xs) + pad
    y0, y1 = min(ys) - pad, max(ys) + pad
    legend_h = 22 * len(colours) + 20
    width = (x1 - x0) * scale
    height = (y1 - y0) * scale + legend_h

    def px(p: Point) -> str:
        return f"{(p[0] - x0) * scale:.2f},{(y1 - p[1]) * scale:.2f}"

    svg = ET.Element(
        "svg",
        xmlns=SVG_NS,
        version="1.1",
        width=f"{width:.0f}",
        height=f"{height:.0f}",
        viewBox=f"0 0 {width:.2f} {height:.2f}",
    )
    ET.SubElement(svg, "title").text = f"Alcoves of {rs.label} by component (length <= {radius})"
    tiles = ET.SubElement(svg, "g", {"stroke": "#333333", "stroke-width": "0.8"})
    for pts, lam in polys:
        poly = ET.SubElement(
            tiles, "polygon", points=" ".join(px(p) for p in pts), fill=colours[lam]
        )
        poly.set("data-lambda", ",".join(map(str, lam)))

    if show_parallelepiped:
        corners = [(0, 0)] + list(rs.fundamental_weights())
        w1, w2 = corners[1], corners[2]
        quad = [(0, 0), w1, tuple(a + b for a, b in zip(w1, w2)), w2]
        ET.SubElement(
            svg, "polygon",
            points=" ".join(px(_to_plane(basis, q)) for q in quad),
            fill="none", stroke="#000000", **{"stroke-width": "2.5", "stroke-dasharray": "6,4"},
        )

    legend = ET.SubElement(svg, "g", {"font-family": "monospace", "font-size": "13"})
    top = (y1 - y0) * scale + 10
    for i, (lam, colour) in enumerate(sorted(colours.items())):
        y = top + 22 * i
        ET.SubElement(legend, "rect", x="10", y=f"{y:.1f}", width="16", height="16",
                      fill=colour, stroke="#333333")
        ET.SubElement(legend, "text", x="32", y=f"{y + 13:.1f}").text = str(lam)
    return svg


def to_string(svg: ET.Element) -> str:
    ET.register_namespace("", SVG_NS)
    return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(svg, encoding="unicode")


def write_svg(rs: RootSystem, path: str, radius: int = 6) -> int:
    """Write the picture to ``path``; returns the number of components drawn."""
    svg = render(rs, radius)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(to_string(svg))
    return len({p.get("data-lambda") for p in svg.iter("polygon") if p.get("data-lambda")})

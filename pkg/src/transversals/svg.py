"""SVG rendering of the dual plane for coplanar scenes.

Draws the 2n endpoint dual lines, shades the feasible stabber region
between the two envelopes, and marks isolated stabbers.  Rendering uses
floats (display only; nothing here feeds back into any predicate).
"""

from __future__ import annotations

from fractions import Fraction

from .core import point_in_plane, plane_through_points, v_cross, v_is_zero, v_sub
from .errors import GeometryError
from .intervals import INF
from .planar import Frame2, eval_envelope, planar_components
from .scalars import rat


def _common_plane_of_scene(segments):
    pts = []
    for s in segments:
        pts.extend([s.a, s.b])
    base = pts[0]
    second = next((p for p in pts if p != base), None)
    if second is None:
        raise GeometryError("scene is a single point; nothing to draw")
    third = None
    for p in pts:
        if not v_is_zero(v_cross(v_sub(second, base), v_sub(p, base))):
            third = p
            break
    if third is None:
        raise GeometryError("collinear scene has no dual picture")
    plane = plane_through_points(base, second, third)
    for p in pts:
        if not point_in_plane(p, plane):
            raise GeometryError("dualsvg needs a coplanar scene")
    return plane


def render_dual_svg(segments, width=640, height=640):
    """SVG text of the dual-plane picture of a coplanar scene."""
    plane = _common_plane_of_scene(segments)
    frame = Frame2(plane)
    segs2 = [frame.seg_to2d(s) for s in segments]
    res = planar_components(segs2)

    duals = []
    for s in segs2:
        for e in (s.a, s.b):
            duals.append((float(-e[0]), float(e[1])))

    xs, ys = [0.0], [0.0]
    for m1, c1 in duals:
        for m2, c2 in duals:
            if m1 == m2:
                continue
            a = (c2 - c1) / (m1 - m2)
            xs.append(a)
            ys.append(m1 * a + c1)
    pad_x = max(1.0, 0.2 * (max(xs) - min(xs)))
    pad_y = max(1.0, 0.2 * (max(ys) - min(ys)))
    x0, x1 = min(xs) - pad_x, max(xs) + pad_x
    y0, y1 = min(ys) - pad_y, max(ys) + pad_y

    def sx(a):
        return (a - x0) / (x1 - x0) * width

    def sy(b):
        return height - (b - y0) / (y1 - y0) * height

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]

    def band(a_lo, a_hi, color):
        steps = 24
        top, bottom = [], []
        for i in range(steps + 1):
            a = a_lo + (a_hi - a_lo) * i / steps
            f = Fraction(a).limit_denominator(10**6)
            ar = rat(f.numerator, f.denominator)
            lo = float(eval_envelope(res.env_lo, ar))
            hi = float(eval_envelope(res.env_hi, ar))
            if lo > hi:
                continue
            top.append((sx(a), sy(hi)))
            bottom.append((sx(a), sy(lo)))
        if not top:
            return
        pts = top + bottom[::-1]
        path = " ".join(f"{px:.2f},{py:.2f}" for px, py in pts)
        parts.append(f'<polygon points="{path}" fill="{color}" opacity="0.5"/>')

    colors = ["#7fbf7f", "#7f9fdf", "#df9f7f", "#bf7fbf", "#9fbf3f", "#3fbfbf"]
    for idx, comp in enumerate(res.components):
        color = colors[idx % len(colors)]
        arc = comp.arc
        if comp.kind == "slopes":
            lo = float(arc.lo) if arc.lo is not None else x0
            hi = float(arc.hi) if arc.hi is not None else x1
            if arc.is_point:
                a, b = float(arc.lo), float(eval_envelope(res.env_lo, arc.lo))
                parts.append(
                    f'<circle cx="{sx(a):.2f}" cy="{sy(b):.2f}" r="5" fill="{color}"/>'
                )
            else:
                band(max(lo, x0), min(hi, x1), color)
        else:  # circle chart: slope set wrapping through infinity
            if arc.kind == "full":
                band(x0, x1, color)
            elif arc.kind == "point":
                continue  # vertical-only component: invisible in this chart
            else:
                if arc.start is not INF:
                    band(max(float(arc.start), x0), x1, color)
                if arc.end is not INF:
                    band(x0, min(float(arc.end), x1), color)

    for m, c in duals:
        b_left = m * x0 + c
        b_right = m * x1 + c
        parts.append(
            f'<line x1="{sx(x0):.2f}" y1="{sy(b_left):.2f}" '
            f'x2="{sx(x1):.2f}" y2="{sy(b_right):.2f}" '
            f'stroke="#444" stroke-width="1"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"

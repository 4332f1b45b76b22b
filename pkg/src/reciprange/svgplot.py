"""Deterministic SVG rendering of curves and range regions.

Fixed 800x600 viewport, auto-fit with a 10% margin, fixed-precision number
formatting: identical inputs produce byte-identical files.
"""

from __future__ import annotations


WIDTH, HEIGHT = 800, 600
MARGIN = 0.10

CURVE_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b", "#e377c2")


def _fmt(v: float) -> str:
    return f"{v:.4f}"


class _Frame:
    def __init__(self, points):
        xs = [p.real for p in points] or [0.0]
        ys = [p.imag for p in points] or [0.0]
        x0, x1 = min(xs), max(xs)
        y0, y1 = min(ys), max(ys)
        span = max(x1 - x0, y1 - y0, 1e-6)
        pad = MARGIN * span
        x0, x1 = x0 - pad, x1 + pad
        y0, y1 = y0 - pad, y1 + pad
        sx = WIDTH / (x1 - x0)
        sy = HEIGHT / (y1 - y0)
        self.scale = min(sx, sy)
        self.cx = (x0 + x1) / 2
        self.cy = (y0 + y1) / 2

    def to_px(self, z):
        x = WIDTH / 2 + (z.real - self.cx) * self.scale
        y = HEIGHT / 2 - (z.imag - self.cy) * self.scale
        return x, y


def _polyline(frame, pts, color, width=1.5, close=True):
    coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in (frame.to_px(p) for p in pts))
    tag = "polygon" if close else "polyline"
    return f'<{tag} points="{coords}" fill="none" stroke="{color}" stroke-width="{width}"/>'


def _axes(frame):
    half_w = WIDTH / (2 * frame.scale)
    half_h = HEIGHT / (2 * frame.scale)
    out = []
    for a, b in ((complex(frame.cx - half_w, 0), complex(frame.cx + half_w, 0)),
                 (complex(0, frame.cy - half_h), complex(0, frame.cy + half_h))):
        (x1, y1), (x2, y2) = frame.to_px(a), frame.to_px(b)
        out.append(
            f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
            f'stroke="#999999" stroke-width="0.8"/>'
        )
    return out


def _marker(frame, z, color, r=3.0):
    x, y = frame.to_px(z)
    return f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(r)}" fill="{color}"/>'


def _document(body):
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">'
    )
    return head + "\n" + "\n".join(body) + "\n</svg>\n"


def render_curve(components, foci=(), region=None) -> str:
    """Curve components as polylines with axes and focus markers.

    ``region`` optionally overlays a shaded convex region (a ConvexRegion).
    """
    pts = [p for c in components for p in c["points"]]
    pts += [complex(f) for f in foci]
    if region is not None:
        pts += list(region.points)
    frame = _Frame(pts)
    body = []
    body.extend(_axes(frame))
    if region is not None and region.points:
        if region.kind == "POLYGON":
            coords = " ".join(
                f"{_fmt(x)},{_fmt(y)}" for x, y in (frame.to_px(p) for p in region.points)
            )
            body.append(f'<polygon points="{coords}" fill="#ffbb78" fill-opacity="0.55" stroke="#ff7f0e" stroke-width="1.0"/>')
        elif region.kind == "SEGMENT":
            (x1, y1), (x2, y2) = (frame.to_px(p) for p in region.points)
            body.append(
                f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
                f'stroke="#ff7f0e" stroke-width="3.0"/>'
            )
        elif region.kind == "POINT":
            body.append(_marker(frame, region.points[0], "#ff7f0e", 4.0))
    ci = 0
    for comp in components:
        if comp["kind"] == "point":
            body.append(_marker(frame, comp["points"][0], "#000000", 2.5))
            continue
        body.append(_polyline(frame, list(comp["points"]), CURVE_COLORS[ci % len(CURVE_COLORS)]))
        ci += 1
    for f in foci:
        body.append(_marker(frame, complex(f), "#444444", 2.0))
    return _document(body)

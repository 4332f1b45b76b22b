"""Convex regions in the complex plane: half-plane clipping, hulls, Hausdorff.

Regions are polygons with complex vertices (counterclockwise), demoted to
SEGMENT / POINT / EMPTY when the clipped area or width collapses.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

AREA_EPS = 1e-14
WIDTH_EPS = 1e-8

POLYGON = "POLYGON"
SEGMENT = "SEGMENT"
POINT = "POINT"
EMPTY = "EMPTY"


@dataclass(frozen=True)
class HalfPlane:
    """{z : Re(e^{i theta} z) <= bound}."""

    theta: float
    bound: float


@dataclass(frozen=True)
class ConvexRegion:
    kind: str
    points: tuple  # CCW vertices (POLYGON), endpoints (SEGMENT), single point (POINT)

    @staticmethod
    def empty():
        return ConvexRegion(EMPTY, ())

    def to_json_dict(self):
        return {"kind": self.kind, "points": [[z.real, z.imag] for z in self.points]}


def polygon_area(pts) -> float:
    n = len(pts)
    s = 0.0
    for i in range(n):
        a, b = pts[i], pts[(i + 1) % n]
        s += a.real * b.imag - b.real * a.imag
    return s / 2


def _diameter_pair(pts):
    arr = np.asarray(pts, dtype=complex)
    d = np.abs(arr[:, None] - arr[None, :])
    i, j = np.unravel_index(np.argmax(d), d.shape)
    return float(d[i, j]), arr[i], arr[j]


def polygon_width(pts) -> float:
    """Minimal extent over directions (rotating-calipers width of the hull)."""
    arr = np.asarray(pts, dtype=complex)
    n = len(arr)
    if n < 3:
        return 0.0
    best = math.inf
    for i in range(n):
        d = arr[(i + 1) % n] - arr[i]
        L = abs(d)
        if L == 0:
            continue
        normal = d / L * 1j
        proj = (arr - arr[i]) * np.conj(normal)
        best = min(best, float(np.max(proj.real) - np.min(proj.real)))
    return 0.0 if best is math.inf else best


def region_from_vertices(pts) -> ConvexRegion:
    """Classify a clipped vertex loop into POLYGON/SEGMENT/POINT/EMPTY.

    Demotion: diameter below WIDTH_EPS collapses to POINT; a width below
    WIDTH_EPS or an area below AREA_EPS collapses to SEGMENT.
    """
    pts = [complex(p) for p in pts]
    if not pts:
        return ConvexRegion.empty()
    if len(pts) == 1:
        return ConvexRegion(POINT, (pts[0],))
    diam, a, b = _diameter_pair(pts)
    if diam < WIDTH_EPS:
        c = sum(pts) / len(pts)
        return ConvexRegion(POINT, (c,))
    if len(pts) == 2 or abs(polygon_area(pts)) < AREA_EPS or polygon_width(pts) < WIDTH_EPS:
        return ConvexRegion(SEGMENT, (complex(a), complex(b)))
    if polygon_area(pts) < 0:
        pts = pts[::-1]
    return ConvexRegion(POLYGON, tuple(pts))


def _clip_array(arr: np.ndarray, theta: float, bound: float) -> np.ndarray:
    """Sutherland-Hodgman step on a complex vertex array."""
    w = cmath.exp(1j * theta)
    vals = (w * arr).real - bound
    keep = vals <= 0
    if keep.all():
        return arr
    if not keep.any():
        return arr[:0]
    vn = np.roll(vals, -1)
    crossing = keep != (vn <= 0)
    denom = np.where(vals == vn, 1.0, vals - vn)
    cuts = arr + (vals / denom) * (np.roll(arr, -1) - arr)
    counts = keep.astype(np.int64) + crossing.astype(np.int64)
    starts = np.cumsum(counts) - counts
    out = np.empty(int(counts.sum()), dtype=complex)
    out[starts[keep]] = arr[keep]
    out[(starts + keep.astype(np.int64))[crossing]] = cuts[crossing]
    return out


def clip_by_halfplane(pts, theta, bound):
    """Sutherland-Hodgman step: keep Re(e^{i theta} z) <= bound."""
    if len(pts) == 0:
        return []
    return list(_clip_array(np.asarray(pts, dtype=complex), theta, bound))


def halfplane_intersection(halfplanes, box_halfwidth) -> ConvexRegion:
    """Incremental clipping of a centered square by each half-plane."""
    r = float(box_halfwidth)
    pts = np.array([complex(-r, -r), complex(r, -r), complex(r, r), complex(-r, r)])
    for hp in halfplanes:
        pts = _clip_array(pts, hp.theta, hp.bound)
        if len(pts) == 0:
            return ConvexRegion.empty()
    return region_from_vertices(list(pts))


def convex_hull(points):
    """Andrew monotone chain; returns CCW vertices without the closing repeat."""
    pts = sorted(set((p.real, p.imag) for p in points))
    if len(pts) == 1:
        return [complex(*pts[0])]

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    return [complex(*p) for p in hull]


def hull_region(points) -> ConvexRegion:
    return region_from_vertices(convex_hull(points))


def _halfplane_through(point, outward) -> HalfPlane:
    """Half-plane with the given boundary point and outward normal direction.

    In the convention {z : Re(e^{i theta} z) <= bound} the outward direction is
    e^{-i theta}, so theta = -phase(outward).
    """
    th = -cmath.phase(outward)
    return HalfPlane(th, (cmath.exp(1j * th) * point).real)


def region_halfplanes(region: ConvexRegion):
    """A finite half-plane representation of a POLYGON or SEGMENT region."""
    out = []
    if region.kind == POLYGON:
        pts = region.points
        n = len(pts)
        for i in range(n):
            p, q = pts[i], pts[(i + 1) % n]
            d = q - p
            if abs(d) == 0:
                continue
            out.append(_halfplane_through(p, -1j * d))  # CCW edge: outward = d rotated -90deg
    elif region.kind == SEGMENT:
        p, q = region.points
        d = q - p
        out.append(_halfplane_through(p, 1j * d))
        out.append(_halfplane_through(p, -1j * d))
        out.append(_halfplane_through(q, d))
        out.append(_halfplane_through(p, -d))
    else:
        raise ValueError(f"no half-plane form for kind {region.kind}")
    return out


def _clip_segment(p, q, halfplanes):
    t0, t1 = 0.0, 1.0
    d = q - p
    for hp in halfplanes:
        w = cmath.exp(1j * hp.theta)
        vp = (w * p).real - hp.bound
        vd = (w * d).real
        if abs(vd) < 1e-300:
            if vp > 1e-12:
                return None
            continue
        t = -vp / vd
        if vd > 0:
            t1 = min(t1, t)
        else:
            t0 = max(t0, t)
        if t0 > t1 + 1e-15:
            return None
    return p + t0 * d, p + t1 * d


def intersect_regions(a: ConvexRegion, b: ConvexRegion) -> ConvexRegion:
    """Intersection of two convex regions."""
    if a.kind == EMPTY or b.kind == EMPTY:
        return ConvexRegion.empty()
    if b.kind == POINT:
        return b if region_contains(a, b.points[0]) else ConvexRegion.empty()
    if a.kind == POINT:
        return a if region_contains(b, a.points[0]) else ConvexRegion.empty()
    if a.kind == SEGMENT:
        res = _clip_segment(a.points[0], a.points[1], region_halfplanes(b))
        return region_from_vertices(list(res)) if res else ConvexRegion.empty()
    if b.kind == SEGMENT:
        return intersect_regions(b, a)
    pts = list(a.points)
    for hp in region_halfplanes(b):
        pts = clip_by_halfplane(pts, hp.theta, hp.bound)
        if not pts:
            return ConvexRegion.empty()
    return region_from_vertices(pts)


def _point_segment_distance(z, a, b):
    d = b - a
    L2 = abs(d) ** 2
    if L2 == 0:
        return abs(z - a)
    t = max(0.0, min(1.0, ((z - a).real * d.real + (z - a).imag * d.imag) / L2))
    return abs(z - (a + t * d))


def region_contains(region: ConvexRegion, z, tol=1e-12) -> bool:
    if region.kind == EMPTY:
        return False
    if region.kind == POINT:
        return abs(z - region.points[0]) <= max(tol, 1e-12)
    if region.kind == SEGMENT:
        return _point_segment_distance(z, *region.points) <= max(tol, 1e-12)
    pts = region.points
    n = len(pts)
    for i in range(n):
        a, b = pts[i], pts[(i + 1) % n]
        cr = (b - a).real * (z - a).imag - (b - a).imag * (z - a).real
        if cr < -tol * max(1.0, abs(b - a)):
            return False
    return True


def distances_to_region(zs, region: ConvexRegion) -> np.ndarray:
    """Distances from an array of points to a convex region (vectorized)."""
    zs = np.asarray(zs, dtype=complex).ravel()
    if region.kind == EMPTY:
        return np.full(zs.shape, math.inf)
    if region.kind == POINT:
        return np.abs(zs - region.points[0])
    pts = np.asarray(region.points, dtype=complex)
    if region.kind == SEGMENT:
        a, b = pts
        seg = np.array([a, b])
        edges_a, edges_b = seg[:1], seg[1:]
    else:
        edges_a = pts
        edges_b = np.roll(pts, -1)
    d = edges_b - edges_a  # (E,)
    L2 = np.abs(d) ** 2
    L2 = np.where(L2 == 0, 1.0, L2)
    w = zs[:, None] - edges_a[None, :]  # (N, E)
    t = np.clip((w.real * d.real[None, :] + w.imag * d.imag[None, :]) / L2[None, :], 0.0, 1.0)
    proj = edges_a[None, :] + t * d[None, :]
    dist = np.min(np.abs(zs[:, None] - proj), axis=1)
    if region.kind == POLYGON:
        # points inside are at distance zero: all edge cross-products >= 0 (CCW)
        cross = d.real[None, :] * w.imag - d.imag[None, :] * w.real
        inside = np.all(cross >= -1e-12 * np.maximum(1.0, np.abs(d))[None, :], axis=1)
        dist = np.where(inside, 0.0, dist)
    return dist


def distance_to_region(z, region: ConvexRegion) -> float:
    return float(distances_to_region(np.array([z]), region)[0])


def hausdorff_distance(a: ConvexRegion, b: ConvexRegion) -> float:
    """Symmetric Hausdorff distance between two convex regions.

    For convex sets the supremum is attained at extreme points, so scanning
    vertices suffices.  EMPTY vs EMPTY is 0; EMPTY vs anything else is +inf.
    """
    if a.kind == EMPTY and b.kind == EMPTY:
        return 0.0
    if a.kind == EMPTY or b.kind == EMPTY:
        return math.inf
    d_ab = float(np.max(distances_to_region(np.asarray(a.points), b)))
    d_ba = float(np.max(distances_to_region(np.asarray(b.points), a)))
    return max(d_ab, d_ba)


def hausdorff_point_sets(P, Q) -> float:
    """Symmetric Hausdorff distance between finite point sets (arrays of complex)."""
    P = np.asarray(P, dtype=complex).ravel()
    Q = np.asarray(Q, dtype=complex).ravel()
    d = np.abs(P[:, None] - Q[None, :])
    return float(max(d.min(axis=1).max(), d.min(axis=0).max()))


def region_contains_region(outer: ConvexRegion, inner: ConvexRegion, tol=1e-8) -> bool:
    """Vertex containment check, adequate for convex inner regions."""
    if inner.kind == EMPTY:
        return True
    if outer.kind == EMPTY:
        return False
    return bool(np.max(distances_to_region(np.asarray(inner.points), outer)) <= tol)


def ellipse_boundary(center: float, half_focal: float, minor: float, m: int = 1024):
    """CCW boundary points of the ellipse with real center, foci center +- X."""
    a = math.sqrt(minor * minor + half_focal * half_focal)
    ts = np.linspace(0.0, 2 * math.pi, m, endpoint=False)
    return center + a * np.cos(ts) + 1j * minor * np.sin(ts)


def ellipse_region(center: float, half_focal: float, minor: float, m: int = 1024) -> ConvexRegion:
    if minor <= 0:
        lo, hi = center - half_focal, center + half_focal
        if half_focal <= 0:
            return ConvexRegion(POINT, (complex(center),))
        return ConvexRegion(SEGMENT, (complex(lo), complex(hi)))
    return ConvexRegion(POLYGON, tuple(complex(z) for z in ellipse_boundary(center, half_focal, minor, m)))

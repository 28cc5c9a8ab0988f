"""Strictly convex planar polygons: validation, areas, moments, polarity.

A polygon is stored as an (n, 2) float64 array of counterclockwise vertices.
The constructor re-orients clockwise input and rejects anything that is not
strictly convex.  Whether the origin is strictly interior is recorded at
construction time, since polarity is only defined in that case.

Convexity is judged against the cross-product threshold
``CONVEXITY_RTOL * scale**2`` where ``scale`` is the largest vertex norm, so
validation is invariant under rescaling.
"""

from __future__ import annotations

import numpy as np

from . import _kernels as k
from .errors import (
    NonConvex,
    OriginNotInterior,
    SingularMatrix,
    TooFewVertices,
    ZeroDirection,
)

CONVEXITY_RTOL = 1e-12
SYMMETRY_RTOL = 1e-9


class Polygon:
    """Immutable strictly convex CCW polygon."""

    __slots__ = ("vertices", "origin_inside")

    def __init__(self, points, _validated: bool = False):
        v = np.ascontiguousarray(np.asarray(points, dtype=np.float64))
        if not _validated:
            v = _validate(v)
        self.vertices = v
        self.vertices.setflags(write=False)
        oc = k.origin_cross(self.vertices)
        self.origin_inside = bool(np.all(oc > 0.0))

    def __len__(self) -> int:
        return self.vertices.shape[0]

    def __repr__(self) -> str:
        return f"Polygon(n={len(self)}, origin_inside={self.origin_inside})"

    @property
    def scale(self) -> float:
        return float(np.max(np.hypot(self.vertices[:, 0], self.vertices[:, 1])))


def _validate(v: np.ndarray) -> np.ndarray:
    if v.ndim != 2 or v.shape[1] != 2:
        raise NonConvex("expected an (n, 2) array of vertices")
    if v.shape[0] < 3:
        raise TooFewVertices(f"need at least 3 vertices, got {v.shape[0]}")
    if not np.all(np.isfinite(v)):
        raise NonConvex("vertices must be finite")
    if k.shoelace_area(v) < 0.0:
        v = np.ascontiguousarray(v[::-1])
    scale = float(np.max(np.hypot(v[:, 0], v[:, 1])))
    if scale == 0.0:
        raise NonConvex("all vertices at the origin")
    tol = CONVEXITY_RTOL * scale * scale
    crosses = k.edge_cross(v)
    if np.any(crosses <= tol):
        i = int(np.argmin(crosses))
        raise NonConvex(
            f"cross product {crosses[i]:.3e} at vertex {i} below threshold {tol:.3e}"
        )
    return v


def polygon_new(points) -> Polygon:
    """Validate a vertex list into a CCW strictly convex polygon."""
    return Polygon(points)


def area(p: Polygon) -> float:
    """Shoelace area."""
    return k.shoelace_area(p.vertices)


def first_moment(p: Polygon) -> np.ndarray:
    """Unnormalized first moment: the integral of (x, y) over the polygon."""
    return k.first_moment(p.vertices)


def centroid(p: Polygon) -> np.ndarray:
    return first_moment(p) / area(p)


def polar(p: Polygon) -> Polygon:
    """Dual polygon: vertex i is the pole of the edge line through v_i, v_{i+1}.

    Requires the origin strictly inside.  The dual of the dual returns the
    original vertices cyclically shifted by one position.
    """
    if not p.origin_inside:
        raise OriginNotInterior("polarity needs the origin strictly inside")
    return Polygon(k.polar_vertices(p.vertices))


def volume_product(p: Polygon) -> float:
    """area(K) * area(K*); invariant under non-singular linear maps."""
    return area(p) * area(polar(p))


def support(p: Polygon, u) -> float:
    """Support function value max over vertices of <u, v>."""
    u = np.asarray(u, dtype=np.float64)
    if u[0] == 0.0 and u[1] == 0.0:
        raise ZeroDirection("support direction must be nonzero")
    return float(k.support_many(p.vertices, u.reshape(1, 2))[0])


def support_batch(p: Polygon, directions: np.ndarray) -> np.ndarray:
    return k.support_many(p.vertices, np.ascontiguousarray(directions, dtype=np.float64))


def apply_linear(p: Polygon, m) -> Polygon:
    """Vertexwise image under a 2x2 matrix; CW images are re-oriented."""
    m = np.asarray(m, dtype=np.float64)
    if abs(np.linalg.det(m)) < 1e-300:
        raise SingularMatrix("linear map must be non-singular")
    return Polygon(p.vertices @ m.T)


def translate(p: Polygon, t) -> Polygon:
    t = np.asarray(t, dtype=np.float64)
    return Polygon(p.vertices + t, _validated=True)


def boundary_distance(p: Polygon, z) -> float:
    """Signed distance from z to the boundary; positive strictly inside."""
    z = np.asarray(z, dtype=np.float64)
    return k.boundary_distance(p.vertices, float(z[0]), float(z[1]))


def contains_point(p: Polygon, z, tol: float = 0.0) -> bool:
    z = np.asarray(z, dtype=np.float64).reshape(1, 2)
    return bool(k.contains_points(p.vertices, np.ascontiguousarray(z), tol)[0])


def contains_points(p: Polygon, pts, tol: float = 0.0) -> np.ndarray:
    pts = np.ascontiguousarray(np.asarray(pts, dtype=np.float64))
    return k.contains_points(p.vertices, pts, tol)


def hausdorff(p: Polygon, q: Polygon, n_directions: int = 1024) -> float:
    """Symmetric Hausdorff distance.

    Vertex-to-body distances are exact for convex polygons (the farthest
    point of one body from the other is always a vertex); support sampling
    at ``n_directions`` angles is kept as a cross-check lower bound.
    """
    d1 = float(np.max(k.points_to_polygon_dist(q.vertices, p.vertices)))
    d2 = float(np.max(k.points_to_polygon_dist(p.vertices, q.vertices)))
    theta = np.linspace(0.0, 2.0 * np.pi, n_directions, endpoint=False)
    u = np.stack([np.cos(theta), np.sin(theta)], axis=1)
    d3 = float(np.max(np.abs(support_batch(p, u) - support_batch(q, u))))
    return max(d1, d2, d3)


def is_origin_symmetric(p: Polygon, rtol: float = SYMMETRY_RTOL) -> bool:
    """True when the vertex set is invariant under negation."""
    n = len(p)
    if n % 2 != 0:
        return False
    v = p.vertices
    tol = rtol * max(p.scale, 1e-300)
    # candidate antipode of vertex 0, then check the cyclic alignment
    d = np.hypot(v[:, 0] + v[0, 0], v[:, 1] + v[0, 1])
    j = int(np.argmin(d))
    if d[j] > tol:
        return False
    shifted = np.roll(v, -j, axis=0)
    return bool(np.max(np.abs(shifted + v)) <= tol)


def max_cyclic_vertex_distance(p: Polygon, q: Polygon) -> float:
    """Smallest max-vertex distance over cyclic alignments of equal-size polygons."""
    if len(p) != len(q):
        return np.inf
    v, w = p.vertices, q.vertices
    best = np.inf
    for s in range(len(p)):
        d = float(np.max(np.hypot(*(np.roll(w, s, axis=0) - v).T)))
        if d < best:
            best = d
    return best


def convex_hull(points, keep_collinear: bool = False) -> np.ndarray:
    """Monotone-chain hull of a 2D point cloud, CCW, collinear points dropped.

    The collinearity threshold is scaled like the convexity validation so the
    hull output always passes ``polygon_new``.
    """
    pts = np.asarray(points, dtype=np.float64)
    pts = pts[np.lexsort((pts[:, 1], pts[:, 0]))]
    keep = np.ones(len(pts), dtype=bool)
    keep[1:] = np.any(np.abs(np.diff(pts, axis=0)) > 0.0, axis=1)
    pts = pts[keep]
    if len(pts) < 3:
        return pts
    scale = float(np.max(np.hypot(pts[:, 0], pts[:, 1])))
    tol = 0.0 if keep_collinear else 4.0 * CONVEXITY_RTOL * scale * scale

    def chain(seq):
        out = []
        for pt in seq:
            while len(out) >= 2:
                a, b = out[-2], out[-1]
                if (b[0] - a[0]) * (pt[1] - a[1]) - (b[1] - a[1]) * (pt[0] - a[0]) <= tol:
                    out.pop()
                else:
                    break
            out.append(pt)
        return out

    lower = chain(pts)
    upper = chain(pts[::-1])
    return np.array(lower[:-1] + upper[:-1])


def regular_ngon(n: int, radius: float = 1.0, phase: float = 0.0) -> Polygon:
    theta = phase + 2.0 * np.pi * np.arange(n) / n
    return Polygon(radius * np.stack([np.cos(theta), np.sin(theta)], axis=1))


def disk_polygon(n: int = 4096, radius: float = 1.0) -> Polygon:
    """Regular n-gon stand-in for the disk; area error is O(1/n^2)."""
    return regular_ngon(n, radius)

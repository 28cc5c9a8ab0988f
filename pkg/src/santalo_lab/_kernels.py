"""Hot numeric kernels, each with a JIT loop form and a vectorized numpy form.

The JIT path (numba ``@njit``, cached) is selected by default when numba
imports cleanly.  Set the environment variable ``SANTALO_LAB_DISABLE_NUMBA``
to any non-empty value to force the pure-numpy fallbacks; the public names
below are rebound at import time.  ``benchmarks/bench_kernels.py`` times the
two paths against each other.

All kernels take contiguous float64 arrays.  Polygons are (n, 2) vertex
arrays in counterclockwise order; validity is the caller's responsibility.
"""

import os

import numpy as np

try:
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    _HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(func):
            return func

        if len(args) == 1 and callable(args[0]):
            return args[0]
        return wrap


USE_NUMBA = _HAVE_NUMBA and not os.environ.get("SANTALO_LAB_DISABLE_NUMBA")


# ---------------------------------------------------------------------------
# loop forms (JIT targets)
# ---------------------------------------------------------------------------

def _shoelace_area_loop(v):
    n = v.shape[0]
    acc = 0.0
    for i in range(n):
        j = i + 1
        if j == n:
            j = 0
        acc += v[i, 0] * v[j, 1] - v[j, 0] * v[i, 1]
    return 0.5 * acc


def _first_moment_loop(v):
    n = v.shape[0]
    mx = 0.0
    my = 0.0
    for i in range(n):
        j = i + 1
        if j == n:
            j = 0
        c = v[i, 0] * v[j, 1] - v[j, 0] * v[i, 1]
        mx += c * (v[i, 0] + v[j, 0])
        my += c * (v[i, 1] + v[j, 1])
    out = np.empty(2)
    out[0] = mx / 6.0
    out[1] = my / 6.0
    return out


def _edge_cross_loop(v):
    n = v.shape[0]
    out = np.empty(n)
    for i in range(n):
        j = i + 1
        if j == n:
            j = 0
        k = j + 1
        if k == n:
            k = 0
        ax = v[j, 0] - v[i, 0]
        ay = v[j, 1] - v[i, 1]
        bx = v[k, 0] - v[j, 0]
        by = v[k, 1] - v[j, 1]
        out[i] = ax * by - ay * bx
    return out


def _origin_cross_loop(v):
    n = v.shape[0]
    out = np.empty(n)
    for i in range(n):
        j = i + 1
        if j == n:
            j = 0
        out[i] = v[i, 0] * v[j, 1] - v[j, 0] * v[i, 1]
    return out


def _polar_vertices_loop(v):
    # vertex i of the dual is the pole of the edge line through v[i], v[i+1]
    n = v.shape[0]
    out = np.empty((n, 2))
    for i in range(n):
        j = i + 1
        if j == n:
            j = 0
        d = v[i, 0] * v[j, 1] - v[j, 0] * v[i, 1]
        out[i, 0] = (v[j, 1] - v[i, 1]) / d
        out[i, 1] = (v[i, 0] - v[j, 0]) / d
    return out


def _support_many_loop(v, u):
    n = v.shape[0]
    m = u.shape[0]
    out = np.empty(m)
    for k in range(m):
        best = v[0, 0] * u[k, 0] + v[0, 1] * u[k, 1]
        for i in range(1, n):
            s = v[i, 0] * u[k, 0] + v[i, 1] * u[k, 1]
            if s > best:
                best = s
        out[k] = best
    return out


def _boundary_distance_loop(v, zx, zy):
    # distance from a strictly interior point to the boundary: for a convex
    # region this is the minimum over the edge lines
    n = v.shape[0]
    best = np.inf
    for i in range(n):
        j = i + 1
        if j == n:
            j = 0
        ex = v[j, 0] - v[i, 0]
        ey = v[j, 1] - v[i, 1]
        c = ex * (zy - v[i, 1]) - ey * (zx - v[i, 0])
        d = c / np.sqrt(ex * ex + ey * ey)
        if d < best:
            best = d
    return best


def _points_to_polygon_dist_loop(v, p):
    # 0.0 for points inside; distance to the nearest boundary segment outside
    n = v.shape[0]
    m = p.shape[0]
    out = np.empty(m)
    for k in range(m):
        px = p[k, 0]
        py = p[k, 1]
        inside = True
        best = np.inf
        for i in range(n):
            j = i + 1
            if j == n:
                j = 0
            ex = v[j, 0] - v[i, 0]
            ey = v[j, 1] - v[i, 1]
            wx = px - v[i, 0]
            wy = py - v[i, 1]
            if ex * wy - ey * wx < 0.0:
                inside = False
            t = (wx * ex + wy * ey) / (ex * ex + ey * ey)
            if t < 0.0:
                t = 0.0
            elif t > 1.0:
                t = 1.0
            dx = wx - t * ex
            dy = wy - t * ey
            d = dx * dx + dy * dy
            if d < best:
                best = d
        out[k] = 0.0 if inside else np.sqrt(best)
    return out


def _contains_points_loop(v, p, tol):
    n = v.shape[0]
    m = p.shape[0]
    out = np.empty(m, dtype=np.bool_)
    for k in range(m):
        ok = True
        for i in range(n):
            j = i + 1
            if j == n:
                j = 0
            ex = v[j, 0] - v[i, 0]
            ey = v[j, 1] - v[i, 1]
            if ex * (p[k, 1] - v[i, 1]) - ey * (p[k, 0] - v[i, 0]) < -tol:
                ok = False
                break
        out[k] = ok
    return out


def _mvee_weights_loop(x, coord_tol, gap_tol, max_iter):
    # multiplicative-weights iteration for the minimum-area origin-centered
    # ellipse of a point set (D-optimal design in 2 variables); returns the
    # weight vector, the iteration count, and the final optimality gap
    n = x.shape[0]
    u = np.full(n, 1.0 / n)
    g = np.empty(n)
    it = 0
    gap = np.inf
    while it < max_iter:
        m00 = 0.0
        m01 = 0.0
        m11 = 0.0
        for i in range(n):
            m00 += u[i] * x[i, 0] * x[i, 0]
            m01 += u[i] * x[i, 0] * x[i, 1]
            m11 += u[i] * x[i, 1] * x[i, 1]
        det = m00 * m11 - m01 * m01
        i00 = m11 / det
        i01 = -m01 / det
        i11 = m00 / det
        gmax = 0.0
        for i in range(n):
            gi = (
                x[i, 0] * x[i, 0] * i00
                + 2.0 * x[i, 0] * x[i, 1] * i01
                + x[i, 1] * x[i, 1] * i11
            )
            g[i] = gi
            if gi > gmax:
                gmax = gi
        gap = gmax / 2.0 - 1.0
        it += 1
        if gap <= gap_tol:
            break
        delta = 0.0
        for i in range(n):
            nu = u[i] * g[i] / 2.0
            delta += abs(nu - u[i])
            u[i] = nu
        if delta <= coord_tol:
            break
    return u, it, gap


# ---------------------------------------------------------------------------
# numpy forms
# ---------------------------------------------------------------------------

def _shoelace_area_np(v):
    w = np.roll(v, -1, axis=0)
    return 0.5 * float(np.sum(v[:, 0] * w[:, 1] - w[:, 0] * v[:, 1]))


def _first_moment_np(v):
    w = np.roll(v, -1, axis=0)
    c = v[:, 0] * w[:, 1] - w[:, 0] * v[:, 1]
    return (c[:, None] * (v + w)).sum(axis=0) / 6.0


def _edge_cross_np(v):
    e = np.roll(v, -1, axis=0) - v
    f = np.roll(e, -1, axis=0)
    return e[:, 0] * f[:, 1] - e[:, 1] * f[:, 0]


def _origin_cross_np(v):
    w = np.roll(v, -1, axis=0)
    return v[:, 0] * w[:, 1] - w[:, 0] * v[:, 1]


def _polar_vertices_np(v):
    w = np.roll(v, -1, axis=0)
    d = v[:, 0] * w[:, 1] - w[:, 0] * v[:, 1]
    return np.stack([(w[:, 1] - v[:, 1]) / d, (v[:, 0] - w[:, 0]) / d], axis=1)


def _support_many_np(v, u):
    return (u @ v.T).max(axis=1)


def _boundary_distance_np(v, zx, zy):
    e = np.roll(v, -1, axis=0) - v
    c = e[:, 0] * (zy - v[:, 1]) - e[:, 1] * (zx - v[:, 0])
    return float(np.min(c / np.hypot(e[:, 0], e[:, 1])))


def _points_to_polygon_dist_np(v, p):
    e = np.roll(v, -1, axis=0) - v
    w = p[:, None, :] - v[None, :, :]
    cross = e[None, :, 0] * w[:, :, 1] - e[None, :, 1] * w[:, :, 0]
    inside = (cross >= 0.0).all(axis=1)
    t = np.clip((w * e[None, :, :]).sum(axis=2) / (e * e).sum(axis=1)[None, :], 0.0, 1.0)
    d = w - t[:, :, None] * e[None, :, :]
    dist = np.sqrt((d * d).sum(axis=2).min(axis=1))
    dist[inside] = 0.0
    return dist


def _contains_points_np(v, p, tol):
    e = np.roll(v, -1, axis=0) - v
    w = p[:, None, :] - v[None, :, :]
    cross = e[None, :, 0] * w[:, :, 1] - e[None, :, 1] * w[:, :, 0]
    return (cross >= -tol).all(axis=1)


def _mvee_weights_np(x, coord_tol, gap_tol, max_iter):
    n = x.shape[0]
    u = np.full(n, 1.0 / n)
    it = 0
    gap = np.inf
    while it < max_iter:
        m = (u[:, None] * x).T @ x
        det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
        inv = np.array([[m[1, 1], -m[0, 1]], [-m[0, 1], m[0, 0]]]) / det
        g = ((x @ inv) * x).sum(axis=1)
        gap = float(g.max()) / 2.0 - 1.0
        it += 1
        if gap <= gap_tol:
            break
        nu = u * g / 2.0
        delta = float(np.abs(nu - u).sum())
        u = nu
        if delta <= coord_tol:
            break
    return u, it, gap


# ---------------------------------------------------------------------------
# path selection
# ---------------------------------------------------------------------------

if USE_NUMBA:
    shoelace_area = njit(cache=True)(_shoelace_area_loop)
    first_moment = njit(cache=True)(_first_moment_loop)
    edge_cross = njit(cache=True)(_edge_cross_loop)
    origin_cross = njit(cache=True)(_origin_cross_loop)
    polar_vertices = njit(cache=True)(_polar_vertices_loop)
    support_many = njit(cache=True)(_support_many_loop)
    boundary_distance = njit(cache=True)(_boundary_distance_loop)
    points_to_polygon_dist = njit(cache=True)(_points_to_polygon_dist_loop)
    contains_points = njit(cache=True)(_contains_points_loop)
    mvee_weights = njit(cache=True)(_mvee_weights_loop)
else:
    shoelace_area = _shoelace_area_np
    first_moment = _first_moment_np
    edge_cross = _edge_cross_np
    origin_cross = _origin_cross_np
    polar_vertices = _polar_vertices_np
    support_many = _support_many_np
    boundary_distance = _boundary_distance_np
    points_to_polygon_dist = _points_to_polygon_dist_np
    contains_points = _contains_points_np
    mvee_weights = _mvee_weights_np


KERNEL_PAIRS = {
    "shoelace_area": (_shoelace_area_loop, _shoelace_area_np),
    "first_moment": (_first_moment_loop, _first_moment_np),
    "edge_cross": (_edge_cross_loop, _edge_cross_np),
    "origin_cross": (_origin_cross_loop, _origin_cross_np),
    "polar_vertices": (_polar_vertices_loop, _polar_vertices_np),
    "support_many": (_support_many_loop, _support_many_np),
    "boundary_distance": (_boundary_distance_loop, _boundary_distance_np),
    "points_to_polygon_dist": (_points_to_polygon_dist_loop, _points_to_polygon_dist_np),
    "contains_points": (_contains_points_loop, _contains_points_np),
    "mvee_weights": (_mvee_weights_loop, _mvee_weights_np),
}

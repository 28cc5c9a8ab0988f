"""Santalo point machinery.

The functional minimized is f(z) = area of (K - z)* over interior points z.
Everything is computed through exact polygon polarity: f itself is a polar
area, and its gradient is 3 times the first moment of the polar body (the
radial integral of u rho(u)^3 equals both the gradient integrand and three
times the polar moment in the plane).  The minimizer is found by a damped
Newton iteration with a finite-difference Hessian; at the solution the polar
body's centroid sits at the origin, which is reported as the certificate.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import polygon as pg
from .errors import (
    InvalidDimension,
    NoConvergence,
    PointNotInterior,
    SandwichUnsatisfiable,
)
from .polygon import Polygon

GRAD_TOL_REL = 1e-10
MAX_ITERS = 200
BOUNDARY_MARGIN_REL = 1e-9


@dataclass
class SantaloSolveReport:
    point: np.ndarray
    iterations: int
    final_gradient_norm: float
    polar_centroid_norm: float
    converged: bool


@dataclass
class StabilityConstants:
    dimension: int
    kappa_d: float
    c_K0: float
    eps1_K0: float
    theorem_e_coefficient: float


def _require_interior(k: Polygon, z: np.ndarray) -> None:
    if pg.boundary_distance(k, z) <= 0.0:
        raise PointNotInterior(f"point {z.tolist()} is not strictly inside")


def polar_volume_at(k: Polygon, z) -> float:
    """f(z): area of the polar of K translated so z becomes the origin."""
    z = np.asarray(z, dtype=np.float64)
    _require_interior(k, z)
    return pg.area(pg.polar(pg.translate(k, -z)))


def polar_volume_grad(k: Polygon, z) -> np.ndarray:
    """Exact gradient of f at z: 3 * first moment of (K - z)*."""
    z = np.asarray(z, dtype=np.float64)
    _require_interior(k, z)
    return 3.0 * pg.first_moment(pg.polar(pg.translate(k, -z)))


def _fd_hessian(k: Polygon, z: np.ndarray, h: float) -> np.ndarray:
    cols = []
    for j in range(2):
        e = np.zeros(2)
        e[j] = h
        cols.append((polar_volume_grad(k, z + e) - polar_volume_grad(k, z - e)) / (2.0 * h))
    hess = np.stack(cols, axis=1)
    return 0.5 * (hess + hess.T)


def santalo_point(k: Polygon, grad_tol_rel: float = GRAD_TOL_REL,
                  max_iters: int = MAX_ITERS) -> SantaloSolveReport:
    """Minimize f by damped Newton from the centroid, staying interior.

    Convergence is declared when the gradient norm drops below
    ``grad_tol_rel * f``.  Raises NoConvergence after ``max_iters``.
    """
    z = pg.centroid(k)
    margin = BOUNDARY_MARGIN_REL * pg.boundary_distance(k, z)
    f = polar_volume_at(k, z)
    iterations = 0
    for iterations in range(1, max_iters + 1):
        g = polar_volume_grad(k, z)
        gnorm = float(np.hypot(g[0], g[1]))
        if gnorm <= grad_tol_rel * f:
            break
        h = max(1e-7 * pg.boundary_distance(k, z), 1e-14 * k.scale)
        hess = _fd_hessian(k, z, h)
        try:
            step = np.linalg.solve(hess, -g)
        except np.linalg.LinAlgError:
            step = -g * (pg.boundary_distance(k, z) / gnorm)
        if float(step @ g) >= 0.0:
            step = -g * (pg.boundary_distance(k, z) / gnorm)
        t = 1.0
        accepted = False
        while t > 1e-16:
            cand = z + t * step
            if pg.boundary_distance(k, cand) > margin:
                fc = pg.area(pg.polar(pg.translate(k, -cand)))
                if fc < f:
                    z, f = cand, fc
                    accepted = True
                    break
            t *= 0.5
        if not accepted:
            # no descent at any damping: only numerical noise is left
            break
    else:
        raise NoConvergence(f"no convergence in {max_iters} Newton iterations")

    g = polar_volume_grad(k, z)
    gnorm = float(np.hypot(g[0], g[1]))
    dual = pg.polar(pg.translate(k, -z))
    cnorm = float(np.linalg.norm(pg.centroid(dual)))
    return SantaloSolveReport(
        point=z,
        iterations=iterations,
        final_gradient_norm=gnorm,
        polar_centroid_norm=cnorm,
        converged=gnorm <= grad_tol_rel * f,
    )


def recenter(k: Polygon) -> Polygon:
    """Translate K so its Santalo point moves to the origin."""
    return pg.translate(k, -santalo_point(k).point)


def check_inclusion_0(k: Polygon) -> float:
    """Smallest lambda with -(K - s(K)) contained in lambda (K - s(K)).

    Computed exactly as the max of <-v_i, p_j> over vertices v_i of the
    recentered body and vertices p_j of its polar.  Always at most 2 in the
    plane; equals 2 exactly when K is a triangle.
    """
    q = recenter(k)
    dual = pg.polar(q)
    return float(np.max(-(q.vertices @ dual.vertices.T)))


def unit_ball_volume(d: int) -> float:
    """kappa_d by the two-step recursion kappa_d = kappa_{d-2} * 2 pi / d."""
    if d < 0:
        raise InvalidDimension("dimension must be nonnegative")
    if d == 0:
        return 1.0
    if d == 1:
        return 2.0
    return unit_ball_volume(d - 2) * 2.0 * np.pi / d


def stability_constants(d: int, diam: float, vol: float) -> StabilityConstants:
    """Explicit constants controlling Santalo-point stability in dimension d.

    c_K0 bounds the Santalo point displacement per unit of sandwich epsilon;
    eps1_K0 is the admissible epsilon range; the quadratic-bound coefficient
    multiplies epsilon^2 in the polar-volume comparison.
    """
    if d < 2:
        raise InvalidDimension("need d >= 2")
    if diam <= 0.0 or vol <= 0.0:
        raise InvalidDimension("diameter and volume must be positive")
    kd = unit_ball_volume(d)
    kdm1 = unit_ball_volume(d - 1)
    c_k0 = diam ** ((d + 1) ** 2) * vol ** (-d - 2) * d * (d * kd / kdm1) ** (d + 2)
    eps1 = min(0.5, 2.0 ** (-2 * d - 1) * (kdm1 / (d * kd * kd)) * vol / diam ** d)
    coeff = (
        2.0 ** (2 * d * d + 4 * d + 1)
        * float(d) ** (2 * d * d + 6 * d + 9)
        * kdm1 ** (-2 * d - 4)
        * kd
        * (d + 1.0) ** (d + 2)
    )
    return StabilityConstants(
        dimension=d, kappa_d=kd, c_K0=c_k0, eps1_K0=eps1, theorem_e_coefficient=coeff
    )


def _sandwich_bodies(k0: Polygon, eps: float, a: np.ndarray) -> tuple[Polygon, Polygon]:
    inner = pg.Polygon((1.0 - eps) * k0.vertices + a, _validated=True)
    outer = pg.Polygon((1.0 + eps) * k0.vertices - a, _validated=True)
    if not np.all(pg.contains_points(outer, inner.vertices, tol=0.0)):
        raise SandwichUnsatisfiable("inner body escapes the outer body")
    return inner, outer


def sandwich_body(k0: Polygon, eps: float, rng: np.random.Generator,
                  shift_frac: float = 0.3) -> tuple[Polygon, Polygon, Polygon]:
    """Random convex body K sandwiched as (1-eps)K0 + a <= K <= (1+eps)K0 - a.

    The midpoint of the two sandwich bodies equals K0 exactly when the outer
    shift is the negation of the inner one, so a single random shift a is
    drawn (norm at most shift_frac * eps * inradius).  K is the hull of the
    inner body's vertices together with points placed uniformly along each
    inner-to-outer vertex segment, which keeps both inclusions automatic;
    they are re-verified numerically anyway.
    """
    r_in = pg.boundary_distance(k0, np.zeros(2))
    if r_in <= 0.0:
        raise SandwichUnsatisfiable("reference body must contain the origin")
    ang = rng.uniform(0.0, 2.0 * np.pi)
    rad = shift_frac * eps * r_in * np.sqrt(rng.uniform())
    a = rad * np.array([np.cos(ang), np.sin(ang)])
    inner, outer = _sandwich_bodies(k0, eps, a)
    t = rng.uniform(size=(len(k0), 1))
    mixed = inner.vertices + t * (outer.vertices - inner.vertices)
    body = Polygon(pg.convex_hull(np.vstack([inner.vertices, mixed])))
    tol = 1e-12 * max(k0.scale, 1.0)
    if not np.all(pg.contains_points(body, inner.vertices, tol=tol)):
        raise SandwichUnsatisfiable("constructed body lost the inner inclusion")
    if not np.all(pg.contains_points(outer, body.vertices, tol=tol)):
        raise SandwichUnsatisfiable("constructed body lost the outer inclusion")
    return body, inner, outer


def theorem_e_experiment(k0: Polygon, eps: float, trials: int, seed: int,
                         shift_frac: float = 0.3) -> list[tuple[float, float]]:
    """Sandwich trials for the quadratic Santalo-point stability bound.

    For each trial a random body K between (1-eps)K0 + a and (1+eps)K0 - a is
    built, and the pair (lhs, rhs) is recorded where
    lhs = f_K0(s(K)) - f_K0(s(K0)) and rhs = coefficient * eps^2.
    Per-trial RNG is seeded seed + trial for reproducibility.
    """
    if eps < 0.0:
        raise SandwichUnsatisfiable("eps must be nonnegative")
    diam = float(np.max(np.hypot(
        *(k0.vertices[:, None, :] - k0.vertices[None, :, :]).reshape(-1, 2).T)))
    consts = stability_constants(2, diam, pg.area(k0))
    if eps >= consts.eps1_K0:
        raise SandwichUnsatisfiable(
            f"eps={eps} outside admissible range [0, {consts.eps1_K0:.6g})")
    rhs = consts.theorem_e_coefficient * eps * eps
    s0 = santalo_point(k0).point
    f0 = polar_volume_at(k0, s0)
    out = []
    for trial in range(trials):
        rng = np.random.default_rng(seed + trial)
        if eps == 0.0:
            body = k0
        else:
            body, _, _ = sandwich_body(k0, eps, rng, shift_frac)
        sk = santalo_point(body).point
        lhs = polar_volume_at(k0, sk) - f0
        out.append((float(lhs), float(rhs)))
    return out

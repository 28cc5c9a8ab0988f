"""Planar convex-geometry laboratory: polygon polarity and volume products,
Santalo points, extremal ellipses, Steiner symmetrization, extremal sector
boundaries, volume-product maximization, and stability experiments."""

from .polygon import (
    Polygon,
    apply_linear,
    area,
    centroid,
    convex_hull,
    disk_polygon,
    first_moment,
    hausdorff,
    is_origin_symmetric,
    polar,
    polygon_new,
    regular_ngon,
    support,
    translate,
    volume_product,
)

__all__ = [
    "Polygon",
    "apply_linear",
    "area",
    "centroid",
    "convex_hull",
    "disk_polygon",
    "first_moment",
    "hausdorff",
    "is_origin_symmetric",
    "polar",
    "polygon_new",
    "regular_ngon",
    "support",
    "translate",
    "volume_product",
]

__version__ = "0.1.0"

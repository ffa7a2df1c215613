"""Petal-shaped starlike class: radius constants, domain geometry and
numerical certification."""

from ._petalstar import (
    asinh_one,
    boundary_point,
    bounds,
    contains,
    convex_order_radius,
    disk_in_petal,
    estimate_k0_radius,
    extremal_eval,
    f0_coefficients,
    inclusion_geometry,
    inscribed_disk_radius,
    k_st_radius,
    m_beta_radius,
    named_class_radius,
    radius_csn,
    radius_f,
    radius_janowski,
    radius_sn,
    ratio_class_radius,
    rho,
    starlike_order_radius,
    verify,
)

__all__ = [
    "asinh_one",
    "boundary_point",
    "bounds",
    "contains",
    "convex_order_radius",
    "disk_in_petal",
    "estimate_k0_radius",
    "extremal_eval",
    "f0_coefficients",
    "inclusion_geometry",
    "inscribed_disk_radius",
    "k_st_radius",
    "m_beta_radius",
    "named_class_radius",
    "radius_csn",
    "radius_f",
    "radius_janowski",
    "radius_sn",
    "ratio_class_radius",
    "rho",
    "starlike_order_radius",
    "verify",
]

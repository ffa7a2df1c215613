#!/usr/bin/env python3
"""Smoke test of the python extension (run with PYTHONPATH at the build dir)."""

import math
import sys

import _petalstar as ps


def close(a, b, tol=1e-12):
    return abs(a - b) <= tol


def main():
    s = math.asinh(1.0)
    assert close(ps.asinh_one(), s)
    assert close(ps.rho(0j), 1.0)
    assert ps.contains(1.0 + 0j)
    assert not ps.contains(1.0 + s + 0j)
    assert close(ps.boundary_point(math.pi).real, 1.0 - s, 1e-14)
    assert close(ps.inscribed_disk_radius(1.0), s)

    center, radius = ps.disk_in_petal(1.2)
    assert close(center, 1.2) and close(radius, s - 0.2)

    b = ps.bounds(0.5)
    assert close(b["re_min"], 1.0 - math.asinh(0.5))

    g = ps.inclusion_geometry()
    assert close(g["beta_min"], 1.0 + s)

    assert close(ps.starlike_order_radius(0.5)["value"], math.sinh(0.5))
    assert close(ps.m_beta_radius(1.5)["value"], math.sinh(0.5))
    assert close(ps.k_st_radius(2.0)["value"], math.sinh(1.0 / 3.0))
    assert abs(ps.convex_order_radius(0.0)["value"] - 0.37198) < 2e-4
    assert abs(ps.named_class_radius("cardioid")["value"] - 0.523831) < 1e-6
    assert abs(ps.radius_f()["value"] - 0.178105) < 1e-6
    assert ps.radius_sn(2)["value"] > ps.radius_csn(2, 0.5)["value"]
    assert close(ps.radius_janowski(1, 1.0, 0.0)["value"], s)
    assert ps.ratio_class_radius("f2", 1)["value"] == ps.ratio_class_radius("f3", 1)["value"]

    c = ps.f0_coefficients(6)
    assert close(c[4], 1.0 / 9.0, 1e-14) and close(c[6], -1.0 / 225.0, 1e-14)

    fz, w = ps.extremal_eval("f0", 0.3 + 0.1j)
    assert abs(w - ps.rho(0.3 + 0.1j)) < 1e-12
    assert abs(fz / (0.3 + 0.1j) - 1.0) < 0.5

    assert 0.37198 < ps.estimate_k0_radius(1024) < 0.41

    rows = ps.verify("inclusions", 1024)
    assert len(rows) == 5 and all(r["passed"] for r in rows)

    try:
        ps.inscribed_disk_radius(2.0)
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError for r > 1")

    print("python smoke: PASS")


if __name__ == "__main__":
    main()

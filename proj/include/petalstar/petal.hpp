#ifndef PETALSTAR_PETAL_HPP
#define PETALSTAR_PETAL_HPP

#include "petalstar/kernel.hpp"

namespace petalstar {

// Geometry of the petal Omega = { w : |sinh(w-1)| < 1 }, the image of the
// unit disk under rho(z) = 1 + asinh(z).

struct disk_spec {
    double center = 0.0;  // on the real axis
    double radius = 0.0;
};

enum class conic_kind { parabola, ellipse, sector, half_plane };

struct conic_spec {
    conic_kind kind = conic_kind::half_plane;
    // parabola Y^2 = 4 a (X - b): focus parameter a, vertex b
    // ellipse: center x0 (y0 = 0), semi-axes a (horizontal), b (vertical)
    // sector about the positive real axis: half-angle psi
    // half-plane Re w > c (orientation +1) or Re w < c (orientation -1)
    double a = 0.0, b = 0.0, x0 = 0.0, psi = 0.0, c = 0.0;
    int orientation = +1;
};

/// Membership at tolerance: |sinh(w-1)| < 1 - tol. Negative tol widens the
/// test (used for claims that touch the boundary).
bool contains(cplx w, double tol);

/// gamma_0, the petal boundary: rho(e^{i theta}).
cplx boundary_point(double theta);

/// Radius of the maximal disk about 1 inside rho(|z| <= r): asinh(r).
double inscribed_disk_radius(double r);

/// Largest certified disk about a real center a inside the petal:
/// r_a = a - (1 - asinh 1) for a <= 1, (1 + asinh 1) - a for a >= 1.
/// a must lie strictly between the petal's real extremes.
disk_spec disk_in_petal(double a);

struct petal_bounds {
    double re_min, re_max, im_max, mod_min, mod_max, arg_max;
};

/// Extremes of Re, Im, modulus and argument of rho over |z| <= r:
/// re/mod extremes are rho(-r), rho(r); im_max is arcsin-like (pi/2 at r=1);
/// arg_max is the disk-wide sector bound atan(1/t).
petal_bounds bounds(double r);

struct symmetry_report {
    double conj_residual;      // |rho(conj z) - conj rho(z)|, max over samples
    double vertical_residual;  // reflection through Re w = 1, max over samples
};

symmetry_report symmetry_residuals(int samples);

struct inclusion_geometry_info {
    double alpha_max;   // 1 - asinh(1)
    double beta_min;    // 1 + asinh(1)
    double k_min;       // 1 + 1/asinh(1)
    double gamma_min;   // (2/pi) atan(1/t)
    double t;           // tangent parameter of the bounding parabola
    conic_spec parabola;
};

inclusion_geometry_info inclusion_geometry();

/// Boundary ellipse of the k-starlike conic domain, k > 1:
/// center k^2/(k^2-1), semi-axes k/(k^2-1) and 1/sqrt(k^2-1).
conic_spec ellipse_at(double k);

}  // namespace petalstar

#endif

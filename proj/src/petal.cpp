#include "petalstar/petal.hpp"

#include <cmath>
#include <numbers>

namespace petalstar {

namespace {
constexpr double kPi = std::numbers::pi;

double im_rho_on_circle(double r, double theta) {
    return rho(std::polar(r, theta)).imag();
}

// Golden-section maximization of Im rho(r e^{i theta}) over [0, pi/2].
double golden_max_im(double r) {
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = 0.0, hi = kPi / 2.0;
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = im_rho_on_circle(r, x1), f2 = im_rho_on_circle(r, x2);
    for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
        if (f1 < f2) {
            lo = x1; x1 = x2; f1 = f2;
            x2 = lo + gr * (hi - lo); f2 = im_rho_on_circle(r, x2);
        } else {
            hi = x2; x2 = x1; f2 = f1;
            x1 = hi - gr * (hi - lo); f1 = im_rho_on_circle(r, x1);
        }
    }
    return im_rho_on_circle(r, 0.5 * (lo + hi));
}
}  // namespace

bool contains(cplx w, double tol) {
    // |sinh(w-1)| < 1 alone also admits vertical translates of the petal;
    // restrict to the strip that sinh maps injectively onto the disk.
    if (std::abs(w.imag()) > kPi / 2.0 + std::max(0.0, -tol))
        return false;
    return std::abs(sinh_c(w - 1.0)) < 1.0 - tol;
}

cplx boundary_point(double theta) { return rho(std::polar(1.0, theta)); }

double inscribed_disk_radius(double r) {
    if (r < 0.0 || r > 1.0)
        throw std::domain_error("inscribed_disk_radius: r must be in [0,1]");
    return std::asinh(r);
}

disk_spec disk_in_petal(double a) {
    const double s = asinh_one();
    if (a <= 1.0 - s || a >= 1.0 + s)
        throw std::domain_error("disk_in_petal: center outside (1 - asinh 1, 1 + asinh 1)");
    return {a, a <= 1.0 ? a - (1.0 - s) : (1.0 + s) - a};
}

petal_bounds bounds(double r) {
    if (r < 0.0 || r > 1.0)
        throw std::domain_error("bounds: r must be in [0,1]");
    const double lo = 1.0 - std::asinh(r);
    const double hi = 1.0 + std::asinh(r);
    double im;
    if (r >= 1.0) {
        im = kPi / 2.0;
    } else {
        im = golden_max_im(r);
        // The maximum sits at theta = pi/2 when Im rho is monotone on the
        // quarter circle; fall back to a dense scan if that ever fails.
        const double at_end = im_rho_on_circle(r, kPi / 2.0);
        if (im < at_end - 1e-12) {
            for (int i = 0; i <= 4096; ++i)
                im = std::max(im, im_rho_on_circle(r, kPi / 2.0 * i / 4096.0));
        }
        im = std::max(im, at_end);
    }
    return {lo, hi, im, lo, hi, std::atan(1.0 / inclusion_geometry().t)};
}

symmetry_report symmetry_residuals(int samples) {
    if (samples < 2) samples = 2;
    const double r = 1.0 - 1e-6;
    double conj_res = 0.0, vert_res = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double theta = kPi / 2.0 * i / (samples - 1);
        const cplx z = std::polar(r, theta);
        conj_res = std::max(conj_res, std::abs(rho(std::conj(z)) - std::conj(rho(z))));
        const cplx w1 = rho(z);
        const cplx w2 = rho(std::polar(r, kPi - theta));
        vert_res = std::max(vert_res, std::abs(w1.real() + w2.real() - 2.0));
        vert_res = std::max(vert_res, std::abs(w1.imag() - w2.imag()));
    }
    // also sweep the full circle for the conjugation residual
    for (int i = 0; i < samples; ++i) {
        const cplx z = std::polar(r, 2.0 * kPi * i / samples);
        conj_res = std::max(conj_res, std::abs(rho(std::conj(z)) - std::conj(rho(z))));
    }
    return {conj_res, vert_res};
}

inclusion_geometry_info inclusion_geometry() {
    const double s = asinh_one();
    inclusion_geometry_info g;
    g.alpha_max = 1.0 - s;
    g.beta_min = 1.0 + s;
    g.k_min = 1.0 + 1.0 / s;
    g.t = 4.0 / kPi * std::sqrt(s * (1.0 - s));
    g.gamma_min = 2.0 / kPi * std::atan(1.0 / g.t);
    g.parabola.kind = conic_kind::parabola;
    g.parabola.a = kPi * kPi / (16.0 * s);
    g.parabola.b = 1.0 - s;
    return g;
}

conic_spec ellipse_at(double k) {
    if (k <= 1.0) throw std::domain_error("ellipse_at: k must be > 1");
    conic_spec e;
    e.kind = conic_kind::ellipse;
    e.x0 = k * k / (k * k - 1.0);
    e.a = k / (k * k - 1.0);
    e.b = 1.0 / std::sqrt(k * k - 1.0);
    return e;
}

}  // namespace petalstar

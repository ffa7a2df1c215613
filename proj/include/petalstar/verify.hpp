#ifndef PETALSTAR_VERIFY_HPP
#define PETALSTAR_VERIFY_HPP

#include <functional>
#include <string>
#include <vector>

#include "petalstar/extremal.hpp"
#include "petalstar/petal.hpp"
#include "petalstar/radii.hpp"

namespace petalstar {

struct verification_report {
    std::string claim;
    double claimed = 0.0;
    double oracle_value = 0.0;
    double abs_diff = 0.0;
    bool passed = false;
    int samples = 0;
    double tol = 0.0;
};

/// Largest r in (0, 1) whose sampled circle image under w_map stays inside
/// the target, by a coarse 64 x 1024 scan followed by bisection to r_tol.
/// The coarse scan also checks that failure is monotone in r; a pass after a
/// fail aborts rather than returning a wrong radius.
double sup_radius_oracle(const std::function<cplx(double, double)>& w_map,
                         const std::function<bool(cplx)>& target,
                         double r_tol, int angles = 1024);

/// Numerical check of one inclusion relation of the petal against its conic:
/// half_plane_lower, half_plane_upper, sector, parabola, ellipse_kmin.
verification_report check_inclusion(const std::string& relation, int samples);

/// Sufficient condition for the Janowski class S*[C,D] to sit inside the
/// petal class, -1 < D < C <= 1.
bool janowski_subset(double C, double D);

/// Bound on |z p'/p| for p in P_n(alpha):
/// 2 (1-alpha) n r^n / ((1-r^n)(1+(1-2 alpha) r^n)).
double pn_alpha_bound(int n, double alpha, double r);

/// Image disk of |z| = r under the P_n[C,D] bound:
/// center (1 - CD r^{2n})/(1 - D^2 r^{2n}), radius (C-D) r^n/(1 - D^2 r^{2n}).
disk_spec pn_cd_disk(int n, double C, double D, double r);

/// Sup-radius oracle run against a claimed radius constant, using the
/// registered extremal witness and target predicate for its class pair.
verification_report certify(const radius_result& result, double r_tol);

/// Boundary touch residual |z f'/f (z*) - expected| of a sharp result.
verification_report certify_touch(const radius_result& result);

/// Non-certified numerical estimate of the sharp convexity radius of the
/// petal extremal f0 (experimental; the certified lower bound is the
/// convex_order_radius root).
double estimate_k0_radius(int samples);

/// All verification rows for a scope: "radii", "inclusions", "geometry" or
/// "all".
std::vector<verification_report> verify_scope(const std::string& scope,
                                              int samples = 4096,
                                              double r_tol = 1e-6);

}  // namespace petalstar

#endif

#ifndef PETALSTAR_RADII_HPP
#define PETALSTAR_RADII_HPP

#include <functional>
#include <map>
#include <string>

namespace petalstar {

// Radius constants: for classes G1, G2, the G1-radius of G2 is the largest
// r0 such that r^{-1} g(r z) lies in G1 for every g in G2 and r <= r0.

enum class radius_method { closed_form, root_of_equation };

struct radius_result {
    double value = 0.0;                    // in (0, 1]
    std::string source_class;              // G2, the class swept
    std::string target_class;              // G1, the membership class
    std::map<std::string, double> params;
    radius_method method = radius_method::closed_form;
    bool sharp = false;
    std::string ref;
};

enum class named_class { lemniscate, rl, cardioid, exponential, crescent, booth };
enum class ratio_class { F1, F2, F3 };

/// Largest r with every petal-class function starlike of order alpha there:
/// 1 for alpha <= 1 - asinh(1), else sinh(1 - alpha). Sharp for f0.
radius_result starlike_order_radius(double alpha);

/// M(beta)-radius (Re zf'/f < beta): sinh(beta - 1), capped at the whole disk
/// for beta >= 1 + asinh(1). Sharp.
radius_result m_beta_radius(double beta);

/// k-starlike radius: sinh(1/(k+1)), k > 0. Sharp at z = -sinh(1/(k+1)).
radius_result k_st_radius(double k);

/// Convexity-of-order-alpha radius: least positive root of
/// (1-r^2) sqrt(1+r^2) (1 - asinh r)(1 - alpha - asinh r) - r = 0. Not sharp.
radius_result convex_order_radius(double alpha);

/// Petal radius of S_n = { f in A_n : f/z has positive real part }.
radius_result radius_Sn(int n);

/// Petal radius of F = S_1 via the gradient bound 2r/(1-r^2) <= 1/e:
/// -e + sqrt(1 + e^2).
radius_result radius_F();

/// Petal radius of CS_n(alpha) (f/g with positive real part against a
/// starlike-of-order-alpha g).
radius_result radius_CSn(int n, double alpha);

/// Petal radius of the Janowski class S*_n[C,D].
radius_result radius_janowski(int n, double C, double D);

/// Sharp petal radii of the lemniscate, RL, cardioid, exponential, crescent
/// and Booth classes. alpha is the Booth parameter (ignored otherwise).
radius_result named_class_radius(named_class cls, double alpha = 0.0);

/// Sharp petal radii of the ratio classes F1, F2, F3 (F3 coincides with F2).
radius_result ratio_class_radius(ratio_class cls, int n);

/// Deterministic bracketed root finder: bisection to width < tol, then one
/// secant polish. Requires a sign change on [lo, hi].
double solve_bracketed(const std::function<double(double)>& f, double lo,
                       double hi, double tol);

std::string to_string(named_class cls);
std::string to_string(ratio_class cls);

}  // namespace petalstar

#endif

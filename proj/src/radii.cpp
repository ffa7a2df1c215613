#include "petalstar/radii.hpp"

#include <cmath>
#include <stdexcept>

#include "petalstar/kernel.hpp"

namespace petalstar {

namespace {

radius_result make(double value, std::string src, std::string tgt,
                   std::map<std::string, double> params, radius_method m,
                   bool sharp, std::string ref) {
    radius_result r;
    r.value = value;
    r.source_class = std::move(src);
    r.target_class = std::move(tgt);
    r.params = std::move(params);
    r.method = m;
    r.sharp = sharp;
    r.ref = std::move(ref);
    return r;
}

}  // namespace

double solve_bracketed(const std::function<double(double)>& f, double lo,
                       double hi, double tol) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw std::runtime_error("solve_bracketed: no sign change on bracket");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid; flo = fm;
        } else {
            hi = mid; fhi = fm;
        }
    }
    // one secant polish inside the final bracket
    if (fhi != flo) {
        const double x = lo - flo * (hi - lo) / (fhi - flo);
        if (x > lo && x < hi) return x;
    }
    return 0.5 * (lo + hi);
}

radius_result starlike_order_radius(double alpha) {
    if (alpha < 0.0 || alpha >= 1.0)
        throw std::domain_error("starlike_order_radius: alpha must be in [0,1)");
    const double s = asinh_one();
    const double v = alpha <= 1.0 - s ? 1.0 : std::sinh(1.0 - alpha);
    return make(v, "S*_rho", "S*_alpha", {{"alpha", alpha}},
                radius_method::closed_form, true,
                "sharp starlike-of-order-alpha radius; whole disk for alpha <= 1 - asinh(1)");
}

radius_result m_beta_radius(double beta) {
    if (beta <= 1.0)
        throw std::domain_error("m_beta_radius: beta must be > 1");
    const double s = asinh_one();
    const double v = beta <= 1.0 + s ? std::sinh(beta - 1.0) : 1.0;
    return make(v, "S*_rho", "M_beta", {{"beta", beta}},
                radius_method::closed_form, true,
                "sharp M(beta) radius; whole disk for beta > 1 + asinh(1)");
}

radius_result k_st_radius(double k) {
    if (k <= 0.0)
        throw std::domain_error("k_st_radius: k must be > 0 (k = 0 gives the whole disk)");
    return make(std::sinh(1.0 / (k + 1.0)), "S*_rho", "k_ST", {{"k", k}},
                radius_method::closed_form, true,
                "sharp k-starlike radius sinh(1/(k+1))");
}

radius_result convex_order_radius(double alpha) {
    if (alpha < 0.0 || alpha >= 1.0)
        throw std::domain_error("convex_order_radius: alpha must be in [0,1)");
    auto lhs = [alpha](double r) {
        const double a = std::asinh(r);
        return (1.0 - r * r) * std::sqrt(1.0 + r * r) * (1.0 - a) *
                   (1.0 - alpha - a) - r;
    };
    // scan for the first sign change, then bisect
    const int panels = 64;
    double lo = 0.0, hi = 0.0;
    double prev = lhs(0.0);
    for (int i = 1; i <= panels; ++i) {
        const double r = static_cast<double>(i) / panels;
        const double cur = lhs(r);
        if ((cur > 0.0) != (prev > 0.0) || cur == 0.0) {
            lo = static_cast<double>(i - 1) / panels;
            hi = r;
            break;
        }
        prev = cur;
    }
    if (hi == 0.0)
        throw std::runtime_error("convex_order_radius: no sign change in (0,1)");
    const double root = solve_bracketed(lhs, lo, hi, 1e-15);
    return make(root, "S*_rho", "K_alpha", {{"alpha", alpha}},
                radius_method::root_of_equation, false,
                "least positive root of the convexity bound equation; not sharp");
}

radius_result radius_Sn(int n) {
    if (n < 1) throw std::domain_error("radius_Sn: n must be >= 1");
    const double s = asinh_one();
    const double rn = s / (n + std::sqrt(static_cast<double>(n) * n + s * s));
    return make(std::pow(rn, 1.0 / n), "S_n", "S*_rho_n", {{"n", double(n)}},
                radius_method::closed_form, true,
                "sharp petal radius of S_n; r^n solves asinh(1) x^2 + 2n x - asinh(1) = 0");
}

radius_result radius_F() {
    const double e = std::exp(1.0);
    return make(-e + std::sqrt(1.0 + e * e), "F", "S*_rho", {},
                radius_method::closed_form, false,
                "petal radius of F as stated: -e + sqrt(1 + e^2)");
}

radius_result radius_CSn(int n, double alpha) {
    if (n < 1) throw std::domain_error("radius_CSn: n must be >= 1");
    if (alpha < 0.0 || alpha >= 1.0)
        throw std::domain_error("radius_CSn: alpha must be in [0,1)");
    const double s = asinh_one();
    const double m = n - alpha + 1.0;
    const double rn = s / (m + std::sqrt(m * m + (s + 2.0 * (1.0 - alpha)) * s));
    return make(std::pow(rn, 1.0 / n), "CS_n", "S*_rho_n",
                {{"n", double(n)}, {"alpha", alpha}},
                radius_method::closed_form, true,
                "sharp petal radius of CS_n(alpha)");
}

radius_result radius_janowski(int n, double C, double D) {
    if (n < 1) throw std::domain_error("radius_janowski: n must be >= 1");
    if (D < -1.0 || C > 1.0 || C <= D)
        throw std::domain_error("radius_janowski: need -1 <= D < C <= 1");
    const double s = asinh_one();
    double rn;
    if (D == 0.0) {
        rn = s / C;
    } else {
        // discriminant term differs between the D < 0 and D > 0 branches
        const double q = D < 0.0 ? D * D * (1.0 + s) - C * D
                                 : D * D * (s - 1.0) + C * D;
        rn = 2.0 * s / (C - D + std::sqrt((C - D) * (C - D) + 4.0 * q * s));
    }
    const double v = std::min(1.0, std::pow(rn, 1.0 / n));
    return make(v, "S*_n[C,D]", "S*_rho_n",
                {{"n", double(n)}, {"C", C}, {"D", D}},
                radius_method::closed_form, false,
                "petal radius of the Janowski class");
}

radius_result named_class_radius(named_class cls, double alpha) {
    const double s = asinh_one();
    double v = 0.0;
    bool is_booth = false;
    switch (cls) {
        case named_class::lemniscate:
            v = s * (2.0 - s);
            break;
        case named_class::rl: {
            const double r2 = std::sqrt(2.0);
            v = (2.0 + (1.0 + r2) * s) * s /
                (5.0 - 3.0 * r2 + (4.0 * (r2 - 1.0) + 2.0 * s) * s);
            break;
        }
        case named_class::cardioid:
            v = 0.5 * (std::sqrt(2.0 * (2.0 + 3.0 * s)) - 2.0);
            break;
        case named_class::exponential:
            v = std::log(1.0 + s);
            break;
        case named_class::crescent:
            v = s * (2.0 + s) / (2.0 * (1.0 + s));
            break;
        case named_class::booth:
            is_booth = true;
            if (alpha < 0.0 || alpha > 1.0)
                throw std::domain_error("named_class_radius: Booth alpha must be in [0,1]");
            v = alpha == 0.0
                    ? s
                    : (-1.0 + std::sqrt(1.0 + 4.0 * alpha * s * s)) / (2.0 * alpha * s);
            break;
    }
    std::map<std::string, double> params;
    if (is_booth) params["alpha"] = alpha;
    return make(v, to_string(cls), "S*_rho", std::move(params),
                radius_method::closed_form, true,
                "sharp petal radius of a named generator class");
}

radius_result ratio_class_radius(ratio_class cls, int n) {
    if (n < 1) throw std::domain_error("ratio_class_radius: n must be >= 1");
    const double s = asinh_one();
    const double nn = n;
    double rn;
    if (cls == ratio_class::F1) {
        rn = (std::sqrt(4.0 * nn * nn + s * s) - 2.0 * nn) / s;
    } else {  // F2 and F3 share the same radius
        rn = (std::sqrt(9.0 * nn * nn + 4.0 * s * (nn + s)) - 3.0 * nn) /
             (2.0 * (nn + s));
    }
    return make(std::pow(rn, 1.0 / n), to_string(cls), "S*_rho_n",
                {{"n", double(n)}},
                radius_method::closed_form, true,
                "sharp petal radius of a ratio class");
}

std::string to_string(named_class cls) {
    switch (cls) {
        case named_class::lemniscate: return "lemniscate";
        case named_class::rl: return "rl";
        case named_class::cardioid: return "cardioid";
        case named_class::exponential: return "exponential";
        case named_class::crescent: return "crescent";
        case named_class::booth: return "booth";
    }
    return "?";
}

std::string to_string(ratio_class cls) {
    switch (cls) {
        case ratio_class::F1: return "F1";
        case ratio_class::F2: return "F2";
        case ratio_class::F3: return "F3";
    }
    return "?";
}

}  // namespace petalstar

// Acceptance gate: one line per criterion, exit 0 only if all pass.
// The CLI end-to-end criterion lives in cli_e2e.py, which prints the same
// kind of line for it.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "petalstar/extremal.hpp"
#include "petalstar/radii.hpp"
#include "petalstar/rational_series.hpp"
#include "petalstar/verify.hpp"

using namespace petalstar;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("acceptance: %-28s %s%s%s\n", name.c_str(), ok ? "PASS" : "FAIL",
                detail.empty() ? "" : "  ", detail.c_str());
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void constant_table() {
    const auto t0 = std::chrono::steady_clock::now();
    struct entry {
        const char* name;
        double got, want, tol;
    };
    const std::vector<entry> table = {
        {"lemniscate", named_class_radius(named_class::lemniscate).value, 0.985928, 1e-6},
        {"rl", named_class_radius(named_class::rl).value, 0.964694, 1e-6},
        {"cardioid", named_class_radius(named_class::cardioid).value, 0.523831, 1e-6},
        {"exponential", named_class_radius(named_class::exponential).value, 0.632002, 1e-6},
        {"crescent", named_class_radius(named_class::crescent).value, 0.674924, 1e-6},
        {"booth(1)", named_class_radius(named_class::booth, 1.0).value, 0.58241, 1e-5},
        {"booth(0)", named_class_radius(named_class::booth, 0.0).value, 0.881374, 1e-6},
        {"F", radius_F().value, 0.178105, 1e-6},
    };
    bool ok = true;
    std::string detail;
    for (const auto& e : table) {
        if (std::abs(e.got - e.want) > e.tol) {
            ok = false;
            detail += std::string(e.name) + " off; ";
        }
    }
    const double dt = seconds_since(t0);
    if (dt >= 1.0) {
        ok = false;
        detail += "too slow (" + std::to_string(dt) + " s)";
    }
    report("constant-table", ok, detail);
}

void convexity_root() {
    const auto t0 = std::chrono::steady_clock::now();
    const double r = convex_order_radius(0.0).value;
    const double a = std::asinh(r);
    const double residual =
        std::abs((1.0 - r * r) * std::sqrt(1.0 + r * r) * (1.0 - a) * (1.0 - a) - r);
    const double dt = seconds_since(t0);
    const bool ok = std::abs(r - 0.37198) <= 5e-5 && residual < 1e-10 && dt < 0.1;
    char buf[128];
    std::snprintf(buf, sizeof buf, "root=%.8f residual=%.2e t=%.3fs", r, residual, dt);
    report("convexity-root", ok, buf);
}

void f0_coeffs() {
    const auto exact = f0_coefficients_exact(6);
    const rational want[] = {rational(0),     rational(1),      rational(1),
                             rational(1, 2),  rational(1, 9),   rational(-1, 72),
                             rational(-1, 225)};
    bool ok = true;
    for (int k = 0; k <= 6; ++k) ok = ok && exact[k] == want[k];
    const auto dbl = f0_coefficients(6);
    for (int k = 0; k <= 6; ++k)
        ok = ok && std::abs(dbl[k] - static_cast<double>(want[k])) <= 1e-14;
    report("f0-coefficients", ok);
}

void oracle_equivalence() {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    for (const auto& r : verify_scope("radii")) {
        if (!r.passed) {
            ok = false;
            detail += r.claim + "; ";
        }
    }
    const double dt = seconds_since(t0);
    if (dt >= 60.0) {
        ok = false;
        detail += "too slow (" + std::to_string(dt) + " s)";
    }
    if (detail.empty()) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "t=%.1fs", dt);
        detail = buf;
    }
    report("oracle-equivalence", ok, detail);
}

void sharpness_touches() {
    std::vector<radius_result> sharp;
    for (double alpha : {0.2, 0.5, 0.8}) sharp.push_back(starlike_order_radius(alpha));
    for (double beta : {1.2, 1.5, 1.8}) sharp.push_back(m_beta_radius(beta));
    for (double k : {0.5, 1.0, 2.0}) sharp.push_back(k_st_radius(k));
    for (int n : {1, 2, 3}) sharp.push_back(radius_Sn(n));
    for (int n : {1, 2, 3})
        for (double alpha : {0.0, 0.5}) sharp.push_back(radius_CSn(n, alpha));
    sharp.push_back(named_class_radius(named_class::lemniscate));
    sharp.push_back(named_class_radius(named_class::rl));
    sharp.push_back(named_class_radius(named_class::cardioid));
    sharp.push_back(named_class_radius(named_class::exponential));
    sharp.push_back(named_class_radius(named_class::crescent));
    for (double alpha : {1.0, 0.5, 0.0})
        sharp.push_back(named_class_radius(named_class::booth, alpha));
    for (int n : {1, 2}) {
        sharp.push_back(ratio_class_radius(ratio_class::F1, n));
        sharp.push_back(ratio_class_radius(ratio_class::F2, n));
        sharp.push_back(ratio_class_radius(ratio_class::F3, n));
    }
    bool ok = true;
    std::string detail;
    int count = 0;
    for (const auto& res : sharp) {
        if (!res.sharp || res.value >= 1.0) continue;
        const auto rep = certify_touch(res);
        ++count;
        if (rep.oracle_value >= 1e-6) {
            ok = false;
            detail += rep.claim + "; ";
        }
    }
    if (detail.empty()) detail = std::to_string(count) + " touches";
    report("sharpness-touches", ok, detail);
}

void geometry_suite() {
    bool ok = true;
    std::string detail;
    for (const char* scope : {"geometry", "inclusions"}) {
        for (const auto& r : verify_scope(scope)) {
            if (!r.passed) {
                ok = false;
                detail += r.claim + "; ";
            }
        }
    }
    report("geometry-suite", ok, detail);
}

void experimental_estimator() {
    const double est = estimate_k0_radius(4096);
    const bool ok = std::abs(est - 0.400435) <= 1e-3 && est > 0.37198;
    char buf[64];
    std::snprintf(buf, sizeof buf, "estimate=%.6f", est);
    report("experimental-estimator", ok, buf);
}

}  // namespace

int main() {
    constant_table();
    convexity_root();
    f0_coeffs();
    oracle_equivalence();
    sharpness_touches();
    geometry_suite();
    experimental_estimator();
    if (failures) std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures ? 1 : 0;
}

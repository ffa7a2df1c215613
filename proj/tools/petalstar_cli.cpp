// Command line front end: radius constants, boundary/figure data, extremal
// function evaluation and the numerical verification suite.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "petalstar/extremal.hpp"
#include "petalstar/petal.hpp"
#include "petalstar/radii.hpp"
#include "petalstar/rational_series.hpp"
#include "petalstar/verify.hpp"

using namespace petalstar;
using nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;

// fixed 12-significant-digit formatting keeps CSV output byte-stable
std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

struct output {
    std::string path;  // empty = stdout
    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file: " + path);
        f << text;
    }
};

std::string svg_polyline(const std::vector<cplx>& pts) {
    // minimal static overlay: unit box mapped from [-0.2, 2.2] x [-1.7, 1.7]
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"480\" "
          "viewBox=\"0 0 480 480\">\n<polyline fill=\"none\" stroke=\"black\" points=\"";
    for (const auto& w : pts) {
        const double x = (w.real() + 0.2) / 2.4 * 480.0;
        const double y = (1.7 - w.imag()) / 3.4 * 480.0;
        os << fmt(x) << ',' << fmt(y) << ' ';
    }
    os << "\"/>\n</svg>\n";
    return os.str();
}

json radius_json(const radius_result& r) {
    json j;
    j["class"] = r.source_class;
    j["target"] = r.target_class;
    j["params"] = json::object();
    for (const auto& [k, v] : r.params) j["params"][k] = v;
    j["value"] = r.value;
    j["method"] = r.method == radius_method::closed_form ? "closed_form"
                                                        : "root_of_equation";
    j["sharp"] = r.sharp;
    j["ref"] = r.ref;
    return j;
}

radius_result radius_by_name(const std::string& cls, int n, double alpha,
                             double beta, double k, double C, double D) {
    if (cls == "starlike-order") return starlike_order_radius(alpha);
    if (cls == "m-beta") return m_beta_radius(beta);
    if (cls == "k-st") return k_st_radius(k);
    if (cls == "convex-order") return convex_order_radius(alpha);
    if (cls == "s-n") return radius_Sn(n);
    if (cls == "f") return radius_F();
    if (cls == "cs-n") return radius_CSn(n, alpha);
    if (cls == "janowski") return radius_janowski(n, C, D);
    if (cls == "lemniscate") return named_class_radius(named_class::lemniscate);
    if (cls == "rl") return named_class_radius(named_class::rl);
    if (cls == "cardioid") return named_class_radius(named_class::cardioid);
    if (cls == "exponential") return named_class_radius(named_class::exponential);
    if (cls == "crescent") return named_class_radius(named_class::crescent);
    if (cls == "booth") return named_class_radius(named_class::booth, alpha);
    if (cls == "f1") return ratio_class_radius(ratio_class::F1, n);
    if (cls == "f2") return ratio_class_radius(ratio_class::F2, n);
    if (cls == "f3") return ratio_class_radius(ratio_class::F3, n);
    throw CLI::ValidationError("--class", "unknown class id: " + cls);
}

std::vector<cplx> curve_points(const std::string& curve, int samples) {
    const double s = asinh_one();
    const auto geo = inclusion_geometry();
    std::vector<cplx> pts;
    pts.reserve(static_cast<size_t>(samples));
    auto param = [samples](int i) { return static_cast<double>(i) / samples; };
    for (int i = 0; i < samples; ++i) {
        const double u = param(i);
        if (curve == "gamma0") {
            pts.push_back(boundary_point(2.0 * kPi * u));
        } else if (curve == "gamma1") {
            pts.push_back(cplx(1.0 - s, -kPi / 2.0 + kPi * u));
        } else if (curve == "gamma2") {
            pts.push_back(cplx(1.0 + s, -kPi / 2.0 + kPi * u));
        } else if (curve == "gamma3") {
            // the two sector rays from the origin, upper then lower
            const double phi = std::atan(1.0 / geo.t);
            const double half = 2.0 * (u < 0.5 ? u : u - 0.5);
            pts.push_back(std::polar(2.5 * half, u < 0.5 ? phi : -phi));
        } else if (curve == "gamma4") {
            const double y = -kPi / 2.0 + kPi * u;
            pts.push_back(cplx(geo.parabola.b + y * y / (4.0 * geo.parabola.a), y));
        } else if (curve == "gamma5") {
            const auto e = ellipse_at(geo.k_min);
            pts.push_back(cplx(e.x0 + e.a * std::cos(2.0 * kPi * u),
                               e.b * std::sin(2.0 * kPi * u)));
        } else if (curve == "gamma6") {
            pts.push_back(1.0 + std::polar(s, 2.0 * kPi * u));
        } else if (curve == "gamma7") {
            pts.push_back(1.0 + std::polar(kPi / 2.0, 2.0 * kPi * u));
        } else {
            throw CLI::ValidationError("--curve", "unknown curve id: " + curve);
        }
    }
    return pts;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"petal-shaped starlike class: radius constants, domain "
                 "geometry and numerical certification"};
    app.require_subcommand(1);

    std::string format = "auto", out_path;
    int samples = 4096;
    double tol = 1e-6;
    app.add_option("--format", format, "output format: csv, json or svg")
        ->check(CLI::IsMember({"auto", "csv", "json", "svg"}));
    app.add_option("--out", out_path, "output path (default stdout)");
    app.add_option("--samples", samples, "sample count (default 4096)");
    app.add_option("--tol", tol, "tolerance (default 1e-6)");

    // radius
    auto* cmd_radius = app.add_subcommand("radius", "compute one radius constant");
    std::string r_class;
    int r_n = 1;
    double r_alpha = 0.0, r_beta = 2.0, r_k = 1.0, r_C = 1.0, r_D = -1.0;
    cmd_radius->add_option("--class", r_class, "class id")->required();
    cmd_radius->add_option("--n", r_n);
    cmd_radius->add_option("--alpha", r_alpha);
    cmd_radius->add_option("--beta", r_beta);
    cmd_radius->add_option("--k", r_k);
    cmd_radius->add_option("--C", r_C);
    cmd_radius->add_option("--D", r_D);

    // boundary
    auto* cmd_boundary = app.add_subcommand("boundary", "emit a figure curve");
    std::string b_curve;
    cmd_boundary->add_option("--curve", b_curve, "gamma0..gamma7")->required();

    // extremal
    auto* cmd_extremal = app.add_subcommand("extremal", "extremal function data");
    std::string e_id, e_eval;
    int e_coeffs = 0, e_n = 1;
    double e_alpha = 0.0;
    cmd_extremal->add_option("--id", e_id, "function id")->required();
    cmd_extremal->add_option("--coeffs", e_coeffs, "print the first N Taylor coefficients");
    cmd_extremal->add_option("--eval", e_eval, "evaluate at re,im");
    cmd_extremal->add_option("--n", e_n);
    cmd_extremal->add_option("--alpha", e_alpha);

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run the verification suite");
    std::string v_scope = "all";
    cmd_verify->add_option("--scope", v_scope, "all, radii, inclusions or geometry")
        ->check(CLI::IsMember({"all", "radii", "inclusions", "geometry"}));

    // inclusion-geometry
    auto* cmd_geo = app.add_subcommand("inclusion-geometry",
                                       "inclusion-relation constants and conics");

    // let the global flags appear after the subcommand name as well
    for (auto* sc : {cmd_radius, cmd_boundary, cmd_extremal, cmd_verify, cmd_geo})
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const output out{out_path};
    try {
        if (*cmd_radius) {
            const auto res = radius_by_name(r_class, r_n, r_alpha, r_beta, r_k, r_C, r_D);
            if (format == "csv") {
                std::ostringstream os;
                os << "class,value,method,sharp\n"
                   << res.source_class << ',' << fmt(res.value) << ','
                   << (res.method == radius_method::closed_form ? "closed_form"
                                                                : "root_of_equation")
                   << ',' << (res.sharp ? "true" : "false") << '\n';
                out.write(os.str());
            } else {
                out.write(radius_json(res).dump(2) + "\n");
            }
        } else if (*cmd_boundary) {
            if (samples < 8) throw CLI::ValidationError("--samples", "need at least 8");
            const auto pts = curve_points(b_curve, samples);
            if (format == "svg") {
                out.write(svg_polyline(pts));
            } else {
                std::ostringstream os;
                os << "theta_or_param,re,im\n";
                for (int i = 0; i < samples; ++i) {
                    const double u = b_curve == "gamma0" || b_curve == "gamma5" ||
                                             b_curve == "gamma6" || b_curve == "gamma7"
                                         ? 2.0 * kPi * i / samples
                                         : static_cast<double>(i) / samples;
                    os << fmt(u) << ',' << fmt(pts[static_cast<size_t>(i)].real())
                       << ',' << fmt(pts[static_cast<size_t>(i)].imag()) << '\n';
                }
                out.write(os.str());
            }
        } else if (*cmd_extremal) {
            if (e_coeffs > 0) {
                std::ostringstream os;
                os << "k,coefficient\n";
                if (e_id == "f0") {
                    const auto c = f0_coefficients_exact(e_coeffs);
                    for (int k = 1; k <= e_coeffs; ++k) {
                        std::ostringstream rs;
                        rs << c[k];
                        os << k << ',' << rs.str() << '\n';
                    }
                } else {
                    // Cauchy coefficients on |z| = 1/2 (trapezoid rule)
                    const auto f = function_spec::from_name(e_id, e_n, e_alpha);
                    const int N = 512;
                    const double rc = 0.5;
                    std::vector<cplx> vals(N);
                    for (int j = 0; j < N; ++j)
                        vals[static_cast<size_t>(j)] = f.evaluate(std::polar(rc, 2.0 * kPi * j / N));
                    for (int k = 1; k <= e_coeffs; ++k) {
                        cplx acc = 0.0;
                        for (int j = 0; j < N; ++j)
                            acc += vals[static_cast<size_t>(j)] *
                                   std::polar(1.0, -2.0 * kPi * k * j / N);
                        os << k << ',' << fmt((acc / double(N) / std::pow(rc, k)).real())
                           << '\n';
                    }
                }
                out.write(os.str());
            } else if (!e_eval.empty()) {
                double re = 0.0, im = 0.0;
                if (std::sscanf(e_eval.c_str(), "%lf,%lf", &re, &im) != 2)
                    throw CLI::ValidationError("--eval", "expected re,im");
                const cplx z(re, im);
                if (std::abs(z) >= 1.0)
                    throw CLI::ValidationError("--eval", "|z| must be < 1");
                const auto f = function_spec::from_name(e_id, e_n, e_alpha);
                const cplx fz = f.evaluate(z), w = f.log_derivative(z);
                json j;
                j["z"] = {z.real(), z.imag()};
                j["f"] = {fz.real(), fz.imag()};
                j["log_derivative"] = {w.real(), w.imag()};
                out.write(j.dump(2) + "\n");
            } else {
                throw CLI::ValidationError("extremal", "need --coeffs or --eval");
            }
        } else if (*cmd_verify) {
            const auto reports = verify_scope(v_scope, samples, tol);
            std::ostringstream os;
            os << "claim,claimed,oracle,diff,passed\n";
            bool all_passed = true;
            for (const auto& r : reports) {
                os << r.claim << ',' << fmt(r.claimed) << ',' << fmt(r.oracle_value)
                   << ',' << fmt(r.abs_diff) << ',' << (r.passed ? "true" : "false")
                   << '\n';
                all_passed = all_passed && r.passed;
            }
            out.write(os.str());
            return all_passed ? 0 : 1;
        } else if (*cmd_geo) {
            const auto g = inclusion_geometry();
            const auto e = ellipse_at(g.k_min);
            json j;
            j["alpha_max"] = g.alpha_max;
            j["beta_min"] = g.beta_min;
            j["k_min"] = g.k_min;
            j["gamma_min"] = g.gamma_min;
            j["t"] = g.t;
            j["parabola"] = {{"focus_parameter", g.parabola.a}, {"vertex", g.parabola.b}};
            j["ellipse_at_k_min"] = {{"x0", e.x0}, {"a", e.a}, {"b", e.b}};
            out.write(j.dump(2) + "\n");
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

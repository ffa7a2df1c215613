#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "petalstar/extremal.hpp"
#include "petalstar/petal.hpp"
#include "petalstar/radii.hpp"
#include "petalstar/verify.hpp"

namespace py = pybind11;
using namespace petalstar;

namespace {

py::dict radius_dict(const radius_result& r) {
    py::dict d;
    d["value"] = r.value;
    d["source_class"] = r.source_class;
    d["target_class"] = r.target_class;
    d["params"] = r.params;
    d["method"] = r.method == radius_method::closed_form ? "closed_form"
                                                        : "root_of_equation";
    d["sharp"] = r.sharp;
    return d;
}

named_class named_from(const std::string& name) {
    if (name == "lemniscate") return named_class::lemniscate;
    if (name == "rl") return named_class::rl;
    if (name == "cardioid") return named_class::cardioid;
    if (name == "exponential") return named_class::exponential;
    if (name == "crescent") return named_class::crescent;
    if (name == "booth") return named_class::booth;
    throw std::invalid_argument("unknown named class: " + name);
}

ratio_class ratio_from(const std::string& name) {
    if (name == "f1") return ratio_class::F1;
    if (name == "f2") return ratio_class::F2;
    if (name == "f3") return ratio_class::F3;
    throw std::invalid_argument("unknown ratio class: " + name);
}

}  // namespace

PYBIND11_MODULE(_petalstar, m) {
    m.doc() = "petal-shaped starlike class: radii, geometry and verification";

    m.def("asinh_one", &asinh_one);
    m.def("rho", &rho, py::arg("z"));
    m.def("contains", &contains, py::arg("w"), py::arg("tol") = 0.0);
    m.def("boundary_point", &boundary_point, py::arg("theta"));
    m.def("inscribed_disk_radius", &inscribed_disk_radius, py::arg("r"));
    m.def("disk_in_petal", [](double a) {
        const auto d = disk_in_petal(a);
        return py::make_tuple(d.center, d.radius);
    }, py::arg("center"));
    m.def("bounds", [](double r) {
        const auto b = bounds(r);
        py::dict d;
        d["re_min"] = b.re_min;
        d["re_max"] = b.re_max;
        d["im_max"] = b.im_max;
        d["mod_min"] = b.mod_min;
        d["mod_max"] = b.mod_max;
        d["arg_max"] = b.arg_max;
        return d;
    }, py::arg("r"));
    m.def("inclusion_geometry", [] {
        const auto g = inclusion_geometry();
        py::dict d;
        d["alpha_max"] = g.alpha_max;
        d["beta_min"] = g.beta_min;
        d["k_min"] = g.k_min;
        d["gamma_min"] = g.gamma_min;
        d["t"] = g.t;
        d["parabola_a"] = g.parabola.a;
        d["parabola_b"] = g.parabola.b;
        return d;
    });

    m.def("starlike_order_radius",
          [](double alpha) { return radius_dict(starlike_order_radius(alpha)); },
          py::arg("alpha"));
    m.def("m_beta_radius",
          [](double beta) { return radius_dict(m_beta_radius(beta)); },
          py::arg("beta"));
    m.def("k_st_radius", [](double k) { return radius_dict(k_st_radius(k)); },
          py::arg("k"));
    m.def("convex_order_radius",
          [](double alpha) { return radius_dict(convex_order_radius(alpha)); },
          py::arg("alpha") = 0.0);
    m.def("radius_sn", [](int n) { return radius_dict(radius_Sn(n)); },
          py::arg("n"));
    m.def("radius_f", [] { return radius_dict(radius_F()); });
    m.def("radius_csn",
          [](int n, double alpha) { return radius_dict(radius_CSn(n, alpha)); },
          py::arg("n"), py::arg("alpha"));
    m.def("radius_janowski",
          [](int n, double C, double D) { return radius_dict(radius_janowski(n, C, D)); },
          py::arg("n"), py::arg("C"), py::arg("D"));
    m.def("named_class_radius",
          [](const std::string& cls, double alpha) {
              return radius_dict(named_class_radius(named_from(cls), alpha));
          },
          py::arg("cls"), py::arg("alpha") = 0.0);
    m.def("ratio_class_radius",
          [](const std::string& cls, int n) {
              return radius_dict(ratio_class_radius(ratio_from(cls), n));
          },
          py::arg("cls"), py::arg("n") = 1);

    m.def("f0_coefficients", [](int N) {
        const auto c = f0_coefficients(N);
        std::vector<double> out(c.coeffs.begin(), c.coeffs.end());
        return out;
    }, py::arg("n"));
    m.def("extremal_eval",
          [](const std::string& name, cplx z, int n, double alpha) {
              const auto f = function_spec::from_name(name, n, alpha);
              return py::make_tuple(f.evaluate(z), f.log_derivative(z));
          },
          py::arg("name"), py::arg("z"), py::arg("n") = 1, py::arg("alpha") = 0.0);

    m.def("estimate_k0_radius", &estimate_k0_radius, py::arg("samples") = 4096);
    m.def("verify", [](const std::string& scope, int samples, double r_tol) {
        py::list rows;
        for (const auto& r : verify_scope(scope, samples, r_tol)) {
            py::dict d;
            d["claim"] = r.claim;
            d["claimed"] = r.claimed;
            d["oracle"] = r.oracle_value;
            d["diff"] = r.abs_diff;
            d["passed"] = r.passed;
            rows.append(d);
        }
        return rows;
    }, py::arg("scope") = "all", py::arg("samples") = 4096, py::arg("r_tol") = 1e-6);
}

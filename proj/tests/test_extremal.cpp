#include <doctest.h>

#include <cmath>
#include <numbers>

#include "petalstar/extremal.hpp"
#include "petalstar/petal.hpp"
#include "petalstar/rational_series.hpp"

using namespace petalstar;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("integral representation reproduces the catalog closed forms") {
    // q(z) = 1 + z/5  ->  f = z exp(z/5)
    auto f1 = function_spec::integral_rep({generator_spec::kind::table1_q1});
    // q(z) = (5+2z)/(5+z)  ->  f = z + z^2/5
    auto f2 = function_spec::integral_rep({generator_spec::kind::table1_q2});
    // q(z) = (7+4z)/(7+z)  ->  f = z (1 + z/7)^3
    auto f3 = function_spec::integral_rep({generator_spec::kind::table1_q3});
    for (const cplx z : {cplx(0.5, 0.0), cplx(-0.3, 0.6), cplx(0.1, -0.85)}) {
        CHECK(std::abs(f1.evaluate(z) - z * std::exp(z / 5.0)) < 1e-12);
        CHECK(std::abs(f2.evaluate(z) - (z + z * z / 5.0)) < 1e-12);
        CHECK(std::abs(f3.evaluate(z) - z * std::pow(1.0 + z / 7.0, 3)) < 1e-12);
    }
    CHECK(std::abs(f2.evaluate(cplx(0.5)) - 0.55) < 1e-12);

    // the degenerate generator q == 1 yields the identity
    generator_spec unit{generator_spec::kind::janowski};
    auto fid = function_spec::integral_rep(unit);
    CHECK(std::abs(fid.evaluate(cplx(0.4, 0.1)) - cplx(0.4, 0.1)) < 1e-13);
}

TEST_CASE("f0 coefficients, exact and floating") {
    const auto exact = f0_coefficients_exact(6);
    CHECK(exact[0] == rational(0));
    CHECK(exact[1] == rational(1));
    CHECK(exact[2] == rational(1));
    CHECK(exact[3] == rational(1, 2));
    CHECK(exact[4] == rational(1, 9));
    CHECK(exact[5] == rational(-1, 72));
    CHECK(exact[6] == rational(-1, 225));

    const auto dbl = f0_coefficients(6);
    CHECK(std::abs(dbl[4] - 1.0 / 9.0) < 1e-14);
    CHECK(std::abs(dbl[5] + 1.0 / 72.0) < 1e-14);
    CHECK(std::abs(dbl[6] + 1.0 / 225.0) < 1e-14);

    const auto one = f0_coefficients(1);
    CHECK(one[0] == 0.0);
    CHECK(one[1] == 1.0);
}

TEST_CASE("f0: quadrature and series evaluation agree") {
    auto f0 = function_spec::closed(function_spec::closed_id::f0_petal);
    const auto c = f0_coefficients(64);
    for (const cplx z : {cplx(0.3, 0.0), cplx(0.4, 0.0), cplx(0.2, 0.35), cplx(-0.5, 0.1)}) {
        cplx acc = 0.0;
        for (int k = c.order(); k >= 0; --k) acc = acc * z + c[k];
        CHECK(std::abs(f0.evaluate(z) - acc) < 1e-12);
    }
    CHECK(f0.evaluate(cplx(0.0)) == cplx(0.0));
}

TEST_CASE("log derivative of an integral form is the generator") {
    for (auto kind : {generator_spec::kind::petal, generator_spec::kind::rl,
                      generator_spec::kind::crescent, generator_spec::kind::sine}) {
        generator_spec q{kind};
        auto f = function_spec::integral_rep(q);
        for (int i = 0; i < 16; ++i) {
            const cplx z = std::polar(0.8, 2.0 * kPi * i / 16);
            CHECK(std::abs(f.log_derivative(z) - q(z)) < 1e-12);
        }
    }
    auto f0 = function_spec::closed(function_spec::closed_id::f0_petal);
    CHECK(f0.log_derivative(cplx(0.0)) == cplx(1.0));
    const cplx z(0.3, 0.2);
    CHECK(std::abs(f0.log_derivative(z) - rho(z)) < 1e-14);
}

TEST_CASE("closed-form log derivatives") {
    auto sn = function_spec::closed(function_spec::closed_id::sn_ext, 1);
    const cplx z(0.25, -0.4);
    CHECK(std::abs(sn.log_derivative(z) - (1.0 + 2.0 * z / (1.0 - z * z))) < 1e-13);

    auto booth = function_spec::closed(function_spec::closed_id::booth_ext, 1, 0.7);
    CHECK(std::abs(booth.log_derivative(z) - (1.0 + z / (1.0 - 0.7 * z * z))) < 1e-13);
}

TEST_CASE("closed forms differentiate consistently (finite-difference check)") {
    // z f'/f from the stored expression vs a central difference of evaluate
    const cplx z(0.31, 0.22);
    const double h = 1e-6;
    for (auto id : {function_spec::closed_id::lemniscate_ext,
                    function_spec::closed_id::cardioid_ext,
                    function_spec::closed_id::sn_ext,
                    function_spec::closed_id::csn_ext,
                    function_spec::closed_id::f1_pair,
                    function_spec::closed_id::f2_pair,
                    function_spec::closed_id::f3_pair}) {
        auto f = function_spec::closed(id, 2, 0.3);
        const cplx d = (f.evaluate(z + h) - f.evaluate(z - h)) / (2.0 * h);
        CHECK(std::abs(z * d / f.evaluate(z) - f.log_derivative(z)) < 1e-7);
    }
}

TEST_CASE("normalization f(z)/z -> 1 at the origin") {
    for (const char* name : {"f0", "table1-f1", "table1-f2", "table1-f3",
                             "lemniscate", "rl", "cardioid", "exponential",
                             "crescent", "sn", "csn", "f1", "f2", "f3"}) {
        auto f = function_spec::from_name(name, 2, 0.4);
        const cplx z(1e-6, 0.0);
        CHECK(std::abs(f.evaluate(z) / z - 1.0) < 1e-5);
    }
    auto booth0 = function_spec::from_name("booth", 1, 0.0);
    auto booth1 = function_spec::from_name("booth", 1, 1.0);
    const cplx z(1e-6, 0.0);
    CHECK(std::abs(booth0.evaluate(z) / z - 1.0) < 1e-5);
    CHECK(std::abs(booth1.evaluate(z) / z - 1.0) < 1e-5);
}

TEST_CASE("catalog generators are subordinate to the petal") {
    for (auto kind : {generator_spec::kind::table1_q1, generator_spec::kind::table1_q2,
                      generator_spec::kind::table1_q3}) {
        generator_spec q{kind};
        for (int i = 0; i < 4096; ++i) {
            const cplx z = std::polar(0.999, 2.0 * kPi * i / 4096);
            CHECK(contains(q(z), -1e-9));
        }
    }
}

TEST_CASE("sharpness witnesses touch the boundary") {
    const double s = asinh_one();

    auto check_touch = [](const radius_result& res) {
        const auto w = sharpness_witness(res);
        CHECK(std::abs(w.f.log_derivative(w.z_star) - w.expected_w) < 1e-8);
    };
    check_touch(named_class_radius(named_class::lemniscate));
    check_touch(k_st_radius(1.0));
    check_touch(ratio_class_radius(ratio_class::F1, 1));
    check_touch(radius_Sn(2));
    check_touch(radius_CSn(2, 0.5));

    // specific values from the touch identities
    {
        const auto res = named_class_radius(named_class::lemniscate);
        const auto w = sharpness_witness(res);
        CHECK(std::abs(w.expected_w - cplx(1.0 - s)) < 1e-14);
    }
    {
        const auto res = k_st_radius(1.0);
        const auto w = sharpness_witness(res);
        CHECK(w.expected_w.real() == doctest::Approx(0.5).epsilon(1e-14));
        CHECK(std::abs(w.z_star - cplx(-std::sinh(0.5))) < 1e-14);
    }

    // non-sharp and whole-disk results have no witness
    CHECK_THROWS_AS(sharpness_witness(radius_F()), std::invalid_argument);
    CHECK_THROWS_AS(sharpness_witness(starlike_order_radius(0.05)), std::invalid_argument);
}

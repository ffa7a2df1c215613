#include <doctest.h>

#include <cmath>
#include <numbers>

#include "petalstar/kernel.hpp"
#include "petalstar/rational_series.hpp"

using namespace petalstar;

namespace {
// fixed-seed generator for reproducible disk samples
struct lcg {
    uint64_t state = 0x243f6a8885a308d3ULL;
    double next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<double>(state >> 11) * 0x1.0p-53;
    }
    cplx disk_point(double rmax) {
        const double r = rmax * std::sqrt(next());
        return std::polar(r, 2.0 * std::numbers::pi * next());
    }
};
}  // namespace

TEST_CASE("asinh principal branch values") {
    CHECK(asinh_principal(cplx(0.0)) == cplx(0.0));
    CHECK(asinh_principal(cplx(1.0)).real() == doctest::Approx(std::log(1.0 + std::sqrt(2.0))).epsilon(1e-14));
    CHECK(asinh_principal(cplx(1.0)).imag() == 0.0);
    CHECK(std::abs(asinh_principal(cplx(1.0)).real() - 0.881374) < 1e-6);

    const cplx z(0.0, 0.5);
    CHECK(std::abs(sinh_c(asinh_principal(z)) - z) < 1e-12);

    // boundary closure: +-i are finite on the principal branch
    CHECK(std::abs(asinh_principal(cplx(0.0, 1.0)) - cplx(0.0, std::numbers::pi / 2.0)) < 1e-14);
    CHECK(std::abs(asinh_principal(cplx(0.0, -1.0)) - cplx(0.0, -std::numbers::pi / 2.0)) < 1e-14);
}

TEST_CASE("asinh rejects the branch cut and non-finite input") {
    CHECK_THROWS_AS(asinh_principal(cplx(0.0, 1.5)), std::domain_error);
    CHECK_THROWS_AS(asinh_principal(cplx(0.0, -2.0)), std::domain_error);
    CHECK_THROWS_AS(asinh_principal(cplx(std::nan(""), 0.0)), std::domain_error);
}

TEST_CASE("rho values") {
    CHECK(rho(cplx(0.0)) == cplx(1.0));
    CHECK(rho(cplx(1.0)).real() == doctest::Approx(1.0 + asinh_one()).epsilon(1e-14));
    CHECK(rho(cplx(-1.0)).real() == doctest::Approx(1.0 - asinh_one()).epsilon(1e-14));
}

TEST_CASE("sinh_c matches the exponential formula") {
    const cplx w(0.3, 0.4);
    const cplx direct = (std::exp(w) - std::exp(-w)) / 2.0;
    CHECK(std::abs(sinh_c(w) - direct) < 1e-14);
    CHECK(sinh_c(cplx(0.0)) == cplx(0.0));
    CHECK(std::abs(sinh_c(asinh_principal(cplx(1.0))) - 1.0) < 1e-14);
}

TEST_CASE("round trip, conjugation and crescent identity on random samples") {
    lcg rng;
    double rt = 0.0, cj = 0.0, cr = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const cplx z = rng.disk_point(0.999);
        rt = std::max(rt, std::abs(sinh_c(asinh_principal(z)) - z));
        cj = std::max(cj, std::abs(asinh_principal(std::conj(z)) - std::conj(asinh_principal(z))));
        cr = std::max(cr, std::abs(std::exp(rho(z) - 1.0) - (z + std::sqrt(1.0 + z * z))));
    }
    CHECK(rt < 1e-12);
    CHECK(cj < 1e-14);
    CHECK(cr < 1e-12);
}

TEST_CASE("asinh series coefficients") {
    const auto s3 = asinh_series(3);
    CHECK(s3[0] == 0.0);
    CHECK(s3[1] == 1.0);
    CHECK(s3[2] == 0.0);
    CHECK(s3[3] == doctest::Approx(-1.0 / 6.0).epsilon(1e-16));

    const auto s7 = asinh_series(7);
    CHECK(s7[5] == doctest::Approx(3.0 / 40.0).epsilon(1e-16));
    CHECK(s7[7] == doctest::Approx(-5.0 / 112.0).epsilon(1e-16));

    const auto s0 = asinh_series(0);
    CHECK(s0.order() == 0);
    CHECK(s0[0] == 0.0);

    // exact-rational route agrees literally
    const auto r7 = asinh_series_t<rational>(7);
    CHECK(r7[3] == rational(-1, 6));
    CHECK(r7[5] == rational(3, 40));
    CHECK(r7[7] == rational(-5, 112));
}

TEST_CASE("series_exp") {
    series<double> zero(0);
    const auto e0 = series_exp(zero);
    CHECK(e0[0] == 1.0);

    series<double> lin(3);
    lin[1] = 1.0;
    const auto e1 = series_exp(lin);
    CHECK(e1[0] == 1.0);
    CHECK(e1[1] == 1.0);
    CHECK(e1[2] == doctest::Approx(0.5));
    CHECK(e1[3] == doctest::Approx(1.0 / 6.0));

    series<double> bad(2);
    bad[0] = 1.0;
    CHECK_THROWS_AS(series_exp(bad), std::invalid_argument);
}

TEST_CASE("series_integrate") {
    series<double> lin(1);
    lin[1] = 1.0;
    const auto i1 = series_integrate(lin);
    CHECK(i1[0] == 0.0);
    CHECK(i1[1] == 1.0);

    const auto i3 = series_integrate(asinh_series(3));
    CHECK(i3[3] == doctest::Approx(-1.0 / 18.0).epsilon(1e-16));
    const auto i5 = series_integrate(asinh_series(5));
    CHECK(i5[5] == doctest::Approx(3.0 / 200.0).epsilon(1e-16));

    series<double> bad(1);
    bad[0] = 2.0;
    CHECK_THROWS_AS(series_integrate(bad), std::invalid_argument);
}

TEST_CASE("series evaluation matches asinh at z = 0.3") {
    const auto s = asinh_series(21);
    CHECK(std::abs(series_eval(s, 0.3) - std::asinh(0.3)) < 1e-10);
}

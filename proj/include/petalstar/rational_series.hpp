#ifndef PETALSTAR_RATIONAL_SERIES_HPP
#define PETALSTAR_RATIONAL_SERIES_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include "petalstar/kernel.hpp"

namespace petalstar {

using rational = boost::multiprecision::cpp_rational;

/// Exact-rational Taylor coefficients of the petal extremal f0 up to order N:
/// [0, 1, 1, 1/2, 1/9, -1/72, -1/225, ...].
inline series<rational> f0_coefficients_exact(int N) {
    if (N < 1) throw std::domain_error("f0_coefficients_exact: N must be >= 1");
    auto inner = series_exp(series_integrate(asinh_series_t<rational>(N - 1)));
    series<rational> out(N);  // leading factor z shifts everything by one
    for (int k = 1; k <= N; ++k)
        out[k] = inner[k - 1];
    return out;
}

}  // namespace petalstar

#endif

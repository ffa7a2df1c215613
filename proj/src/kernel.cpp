#include "petalstar/kernel.hpp"

#include <cmath>

namespace petalstar {

double asinh_one() {
    static const double v = std::log(1.0 + std::sqrt(2.0));
    return v;
}

cplx asinh_principal(cplx z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::domain_error("asinh_principal: non-finite input");
    if (z.real() == 0.0 && std::abs(z.imag()) > 1.0)
        throw std::domain_error(
            "asinh_principal: input on the branch cut (-i inf,-i) u (i, i inf)");
    if (z.imag() == 0.0)  // keep reals exactly real
        return cplx(std::asinh(z.real()), 0.0);
    return std::log(z + std::sqrt(1.0 + z * z));
}

cplx rho(cplx z) { return 1.0 + asinh_principal(z); }

cplx sinh_c(cplx w) { return std::sinh(w); }

series<double> asinh_series(int N) { return asinh_series_t<double>(N); }

}  // namespace petalstar

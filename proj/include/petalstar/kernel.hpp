#ifndef PETALSTAR_KERNEL_HPP
#define PETALSTAR_KERNEL_HPP

#include <complex>
#include <stdexcept>
#include <vector>

namespace petalstar {

using cplx = std::complex<double>;

/// ln(1 + sqrt(2)), the value of asinh at 1.
double asinh_one();

/// Principal branch of the inverse hyperbolic sine, log(z + sqrt(1+z^2)).
/// Analytic off the open cut segments (-i*inf, -i) and (i, i*inf) of the
/// imaginary axis; the endpoints +-i evaluate to +-i*pi/2.
/// Throws std::domain_error for cut points and non-finite input.
cplx asinh_principal(cplx z);

/// rho(z) = 1 + asinh(z), the petal generator.
cplx rho(cplx z);

/// Complex hyperbolic sine.
cplx sinh_c(cplx w);

// Truncated Taylor series about 0; coeffs[k] is the coefficient of z^k.
template <typename T>
struct series {
    std::vector<T> coeffs;

    series() = default;
    explicit series(int order) : coeffs(static_cast<size_t>(order) + 1, T(0)) {}
    explicit series(std::vector<T> c) : coeffs(std::move(c)) {}

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    T&       operator[](int k)       { return coeffs[static_cast<size_t>(k)]; }
    const T& operator[](int k) const { return coeffs[static_cast<size_t>(k)]; }
};

// exp(s) to the same truncation order via the derivative recurrence
//   b_0 = 1,  k*b_k = sum_{j=1..k} j*c_j*b_{k-j}.
// Requires s.coeffs[0] == 0.
template <typename T>
series<T> series_exp(const series<T>& s) {
    if (s.order() < 0 || s[0] != T(0))
        throw std::invalid_argument("series_exp: constant term must be zero");
    const int n = s.order();
    series<T> b(n);
    b[0] = T(1);
    for (int k = 1; k <= n; ++k) {
        T acc(0);
        for (int j = 1; j <= k; ++j)
            acc += T(j) * s[j] * b[k - j];
        b[k] = acc / T(k);
    }
    return b;
}

// Termwise integral of s(t)/t from 0 to z: coefficient at z^k becomes c_k/k.
// Requires s.coeffs[0] == 0 (removable singularity at the origin).
template <typename T>
series<T> series_integrate(const series<T>& s) {
    if (s.order() < 0 || s[0] != T(0))
        throw std::invalid_argument("series_integrate: constant term must be zero");
    series<T> out(s.order());
    for (int k = 1; k <= s.order(); ++k)
        out[k] = s[k] / T(k);
    return out;
}

// Horner evaluation.
template <typename T>
T series_eval(const series<T>& s, T z) {
    T acc(0);
    for (int k = s.order(); k >= 0; --k)
        acc = acc * z + s[k];
    return acc;
}

/// Taylor coefficients of asinh z up to order N:
/// c_1 = 1, c_3 = -1/6, c_5 = 3/40, c_7 = -5/112, even coefficients zero.
series<double> asinh_series(int N);

// Coefficient-exact variant for any rational-like type. The odd coefficients
// follow a_m = -a_{m-1} * (2m-1)^2 / (2m(2m+1)) starting from a_0 = 1.
template <typename T>
series<T> asinh_series_t(int N) {
    if (N < 0) throw std::domain_error("asinh_series: order must be >= 0");
    series<T> out(N);
    T a(1);
    for (int m = 0; 2 * m + 1 <= N; ++m) {
        if (m > 0)
            a = -a * T((2 * m - 1) * (2 * m - 1)) / T(2 * m * (2 * m + 1));
        out[2 * m + 1] = a;
    }
    return out;
}

}  // namespace petalstar

#endif

#include "petalstar/extremal.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace petalstar {

namespace {

constexpr double kPi = std::numbers::pi;

cplx pow_c(cplx z, double p) { return std::pow(z, p); }

// --- 15-point Gauss-Legendre rule on [-1,1], nodes by Newton iteration ----

struct gauss_rule {
    std::array<double, 15> x{}, w{};
    gauss_rule() {
        const int n = 15;
        for (int i = 0; i < n; ++i) {
            double t = std::cos(kPi * (i + 0.75) / (n + 0.5));
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = t;
                for (int k = 2; k <= n; ++k) {
                    const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                    p0 = p1; p1 = p2;
                }
                const double dp = n * (t * p1 - p0) / (t * t - 1.0);
                const double dt = p1 / dp;
                t -= dt;
                if (std::abs(dt) < 1e-16) break;
            }
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                p0 = p1; p1 = p2;
            }
            const double dp = n * (t * p1 - p0) / (t * t - 1.0);
            x[static_cast<size_t>(i)] = t;
            w[static_cast<size_t>(i)] = 2.0 / ((1.0 - t * t) * dp * dp);
        }
    }
};

const gauss_rule& gl15() {
    static const gauss_rule r;
    return r;
}

template <typename F>
cplx gl15_panel(const F& f, double a, double b) {
    const auto& r = gl15();
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    cplx acc = 0.0;
    for (int i = 0; i < 15; ++i)
        acc += r.w[static_cast<size_t>(i)] * f(mid + half * r.x[static_cast<size_t>(i)]);
    return half * acc;
}

template <typename F>
cplx adaptive_quad(const F& f, double a, double b, cplx whole, double tol,
                   int depth) {
    const double mid = 0.5 * (a + b);
    const cplx left = gl15_panel(f, a, mid);
    const cplx right = gl15_panel(f, mid, b);
    const cplx sum = left + right;
    if (std::abs(sum - whole) < tol || depth >= 24)
        return sum;
    return adaptive_quad(f, a, mid, left, 0.5 * tol, depth + 1) +
           adaptive_quad(f, mid, b, right, 0.5 * tol, depth + 1);
}

// Taylor coefficients of (q(t)-1)/t by a trapezoid Cauchy integral on a
// small circle; spectrally accurate for generators analytic on |t| <= 0.3.
std::vector<cplx> near_zero_coeffs(const generator_spec& q) {
    const int N = 64, terms = 12;
    const double rc = 0.3;
    std::vector<cplx> samples(N);
    for (int j = 0; j < N; ++j) {
        const cplx t = std::polar(rc, 2.0 * kPi * j / N);
        samples[static_cast<size_t>(j)] = (q(t) - 1.0) / t;
    }
    std::vector<cplx> a(terms);
    for (int m = 0; m < terms; ++m) {
        cplx acc = 0.0;
        for (int j = 0; j < N; ++j)
            acc += samples[static_cast<size_t>(j)] *
                   std::polar(1.0, -2.0 * kPi * m * j / N);
        a[static_cast<size_t>(m)] = acc / (double(N) * std::pow(rc, m));
    }
    return a;
}

cplx eval_poly(const std::vector<cplx>& a, cplx t) {
    cplx acc = 0.0;
    for (auto it = a.rbegin(); it != a.rend(); ++it)
        acc = acc * t + *it;
    return acc;
}

}  // namespace

cplx generator_spec::operator()(cplx z) const {
    switch (k) {
        case kind::petal:       return rho(z);
        case kind::lemniscate:  return std::sqrt(1.0 + z);
        case kind::rl: {
            const double c = std::sqrt(2.0) - 1.0;
            return std::sqrt(2.0) -
                   c * std::sqrt(1.0 - z) / std::sqrt(1.0 + 2.0 * c * z);
        }
        case kind::cardioid:    return 1.0 + 4.0 * z / 3.0 + 2.0 * z * z / 3.0;
        case kind::exponential: return std::exp(z);
        case kind::crescent:    return z + std::sqrt(1.0 + z * z);
        case kind::sine:        return 1.0 + std::sin(z);
        case kind::booth:       return 1.0 + z / (1.0 - alpha * z * z);
        case kind::janowski:    return (1.0 + C * z) / (1.0 + D * z);
        case kind::strong_power:return pow_c((1.0 + z) / (1.0 - z), gamma);
        case kind::table1_q1:   return 1.0 + z / 5.0;
        case kind::table1_q2:   return (5.0 + 2.0 * z) / (5.0 + z);
        case kind::table1_q3:   return (7.0 + 4.0 * z) / (7.0 + z);
    }
    throw std::logic_error("generator_spec: unknown kind");
}

function_spec function_spec::integral_rep(generator_spec q) {
    const cplx q0 = q(cplx(0.0));
    if (std::abs(q0 - 1.0) > 1e-12)
        throw std::invalid_argument("integral_rep: generator must satisfy q(0) = 1");
    function_spec f;
    f.integral_ = true;
    f.q_ = q;
    f.near_zero_ = near_zero_coeffs(q);
    return f;
}

function_spec function_spec::closed(closed_id id, int n, double alpha) {
    switch (id) {
        case closed_id::f0_petal:
            return integral_rep({generator_spec::kind::petal});
        case closed_id::rl_ext:
            return integral_rep({generator_spec::kind::rl});
        case closed_id::exp_ext:
            return integral_rep({generator_spec::kind::exponential});
        case closed_id::crescent_ext:
            return integral_rep({generator_spec::kind::crescent});
        case closed_id::booth_ext:
            if (alpha == 0.0) {  // no closed form at alpha = 0
                generator_spec q{generator_spec::kind::booth};
                q.alpha = 0.0;
                return integral_rep(q);
            }
            break;
        default:
            break;
    }
    function_spec f;
    f.integral_ = false;
    f.id_ = id;
    f.n_ = n;
    f.alpha_ = alpha;
    return f;
}

const generator_spec& function_spec::generator() const {
    if (!integral_)
        throw std::logic_error("function_spec: not an integral representation");
    return q_;
}

cplx function_spec::evaluate(cplx z) const {
    if (std::abs(z) >= 1.0)
        throw std::domain_error("function_spec::evaluate: |z| must be < 1");
    if (z == 0.0) return 0.0;
    if (integral_) {
        const auto& a = near_zero_;
        auto integrand = [&](double u) -> cplx {
            const cplx t = u * z;
            if (std::abs(t) < 0.05) return eval_poly(a, t) * z;
            return (q_(t) - 1.0) / t * z;
        };
        const cplx whole = gl15_panel(integrand, 0.0, 1.0);
        const cplx integral = adaptive_quad(integrand, 0.0, 1.0, whole, 1e-13, 0);
        return z * std::exp(integral);
    }
    const cplx zn = pow_c(z, static_cast<double>(n_));
    switch (id_) {
        case closed_id::table1_f1: return z * std::exp(z / 5.0);
        case closed_id::table1_f2: return z + z * z / 5.0;
        case closed_id::table1_f3: return z * std::pow(1.0 + z / 7.0, 3);
        case closed_id::lemniscate_ext: {
            const cplx s = std::sqrt(1.0 + z);
            return 4.0 * z / ((1.0 + s) * (1.0 + s)) * std::exp(2.0 * (s - 1.0));
        }
        case closed_id::cardioid_ext:
            return z * std::exp((4.0 * z + z * z) / 3.0);
        case closed_id::booth_ext: {
            const double sa = std::sqrt(alpha_);
            return z * pow_c((1.0 + sa * z) / (1.0 - sa * z), 1.0 / (2.0 * sa));
        }
        case closed_id::sn_ext: return z * (1.0 + zn) / (1.0 - zn);
        case closed_id::csn_ext:
            return z * (1.0 + zn) /
                   pow_c(1.0 - zn, (n_ + 2.0 - 2.0 * alpha_) / n_);
        case closed_id::f1_pair: {
            const cplx m = (1.0 + zn) / (1.0 - zn);
            return z * m * m;
        }
        case closed_id::f2_pair:
            return z * (1.0 + zn) / ((1.0 - zn) * (1.0 - zn));
        case closed_id::f3_pair:
            return z * (1.0 + zn) * (1.0 + zn) / (1.0 - zn);
        default:
            throw std::logic_error("function_spec::evaluate: unhandled form");
    }
}

cplx function_spec::log_derivative(cplx z) const {
    if (z == 0.0) return 1.0;
    if (integral_) return q_(z);
    const double n = n_;
    const cplx zn = pow_c(z, n);
    const cplx z2n = zn * zn;
    switch (id_) {
        case closed_id::table1_f1: return 1.0 + z / 5.0;
        case closed_id::table1_f2: return (5.0 + 2.0 * z) / (5.0 + z);
        case closed_id::table1_f3: return (7.0 + 4.0 * z) / (7.0 + z);
        case closed_id::lemniscate_ext: return std::sqrt(1.0 + z);
        case closed_id::cardioid_ext:
            return 1.0 + (4.0 * z + 2.0 * z * z) / 3.0;
        case closed_id::booth_ext:
            return 1.0 + z / (1.0 - alpha_ * z * z);
        case closed_id::sn_ext: return 1.0 + 2.0 * n * zn / (1.0 - z2n);
        case closed_id::csn_ext:
            return (1.0 + 2.0 * (n - alpha_ + 1.0) * zn +
                    (1.0 - 2.0 * alpha_) * z2n) / (1.0 - z2n);
        case closed_id::f1_pair: return 1.0 + 4.0 * n * zn / (1.0 - z2n);
        case closed_id::f2_pair:
            return 1.0 + (3.0 * n * zn + n * z2n) / (1.0 - z2n);
        case closed_id::f3_pair:
            return 1.0 + (3.0 * n * zn - n * z2n) / (1.0 - z2n);
        default:
            throw std::logic_error("function_spec::log_derivative: unhandled form");
    }
}

function_spec function_spec::from_name(const std::string& name, int n,
                                       double alpha) {
    if (name == "f0") return closed(closed_id::f0_petal);
    if (name == "table1-f1") return closed(closed_id::table1_f1);
    if (name == "table1-f2") return closed(closed_id::table1_f2);
    if (name == "table1-f3") return closed(closed_id::table1_f3);
    if (name == "lemniscate") return closed(closed_id::lemniscate_ext);
    if (name == "rl") return closed(closed_id::rl_ext);
    if (name == "cardioid") return closed(closed_id::cardioid_ext);
    if (name == "exponential") return closed(closed_id::exp_ext);
    if (name == "crescent") return closed(closed_id::crescent_ext);
    if (name == "booth") return closed(closed_id::booth_ext, 1, alpha);
    if (name == "sn") return closed(closed_id::sn_ext, n);
    if (name == "csn") return closed(closed_id::csn_ext, n, alpha);
    if (name == "f1") return closed(closed_id::f1_pair, n);
    if (name == "f2") return closed(closed_id::f2_pair, n);
    if (name == "f3") return closed(closed_id::f3_pair, n);
    throw std::invalid_argument("unknown extremal function id: " + name);
}

series<double> f0_coefficients(int N) {
    if (N < 1) throw std::domain_error("f0_coefficients: N must be >= 1");
    auto inner = series_exp(series_integrate(asinh_series(N - 1)));
    series<double> out(N);
    for (int k = 1; k <= N; ++k)
        out[k] = inner[k - 1];
    return out;
}

witness sharpness_witness(const radius_result& result) {
    if (!result.sharp)
        throw std::invalid_argument("sharpness_witness: result is not sharp");
    if (result.value >= 1.0)
        throw std::invalid_argument("sharpness_witness: whole-disk regime has no touch point");
    const double s = asinh_one();
    const double R = result.value;
    const auto& src = result.source_class;
    auto param = [&](const char* key) { return result.params.at(key); };

    if (src == "S*_rho") {
        function_spec f0 = function_spec::closed(function_spec::closed_id::f0_petal);
        if (result.target_class == "S*_alpha")
            return {f0, cplx(-R), cplx(param("alpha"))};
        if (result.target_class == "M_beta")
            return {f0, cplx(R), cplx(param("beta"))};
        if (result.target_class == "k_ST") {
            const double k = param("k");
            return {f0, cplx(-R), cplx(k / (k + 1.0))};
        }
    }
    if (src == "S_n") {
        const int n = static_cast<int>(param("n"));
        return {function_spec::closed(function_spec::closed_id::sn_ext, n),
                cplx(R), cplx(1.0 + s)};
    }
    if (src == "CS_n") {
        const int n = static_cast<int>(param("n"));
        return {function_spec::closed(function_spec::closed_id::csn_ext, n,
                                      param("alpha")),
                cplx(R), cplx(1.0 + s)};
    }
    if (src == "lemniscate")
        return {function_spec::closed(function_spec::closed_id::lemniscate_ext),
                cplx(-R), cplx(1.0 - s)};
    if (src == "rl")
        return {function_spec::closed(function_spec::closed_id::rl_ext),
                cplx(-R), cplx(1.0 - s)};
    if (src == "cardioid")
        return {function_spec::closed(function_spec::closed_id::cardioid_ext),
                cplx(R), cplx(1.0 + s)};
    if (src == "exponential")
        return {function_spec::closed(function_spec::closed_id::exp_ext),
                cplx(R), cplx(1.0 + s)};
    if (src == "crescent")
        return {function_spec::closed(function_spec::closed_id::crescent_ext),
                cplx(R), cplx(1.0 + s)};
    if (src == "booth")
        return {function_spec::closed(function_spec::closed_id::booth_ext, 1,
                                      param("alpha")),
                cplx(-R), cplx(1.0 - s)};
    if (src == "F1" || src == "F3") {
        const int n = static_cast<int>(param("n"));
        const auto id = src == "F1" ? function_spec::closed_id::f1_pair
                                    : function_spec::closed_id::f3_pair;
        return {function_spec::closed(id, n),
                R * std::polar(1.0, kPi / n), cplx(1.0 - s)};
    }
    if (src == "F2") {
        const int n = static_cast<int>(param("n"));
        return {function_spec::closed(function_spec::closed_id::f2_pair, n),
                cplx(R), cplx(1.0 + s)};
    }
    throw std::invalid_argument("sharpness_witness: no witness registered for " + src);
}

}  // namespace petalstar

#ifndef PETALSTAR_EXTREMAL_HPP
#define PETALSTAR_EXTREMAL_HPP

#include <string>
#include <vector>

#include "petalstar/kernel.hpp"
#include "petalstar/radii.hpp"

namespace petalstar {

// Ma-Minda generators q with q(0) = 1. Each one is the subordination target
// zf'/f < q of some starlike family.
struct generator_spec {
    enum class kind {
        petal,        // 1 + asinh(z)
        lemniscate,   // sqrt(1 + z)
        rl,           // sqrt(2) - (sqrt(2)-1) sqrt((1-z)/(1+2(sqrt(2)-1)z))
        cardioid,     // 1 + 4z/3 + 2z^2/3
        exponential,  // e^z
        crescent,     // z + sqrt(1 + z^2)
        sine,         // 1 + sin z
        booth,        // 1 + z/(1 - alpha z^2), alpha in [0,1]
        janowski,     // (1 + Cz)/(1 + Dz)
        strong_power, // ((1 + z)/(1 - z))^gamma
        table1_q1,    // 1 + z/5
        table1_q2,    // (5 + 2z)/(5 + z)
        table1_q3,    // (7 + 4z)/(7 + z)
    };

    kind k = kind::petal;
    double alpha = 0.0, C = 0.0, D = 0.0, gamma = 1.0;

    cplx operator()(cplx z) const;
};

// An analytic function of the normalized class (f(0) = 0, f'(0) = 1), given
// either by a closed form or by the starlike integral representation
//   f(z) = z exp( integral_0^z (q(t) - 1)/t dt ).
class function_spec {
  public:
    enum class closed_id {
        f0_petal,
        table1_f1, table1_f2, table1_f3,
        lemniscate_ext, rl_ext, cardioid_ext, exp_ext, crescent_ext,
        booth_ext,           // alpha parameter; alpha = 0 routes through the
                             // integral representation (no closed form given)
        sn_ext,              // z (1 + z^n)/(1 - z^n)
        csn_ext,             // z (1 + z^n)/(1 - z^n)^{(n+2-2 alpha)/n}
        f1_pair,             // z ((1 + z^n)/(1 - z^n))^2
        f2_pair,             // z (1 + z^n)/(1 - z^n)^2
        f3_pair,             // z (1 + z^n)^2/(1 - z^n)
    };

    static function_spec integral_rep(generator_spec q);
    static function_spec closed(closed_id id, int n = 1, double alpha = 0.0);
    static function_spec from_name(const std::string& name, int n = 1,
                                   double alpha = 0.0);

    /// f(z) for |z| < 1. Integral forms use adaptive Gauss quadrature along
    /// the straight segment [0, z] to a 1e-12 target.
    cplx evaluate(cplx z) const;

    /// z f'(z)/f(z). For integral forms this is q(z) exactly; closed forms
    /// use their stated expressions. Returns 1 at z = 0.
    cplx log_derivative(cplx z) const;

    bool is_integral_rep() const { return integral_; }
    const generator_spec& generator() const;

  private:
    function_spec() = default;

    bool integral_ = false;
    generator_spec q_;
    std::vector<cplx> near_zero_;  // Taylor coefficients of (q(t)-1)/t
    closed_id id_ = closed_id::f0_petal;
    int n_ = 1;
    double alpha_ = 0.0;
};

/// Taylor coefficients of the petal extremal f0 up to order N (floating).
/// coeffs = [0, 1, 1, 1/2, 1/9, -1/72, -1/225, ...].
series<double> f0_coefficients(int N);

struct witness {
    function_spec f;
    cplx z_star;
    cplx expected_w;
};

/// The boundary touch point certifying a sharp radius constant.
/// Throws std::invalid_argument for non-sharp results (including the
/// whole-disk regimes, which have no touch point).
witness sharpness_witness(const radius_result& result);

}  // namespace petalstar

#endif

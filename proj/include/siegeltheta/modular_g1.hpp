#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "certified.hpp"
#include "epstein.hpp"
#include "errors.hpp"
#include "theta.hpp"

namespace siegeltheta {

enum class form_kind { delta, chi1, g2, g3, theta00, theta10, theta01, epstein };

/// A modular quantity tagged with its weight; the Petersson norm uses the
/// declared weight: ||f||^2 = (Im tau)^weight |f|^2.
struct modular_value {
    std::complex<double> tau;
    certified_complex value;
    double weight = 0.0;
    form_kind kind = form_kind::delta;

    double petersson_norm_sq() const {
        return std::pow(tau.imag(), weight) * std::norm(value.value);
    }
};

namespace g1 {

inline constexpr double pi = std::numbers::pi_v<double>;

inline void require_upper_half(std::complex<double> tau) {
    if (!(tau.imag() > 0.0)) throw non_positive_definite("g1: Im tau must be positive");
}

inline certified_complex theta00(std::complex<double> tau, const truncation_spec& spec = {}) {
    return theta(characteristic::half({0}, {0}), complex_t{0.0, 0.0}, siegel_point(tau), spec);
}
inline certified_complex theta10(std::complex<double> tau, const truncation_spec& spec = {}) {
    return theta(characteristic::half({1}, {0}), complex_t{0.0, 0.0}, siegel_point(tau), spec);
}
inline certified_complex theta01(std::complex<double> tau, const truncation_spec& spec = {}) {
    return theta(characteristic::half({0}, {1}), complex_t{0.0, 0.0}, siegel_point(tau), spec);
}

/// Product of the three even theta constants.
inline certified_complex chi1(std::complex<double> tau, const truncation_spec& spec = {}) {
    return theta00(tau, spec) * theta10(tau, spec) * theta01(tau, spec);
}

/// q prod_{n<=N} (1 - q^n)^24 with q = exp(2 pi i tau); the err bound comes
/// from the geometric tail of the log of the product.
inline certified_complex delta_product(std::complex<double> tau, int n_terms = 200) {
    require_upper_half(tau);
    if (n_terms < 1) throw std::invalid_argument("delta_product: n_terms must be >= 1");
    const complex_t q = std::exp(complex_t{0.0, 2.0 * pi} * tau);
    const double aq = std::abs(q);
    complex_t prod{1.0, 0.0};
    complex_t qn{1.0, 0.0};
    for (int n = 1; n <= n_terms; ++n) {
        qn *= q;
        complex_t f = 1.0 - qn;
        complex_t f2 = f * f;
        complex_t f4 = f2 * f2;
        complex_t f8 = f4 * f4;
        prod *= f8 * f8 * f8; // (1-q^n)^24
    }
    const complex_t val = q * prod;
    // |log tail| <= 24 |q|^{N+1} / (1-|q|)^2
    const double log_tail = 24.0 * std::pow(aq, n_terms + 1) / ((1.0 - aq) * (1.0 - aq));
    return {val, std::abs(val) * std::expm1(log_tail)};
}

namespace detail_g1 {

// divisor power sums for the normalized Eisenstein q-series
inline double sigma_k(int n, int k) {
    double s = 0.0;
    for (int d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        s += std::pow(static_cast<double>(d), k);
        const int e = n / d;
        if (e != d) s += std::pow(static_cast<double>(e), k);
    }
    return s;
}

} // namespace detail_g1

/// Weierstrass invariants of the lattice Z + Z tau:
///   g2 = (4 pi^4 / 3) E4(q),  g3 = (8 pi^6 / 27) E6(q).
inline std::pair<certified_complex, certified_complex> eisenstein_g2_g3(std::complex<double> tau) {
    require_upper_half(tau);
    const complex_t q = std::exp(complex_t{0.0, 2.0 * pi} * tau);
    const double aq = std::abs(q);
    complex_t e4{1.0, 0.0}, e6{1.0, 0.0};
    complex_t qn{1.0, 0.0};
    double tail4 = 0.0, tail6 = 0.0;
    int n = 1;
    for (;; ++n) {
        qn *= q;
        e4 += 240.0 * detail_g1::sigma_k(n, 3) * qn;
        e6 -= 504.0 * detail_g1::sigma_k(n, 5) * qn;
        // sigma_5(n) <= n^6; close once the geometric majorant is tiny
        const double term_bound = 504.0 * std::pow(static_cast<double>(n + 1), 6) * std::pow(aq, n + 1);
        const double ratio = aq * std::pow((n + 2.0) / (n + 1.0), 6);
        if (ratio < 0.9 && term_bound / (1.0 - ratio) < 1e-17 * std::abs(e6)) {
            tail6 = term_bound / (1.0 - ratio);
            tail4 = tail6; // sigma_3 majorant is smaller
            break;
        }
        if (n > 100000) break;
    }
    const double c4 = 4.0 * std::pow(pi, 4) / 3.0;
    const double c6 = 8.0 * std::pow(pi, 6) / 27.0;
    return {certified_complex{c4 * e4, c4 * tail4}, certified_complex{c6 * e6, c6 * tail6}};
}

/// exp(zeta'_tau(0)): the zeta-regularized determinant expression attached
/// to the flat metric torus, from the incomplete-gamma continuation.
inline double torsion_elliptic(std::complex<double> tau) {
    const certified_complex d = epstein_zeta_deriv0(tau);
    return std::exp(d.value.real());
}

/// Midpoint quadrature of log||theta||^2 over the fundamental torus in the
/// coordinates z = x + tau y, (x,y) in [0,1)^2, against the mass-one measure
/// dx dy. The integrand's single logarithmic zero is integrable; midpoint
/// nodes with even grid_n keep at least half a cell away from it.
inline double log_theta_norm_integral(std::complex<double> tau, int grid_n = 400) {
    require_upper_half(tau);
    const double y_im = tau.imag();
    const characteristic ch = characteristic::zero(1);
    const siegel_point sp(tau);
    // fixed radius: reuse the engine's selection at the worst-case Im z
    truncation_spec spec;
    spec.target_abs_tol = 1e-12;
    double tail = 0.0;
    const int radius = detail::select_radius(1, 0, 1.0, y_im, y_im, spec, &tail);
    double total = 0.0;
    for (int iy = 0; iy < grid_n; ++iy) {
        const double y = (iy + 0.5) / grid_n;
        for (int ix = 0; ix < grid_n; ++ix) {
            const double x = (ix + 0.5) / grid_n;
            const complex_t z = x + tau * y;
            complex_t th{0.0, 0.0};
            for (int n = -radius; n <= radius; ++n)
                th += std::exp(complex_t{0.0, pi} * (static_cast<double>(n) * n * tau) +
                               complex_t{0.0, 2.0 * pi} * (static_cast<double>(n) * z));
            total += std::log(std::norm(th)) - 2.0 * pi * (y * y_im) * (y * y_im) / y_im;
        }
    }
    return total / (static_cast<double>(grid_n) * grid_n);
}

} // namespace g1
} // namespace siegeltheta

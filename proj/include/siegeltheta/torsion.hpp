#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "certified.hpp"
#include "errors.hpp"
#include "siegel_forms.hpp"
#include "siegel_point.hpp"
#include "theta.hpp"

namespace siegeltheta {

/// A principally polarized torus together with the power m of the
/// polarization bundle. rho(L^m) = m^g; the invariant metric is normalized
/// to unit volume, rho(omega) = 1.
struct polarized_torus {
    int g = 1;
    siegel_point tau;
    int m = 1;

    polarized_torus(int genus, siegel_point t, int power) : g(genus), tau(std::move(t)), m(power) {
        if (g < 1 || tau.genus() != g) throw std::invalid_argument("polarized_torus: bad genus");
    }
    double rho_l() const { return std::pow(static_cast<double>(std::abs(m)), g); }
    static constexpr double rho_omega = 1.0;
};

/// Closed-form log of the analytic torsion of (A, L^m) with the flat
/// volume-one metric:
///   m > 0:  (1/2) m^g log(m^g / (2 pi)^g)
///   m = 0:  0
///   m < 0:  (-1)^{g+1} (1/2) |m|^g log(|m|^g / (2 pi)^g)
inline double torsion_abelian(const polarized_torus& pt) {
    if (pt.m == 0) return 0.0;
    constexpr double two_pi = 2.0 * std::numbers::pi_v<double>;
    const double rho = pt.rho_l();
    const double base = 0.5 * rho * std::log(rho / std::pow(two_pi, pt.g));
    if (pt.m > 0) return base;
    return (pt.g % 2 == 0 ? -1.0 : 1.0) * base;
}

struct theta_divisor_torsion {
    double value = 0.0;
    bool exact_constant = true; // false for g = 3 (unknown overall constant)
};

/// ||Delta_g(tau)||^{(-1)^{g+1} 2/(g+1)!} with the weight-(g+3)g!/2
/// Petersson norm. For g = 2 this is ((det Im tau)^5 |Delta_2|^2)^{-1/6};
/// for g = 3 the value is only defined up to the unknown constant.
inline theta_divisor_torsion torsion_theta_divisor(int g, const siegel_point& tau,
                                                   const truncation_spec& spec = {}) {
    if (g != 2 && g != 3) throw unsupported_genus("torsion_theta_divisor: g must be 2 or 3");
    if (tau.genus() != g) throw wrong_genus("torsion_theta_divisor: tau genus mismatch");

    // Guard the vanishing locus: on it, an individual even constant
    // vanishes, so compare the smallest factor against the largest.
    const cvector z0 = cvector::Zero(g);
    double max_abs = 0.0, min_abs = std::numeric_limits<double>::infinity();
    certified_complex chi(complex_t{1.0, 0.0});
    for (const auto& ch : even_characteristics(g)) {
        const certified_complex t = theta(ch, z0, tau, spec);
        max_abs = std::max(max_abs, std::abs(t.value));
        min_abs = std::min(min_abs, std::abs(t.value));
        chi = chi * t;
    }
    if (min_abs < 1e-12 * max_abs)
        throw on_discriminant_locus("torsion_theta_divisor: chi_g vanishes at tau");

    const double weight = (g + 3.0) * (g == 2 ? 2.0 : 6.0) / 2.0; // (g+3) g!/2
    const double fact_g1 = (g == 2 ? 6.0 : 24.0);                 // (g+1)!
    const double expo = (g % 2 == 0 ? -1.0 : 1.0) * 2.0 / fact_g1;
    const double c = (g == 2 ? constants::c2() : 1.0);
    const double norm_sq = std::pow(tau.det_im(), weight) * std::norm(c * chi.value);
    return {std::pow(norm_sq, expo / 2.0), g == 2};
}

/// Gram matrix of the orthogonal basis of sections of the m-th polarization
/// power for genus 1, by midpoint quadrature over the fundamental torus in
/// the coordinates z = x + tau y against the mass-one measure dx dy. The
/// closed form is (det(2m Im tau))^{-1/2} delta_ab.
inline Eigen::MatrixXcd l2_gram_quadrature(int m, std::complex<double> tau, int grid_n) {
    if (m < 1 || m > 2) throw std::invalid_argument("l2_gram_quadrature: m must be 1 or 2");
    if (grid_n < 100) throw std::invalid_argument("l2_gram_quadrature: grid_n must be >= 100");
    if (!(tau.imag() > 0.0)) throw non_positive_definite("l2_gram_quadrature: Im tau <= 0");
    constexpr double pi = std::numbers::pi_v<double>;
    const double y_im = tau.imag();
    const complex_t mtau = static_cast<double>(m) * tau;

    // fixed summation radius: reuse the engine bound at the largest |Im(mz)|
    truncation_spec spec;
    spec.target_abs_tol = 1e-13;
    double tail = 0.0;
    const int radius =
        detail::select_radius(1, 0, 1.0, m * y_im, m * y_im, spec, &tail);

    Eigen::MatrixXcd gram = Eigen::MatrixXcd::Zero(m, m);
    std::vector<complex_t> th(m);
    for (int iy = 0; iy < grid_n; ++iy) {
        const double yy = (iy + 0.5) / grid_n;
        const double weight = std::exp(-2.0 * pi * m * (yy * y_im) * (yy * y_im) / y_im);
        for (int ix = 0; ix < grid_n; ++ix) {
            const double xx = (ix + 0.5) / grid_n;
            const complex_t mz = static_cast<double>(m) * (xx + tau * yy);
            for (int a = 0; a < m; ++a) {
                const double av = static_cast<double>(a) / m;
                complex_t acc{0.0, 0.0};
                for (int n = -radius; n <= radius; ++n) {
                    const double mn = n + av;
                    acc += std::exp(complex_t{0.0, pi} * (mn * mn * mtau) +
                                    complex_t{0.0, 2.0 * pi} * (mn * mz));
                }
                th[a] = acc;
            }
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b) gram(a, b) += th[a] * std::conj(th[b]) * weight;
        }
    }
    gram /= static_cast<double>(grid_n) * grid_n;
    return gram;
}

} // namespace siegeltheta

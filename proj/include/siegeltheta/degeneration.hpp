#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "certified.hpp"
#include "constants.hpp"
#include "kummer.hpp"
#include "modular_g1.hpp"
#include "siegel_forms.hpp"
#include "siegel_point.hpp"
#include "theta.hpp"

namespace siegeltheta {

/// The pinching family [[tau, t], [t, tau]] with a decreasing ladder of real
/// offsets t; every member must stay inside the Siegel space.
struct degeneration_family {
    std::complex<double> base_tau;
    std::vector<double> t_samples{1e-2, 3e-3, 1e-3, 3e-4, 1e-4};

    explicit degeneration_family(std::complex<double> tau) : base_tau(tau) {
        if (!(tau.imag() > 0.0))
            throw non_positive_definite("degeneration_family: Im tau must be positive");
        for (double t : t_samples)
            (void)offdiagonal_family(base_tau, t); // validates
    }

    siegel_point at(double t) const { return offdiagonal_family(base_tau, t); }
    siegel_point at0() const { return offdiagonal_family(base_tau, 0.0); }
};

namespace detail {

// Neville extrapolation to t = 0 of an even function of t, in the variable
// x = t^2, through the last (levels+1) samples.
inline complex_t extrapolate_even(const std::vector<double>& ts, const std::vector<complex_t>& fs,
                                  int levels = 2) {
    const std::size_t use = std::min<std::size_t>(ts.size(), static_cast<std::size_t>(levels) + 1);
    const std::size_t off = ts.size() - use;
    std::vector<double> x(use);
    std::vector<complex_t> p(use);
    for (std::size_t i = 0; i < use; ++i) {
        x[i] = ts[off + i] * ts[off + i];
        p[i] = fs[off + i];
    }
    for (std::size_t k = 1; k < use; ++k)
        for (std::size_t i = 0; i + k < use; ++i)
            p[i] = (x[i + k] * p[i] - x[i] * p[i + 1]) / (x[i + k] - x[i]);
    return p[0];
}

inline double loglog_slope(const std::vector<double>& ts, const std::vector<double>& vals) {
    const std::size_t n = ts.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double lx = std::log(ts[i]), ly = std::log(vals[i]);
        sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

inline double rel_residual(complex_t got, complex_t want) {
    const double s = std::max(std::abs(want), 1e-300);
    return std::abs(got - want) / s;
}

} // namespace detail

struct second_deriv_report {
    complex_t closed_form;     // -(pi^2/16) chi1(base/2)^4
    complex_t exact_route;     // term-differentiated series with the product rule
    complex_t fd_route;        // second central difference over the ladder
    double exact_residual = 0; // relative, against the closed form
    double fd_residual = 0;
    double first_deriv_abs = 0; // |d/dt at 0| of the combination (even in t)
};

namespace detail {

// theta_{a1 a2, b1 b2}(0, tau) on the family for half-integral bit labels
inline certified_complex theta4(const std::array<int, 4>& bits, const siegel_point& tau,
                                const truncation_spec& spec) {
    return theta(characteristic::half({bits[0], bits[1]}, {bits[2], bits[3]}),
                 cvector::Zero(2), tau, spec);
}

struct deriv_pack {
    certified_complex v, d1, d2;
};

inline deriv_pack derivs(const std::array<int, 4>& bits, const siegel_point& tau0,
                         const truncation_spec& spec) {
    const characteristic ch = characteristic::half({bits[0], bits[1]}, {bits[2], bits[3]});
    deriv_pack p;
    p.v = theta(ch, cvector::Zero(2), tau0, spec);
    p.d1 = theta_offdiag_deriv(ch, tau0, 1, spec);
    p.d2 = theta_offdiag_deriv(ch, tau0, 2, spec);
    return p;
}

} // namespace detail

/// Second derivative at t = 0 of theta_{1100} theta_{0000} -
/// theta_{1000} theta_{0100} along the pinching family, two ways, against
/// the closed form -(pi^2/16) chi1(tau/2)^4.
inline second_deriv_report check_second_deriv_identity(const degeneration_family& fam,
                                                       const truncation_spec& spec = {}) {
    constexpr double pi = std::numbers::pi_v<double>;
    const siegel_point tau0 = fam.at0();

    const auto t1100 = detail::derivs({1, 1, 0, 0}, tau0, spec);
    const auto t0000 = detail::derivs({0, 0, 0, 0}, tau0, spec);
    const auto t1000 = detail::derivs({1, 0, 0, 0}, tau0, spec);
    const auto t0100 = detail::derivs({0, 1, 0, 0}, tau0, spec);
    const certified_complex exact = (t1100.d2 * t0000.v + 2.0 * (t1100.d1 * t0000.d1) +
                                     t1100.v * t0000.d2) -
                                    (t1000.d2 * t0100.v + 2.0 * (t1000.d1 * t0100.d1) +
                                     t1000.v * t0100.d2);

    auto combo = [&](double t) {
        const siegel_point tp = fam.at(t);
        return (detail::theta4({1, 1, 0, 0}, tp, spec) * detail::theta4({0, 0, 0, 0}, tp, spec) -
                detail::theta4({1, 0, 0, 0}, tp, spec) * detail::theta4({0, 1, 0, 0}, tp, spec))
            .value;
    };
    // second differences at the two largest steps, extrapolated in h^2
    const complex_t f0 = combo(0.0);
    std::vector<double> hs(fam.t_samples.begin(),
                           fam.t_samples.begin() + std::min<std::size_t>(2, fam.t_samples.size()));
    std::vector<complex_t> d2s;
    complex_t d1{0.0, 0.0};
    for (double h : hs) {
        const complex_t fp = combo(h), fmn = combo(-h);
        d2s.push_back((fp - 2.0 * f0 + fmn) / (h * h));
        if (h == hs.front()) d1 = (fp - fmn) / (2.0 * h);
    }
    const complex_t fd = detail::extrapolate_even(hs, d2s, 1);

    const certified_complex chi_half = g1::chi1(fam.base_tau / 2.0, spec);
    const complex_t target = -(pi * pi / 16.0) * std::pow(chi_half.value, 4);

    second_deriv_report rep;
    rep.closed_form = target;
    rep.exact_route = exact.value;
    rep.fd_route = fd;
    rep.exact_residual = detail::rel_residual(exact.value, target);
    rep.fd_residual = detail::rel_residual(fd, target);
    rep.first_deriv_abs = std::abs(d1) / std::abs(target);
    return rep;
}

struct chi2_limit_report {
    complex_t target;              // -(pi i/2) chi1(base)^8
    complex_t factored_route;      // chi1^6 * d/dt theta_{1111}
    complex_t extrapolated_route;  // chi2(tau(t))/t, extrapolated to 0
    double factored_residual = 0;
    double extrapolated_residual = 0;
    double pre_extrapolation_order = 0; // observed order of the t-corrections
};

/// lim_{t->0} chi2(tau(t))/t = -(pi i/2) chi1(tau)^8, via the factorized
/// route (first off-diagonal derivative of theta_{1111} times chi1^6) and
/// via extrapolation of the ratio along the ladder.
inline chi2_limit_report check_chi2_limit(const degeneration_family& fam,
                                          const truncation_spec& spec = {}) {
    constexpr double pi = std::numbers::pi_v<double>;
    const certified_complex chi1_v = g1::chi1(fam.base_tau, spec);
    const complex_t target = complex_t{0.0, -pi / 2.0} * std::pow(chi1_v.value, 8);

    const siegel_point tau0 = fam.at0();
    const certified_complex dth =
        theta_offdiag_deriv(characteristic::half({1, 1}, {1, 1}), tau0, 1, spec);
    const complex_t factored = std::pow(chi1_v.value, 6) * dth.value;

    std::vector<complex_t> ratios;
    for (double t : fam.t_samples) ratios.push_back(chi_g(2, fam.at(t), spec).value / t);
    std::vector<double> ts_sorted(fam.t_samples);
    const complex_t extr = detail::extrapolate_even(ts_sorted, ratios);

    // correction order from the two largest t samples
    std::vector<double> defects;
    for (std::size_t i = 0; i < ratios.size(); ++i) defects.push_back(std::abs(ratios[i] - extr));
    const double order = (std::log(defects[0]) - std::log(defects[1])) /
                         (std::log(ts_sorted[0]) - std::log(ts_sorted[1]));

    chi2_limit_report rep;
    rep.target = target;
    rep.factored_route = factored;
    rep.extrapolated_route = extr;
    rep.factored_residual = detail::rel_residual(factored, target);
    rep.extrapolated_residual = detail::rel_residual(extr, target);
    rep.pre_extrapolation_order = order;
    return rep;
}

struct quartic_limit_report {
    complex_t target; // (pi^4/16) chi1(base)^32
    std::array<complex_t, 4> extrapolated;      // per dual unit vector
    std::array<double, 4> residuals;            // relative, per unit vector
    double tuple_identity_residual = 0;          // alpha^2 delta^2 - beta^2 gamma^2 vs chi1^2 theta01^2
    double tuple_sum_residual = 0;               // beta delta + gamma alpha vs 2 theta00^2 theta10^2
    double tuple_product_residual = 0;           // alpha beta gamma delta vs theta00^4 theta10^4
    double pairing_defect_slope = 0;             // log-log slope of |beta delta - gamma alpha|
};

/// lim_{t->0} F(e, tau(t)/2)^2 G(e, tau(t)/2) / t^4 = (pi^4/16) chi1(tau)^32
/// for each dual unit vector e, with the exact tuple identities at t = 0 and
/// the quadratic vanishing of the pairing defect beta delta - gamma alpha.
inline quartic_limit_report check_quartic_limit(const degeneration_family& fam,
                                                const truncation_spec& spec = {}) {
    constexpr double pi = std::numbers::pi_v<double>;
    const complex_t tau = fam.base_tau;
    const certified_complex chi1_v = g1::chi1(tau, spec);
    const complex_t target = (std::pow(pi, 4) / 16.0) * std::pow(chi1_v.value, 32);

    quartic_limit_report rep;
    rep.target = target;

    std::array<std::vector<complex_t>, 4> ratios;
    std::vector<double> defects;
    for (double t : fam.t_samples) {
        const siegel_point half = siegel_point::symmetrized(fam.at(t).tau() / 2.0);
        const auto tuple = theta_four_tuple::at(half, spec);
        const auto co = kummer_coeffs_from(tuple);
        defects.push_back(std::abs((tuple.beta * tuple.delta - tuple.gamma * tuple.alpha).value));
        for (int i = 0; i < 4; ++i) {
            quad4 e{};
            e[i] = 1.0;
            const certified_complex I_val =
                kummer_quartic_eval(e, co) * kummer_quartic_eval(e, co) *
                dual_form_product(e, tuple);
            ratios[i].push_back(I_val.value / std::pow(t, 4));
        }
    }
    for (int i = 0; i < 4; ++i) {
        rep.extrapolated[i] = detail::extrapolate_even(fam.t_samples, ratios[i]);
        rep.residuals[i] = detail::rel_residual(rep.extrapolated[i], target);
    }
    rep.pairing_defect_slope = detail::loglog_slope(fam.t_samples, defects);

    // exact identities of the degenerate tuple, evaluated at tau(0)/2
    const siegel_point half0 = siegel_point::symmetrized(fam.at0().tau() / 2.0);
    const auto t0 = theta_four_tuple::at(half0, spec);
    const certified_complex th00 = g1::theta00(tau, spec), th10 = g1::theta10(tau, spec),
                            th01 = g1::theta01(tau, spec);
    rep.tuple_identity_residual = detail::rel_residual(
        (t0.alpha * t0.alpha * t0.delta * t0.delta - t0.beta * t0.beta * t0.gamma * t0.gamma).value,
        std::pow(chi1_v.value, 2) * std::pow(th01.value, 2));
    rep.tuple_sum_residual = detail::rel_residual(
        (t0.beta * t0.delta + t0.gamma * t0.alpha).value,
        2.0 * std::pow(th00.value, 2) * std::pow(th10.value, 2));
    rep.tuple_product_residual = detail::rel_residual(
        (t0.alpha * t0.beta * t0.gamma * t0.delta).value,
        std::pow(th00.value, 4) * std::pow(th10.value, 4));
    return rep;
}

} // namespace siegeltheta

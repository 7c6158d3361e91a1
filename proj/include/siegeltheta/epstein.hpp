#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "certified.hpp"
#include "errors.hpp"

namespace siegeltheta {

namespace detail {

// Lanczos approximation (g = 7, n = 9), accurate to ~1e-15 on the half plane
// Re(s) > 0.5; reflection elsewhere.
inline complex_t gamma_complex(complex_t s) {
    static const double lanczos[9] = {
        0.99999999999980993,  676.5203681218851,   -1259.1392167224028,
        771.32342877765313,   -176.61502916214059, 12.507343278686905,
        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    constexpr double pi = std::numbers::pi_v<double>;
    if (s.real() < 0.5) {
        // Gamma(s) Gamma(1-s) = pi / sin(pi s)
        return pi / (std::sin(pi * s) * gamma_complex(1.0 - s));
    }
    s -= 1.0;
    complex_t x = lanczos[0];
    for (int i = 1; i < 9; ++i) x += lanczos[i] / (s + static_cast<double>(i));
    const complex_t t = s + 7.5;
    return std::sqrt(2.0 * pi) * std::pow(t, s + 0.5) * std::exp(-t) * x;
}

// Upper incomplete gamma Gamma(s, x) for complex s and real x > 0.
// Continued fraction for large x; series through the lower function for
// small x and Re(s) >= 1/2; otherwise lifted with the recurrence
// Gamma(s, x) = (Gamma(s+1, x) - x^s e^{-x}) / s, with Gamma(0, x) = E1(x)
// at the nonpositive-integer points.
inline complex_t upper_gamma(complex_t s, double x) {
    if (!(x > 0.0)) throw std::domain_error("upper_gamma: x must be positive");
    if (x > std::abs(s) + 6.0) {
        // Modified Lentz on the standard continued fraction.
        const double tiny = 1e-290;
        complex_t b = x + 1.0 - s;
        complex_t c = 1.0 / tiny;
        complex_t d = 1.0 / b;
        complex_t h = d;
        for (int i = 1; i <= 400; ++i) {
            const complex_t an = -static_cast<double>(i) * (static_cast<double>(i) - s);
            b += 2.0;
            d = an * d + b;
            if (std::abs(d) < tiny) d = tiny;
            c = b + an / c;
            if (std::abs(c) < tiny) c = tiny;
            d = 1.0 / d;
            const complex_t delta = d * c;
            h *= delta;
            if (std::abs(delta - 1.0) < 1e-17) break;
        }
        return std::exp(-x + s * std::log(x)) * h;
    }
    if (s.real() >= 0.5) {
        // gamma(s, x) = x^s e^{-x} sum_n x^n / (s (s+1) ... (s+n))
        complex_t term = 1.0 / s;
        complex_t sum = term;
        for (int n = 1; n <= 600; ++n) {
            term *= x / (s + static_cast<double>(n));
            sum += term;
            if (std::abs(term) < 1e-18 * std::abs(sum)) break;
        }
        return gamma_complex(s) - std::exp(-x + s * std::log(x)) * sum;
    }
    const int lift = static_cast<int>(std::ceil(0.5 - s.real()));
    complex_t g = upper_gamma(s + static_cast<double>(lift), x);
    for (int j = lift - 1; j >= 0; --j) {
        const complex_t sj = s + static_cast<double>(j);
        if (std::abs(sj) < 1e-12) {
            g = complex_t{-std::expint(-x), 0.0};
            continue;
        }
        g = (g - std::exp(-x + sj * std::log(x))) / sj;
    }
    return g;
}

// E1(x) = -Ei(-x), x > 0.
inline double expint_e1(double x) { return -std::expint(-x); }

} // namespace detail

namespace epstein_detail {

struct form_grid {
    double x, y;         // tau = x + i y
    double lam;          // smallest eigenvalue of the Gram matrix of Q
    double q(int m, int n) const {
        const double u = m + n * x;
        return (u * u + n * n * y * y) / y;
    }
};

inline form_grid make_grid(std::complex<double> tau) {
    if (!(tau.imag() > 0.0)) throw non_positive_definite("epstein: Im tau must be positive");
    form_grid fg;
    fg.x = tau.real();
    fg.y = tau.imag();
    // Gram matrix [[1, x], [x, x^2 + y^2]] / y has determinant 1.
    const double tr = (1.0 + fg.x * fg.x + fg.y * fg.y) / fg.y;
    fg.lam = (tr - std::sqrt(tr * tr - 4.0)) / 2.0;
    return fg;
}

// Sums f(Q(m,n)) over (m,n) != (0,0) by square shells until the shell bound
// certifies the remainder; bound(Qmin) must dominate |f| and be decreasing.
template <class F, class B>
inline double lattice_sum(const form_grid& fg, F&& f, B&& bound, double* err_out) {
    double acc = 0.0;
    double shell_bound_prev = std::numeric_limits<double>::infinity();
    int k = 1;
    for (;; ++k) {
        for (int m = -k; m <= k; ++m) {
            for (int n = -k; n <= k; ++n) {
                if (std::max(std::abs(m), std::abs(n)) != k) continue;
                acc += f(fg.q(m, n));
            }
        }
        const double qmin = fg.lam * k * k;
        const double shell_bound = 8.0 * k * bound(qmin);
        if (shell_bound < 1e-18 * std::max(1.0, std::abs(acc)) || shell_bound == 0.0) {
            // remaining shells are geometrically dominated
            *err_out = 2.0 * shell_bound;
            break;
        }
        if (k > 600) {
            *err_out = shell_bound + shell_bound_prev;
            break;
        }
        shell_bound_prev = shell_bound;
    }
    return acc;
}

template <class F, class B>
inline complex_t lattice_sum_c(const form_grid& fg, F&& f, B&& bound, double* err_out) {
    complex_t acc{0.0, 0.0};
    int k = 1;
    for (;; ++k) {
        for (int m = -k; m <= k; ++m) {
            for (int n = -k; n <= k; ++n) {
                if (std::max(std::abs(m), std::abs(n)) != k) continue;
                acc += f(fg.q(m, n));
            }
        }
        const double qmin = fg.lam * k * k;
        const double shell_bound = 8.0 * k * bound(qmin);
        if (shell_bound < 1e-18 * std::max(1.0, std::abs(acc)) || shell_bound == 0.0 || k > 600) {
            *err_out = 2.0 * shell_bound;
            break;
        }
    }
    return acc;
}

} // namespace epstein_detail

/// Analytic continuation of
///   zeta_tau(s) = (2 pi)^{-2s} sum_{(m,n) != 0} (Im tau)^s / |m + n tau|^{2s}
/// through the symmetric incomplete-gamma split of the associated theta
/// integral at the self-dual point t = 1. Entire except the pole at s = 1;
/// zeta_tau(0) = -1 exactly.
inline certified_complex epstein_zeta(std::complex<double> tau, std::complex<double> s) {
    constexpr double pi = std::numbers::pi_v<double>;
    if (std::abs(s - complex_t{1.0, 0.0}) < 1e-9)
        throw pole_at_one("epstein_zeta: s = 1 is the pole of the continuation");
    const auto fg = epstein_detail::make_grid(tau);
    if (std::abs(s) < 1e-14) return {complex_t{-1.0, 0.0}, 0.0};

    double lattice_err = 0.0;
    const complex_t one_minus_s = 1.0 - s;
    const complex_t inc = epstein_detail::lattice_sum_c(
        fg,
        [&](double q) {
            const double a = pi * q;
            return detail::upper_gamma(s, a) * std::pow(complex_t{a, 0.0}, -s) +
                   detail::upper_gamma(one_minus_s, a) * std::pow(complex_t{a, 0.0}, s - 1.0);
        },
        [&](double qmin) {
            // Gamma(w, a) a^{-w} decays ~ e^{-a}/a for large a, both orientations.
            const double a = pi * qmin;
            if (a > 700.0) return 0.0;
            const double grow = std::exp(std::abs(s.real() - 0.5) * std::log(std::max(a, 1.0)));
            return 4.0 * grow * std::exp(-a) / a;
        },
        &lattice_err);
    const complex_t lambda = -1.0 / s - 1.0 / (1.0 - s) + inc;
    const complex_t z = std::pow(complex_t{pi, 0.0}, s) / detail::gamma_complex(s) * lambda;
    const complex_t val = std::pow(complex_t{2.0 * pi, 0.0}, -2.0 * s) * z;
    const double scale = std::abs(std::pow(complex_t{2.0 * pi, 0.0}, -2.0 * s) *
                                  std::pow(complex_t{pi, 0.0}, s) / detail::gamma_complex(s));
    return {val, scale * lattice_err};
}

/// d/ds zeta_tau(s) at s = 0, in closed form:
///   2 ln(2 pi) - ln(pi) - gamma - 1 + sum' [ E1(pi Q) + e^{-pi Q} / (pi Q) ].
inline certified_complex epstein_zeta_deriv0(std::complex<double> tau) {
    constexpr double pi = std::numbers::pi_v<double>;
    const auto fg = epstein_detail::make_grid(tau);
    double lattice_err = 0.0;
    const double inc = epstein_detail::lattice_sum(
        fg,
        [&](double q) {
            const double a = pi * q;
            if (a > 700.0) return 0.0;
            return detail::expint_e1(a) + std::exp(-a) / a;
        },
        [&](double qmin) {
            const double a = pi * qmin;
            if (a > 700.0) return 0.0;
            return 2.0 * std::exp(-a) / a;
        },
        &lattice_err);
    const double egamma = std::numbers::egamma_v<double>;
    const double val = 2.0 * std::log(2.0 * pi) - std::log(pi) - egamma - 1.0 + inc;
    return {complex_t{val, 0.0}, lattice_err};
}

} // namespace siegeltheta

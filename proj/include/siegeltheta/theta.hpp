#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "certified.hpp"
#include "characteristic.hpp"
#include "errors.hpp"
#include "siegel_point.hpp"

namespace siegeltheta {

/// How a lattice sum is truncated: the summation radius R is the smallest
/// one whose certified tail bound meets target_abs_tol, capped at
/// max_radius. With the cap hit, strict mode throws; otherwise the result
/// carries the (larger) tail bound as its err.
struct truncation_spec {
    double target_abs_tol = 1e-12;
    int max_radius = 200;
    bool strict = false;
};

namespace detail {

inline constexpr double pi = std::numbers::pi_v<double>;

// sup over r >= rmin of r^p exp(-pi*lam*r^2 + 2*pi*y*r).
inline double shell_term_sup(int p, double lam, double y, double rmin) {
    double rstar;
    if (p == 0) {
        rstar = y / lam;
    } else {
        rstar = (y + std::sqrt(y * y + 2.0 * p * lam / pi)) / (2.0 * lam);
    }
    const double r = std::max(rmin, rstar);
    double v = std::exp(-pi * lam * r * r + 2.0 * pi * y * r);
    for (int k = 0; k < p; ++k) v *= r;
    return v;
}

// Rigorous bound on sum over |n+a|_inf > R of coeff * |n+a|^p * exp(-pi lam |n+a|^2 + 2 pi y |n+a|),
// a in [0,1)^g. Shell j (that is, |n+a|_inf in (j-1, j]) holds at most 2g(2j+1)^{g-1}
// lattice points and each of its terms is bounded through the Euclidean norm
// |n+a| >= j-1. Shells are summed until the shell-to-shell ratio certifies a
// geometric remainder.
inline double tail_bound(int g, int p, double coeff, double lam, double y, int radius) {
    double total = 0.0;
    double prev = -1.0;
    for (int j = radius + 1;; ++j) {
        const double count = 2.0 * g * std::pow(2.0 * j + 1.0, g - 1);
        const double shell = count * coeff * shell_term_sup(p, lam, y, static_cast<double>(j - 1));
        total += shell;
        if (shell == 0.0) break;
        if (prev >= 0.0 && shell < prev) {
            // Per-term decay is log-concave past the hump, so the observed
            // ratio bounds every later one; close with a geometric series.
            const double ratio = shell / prev;
            if (ratio < 0.5) {
                total += shell * ratio / (1.0 - ratio);
                break;
            }
        }
        prev = shell;
        if (j > radius + 100000) break; // unreachable for lam > 0
    }
    return total;
}

// Smallest radius whose tail bound meets the target, or max_radius.
inline int select_radius(int g, int p, double coeff, double lam, double y,
                         const truncation_spec& spec, double* tail_out) {
    for (int r = 1; r <= spec.max_radius; ++r) {
        const double t = tail_bound(g, p, coeff, lam, y, r);
        if (t <= spec.target_abs_tol) {
            *tail_out = t;
            return r;
        }
    }
    const double t = tail_bound(g, p, coeff, lam, y, spec.max_radius);
    if (spec.strict)
        throw tolerance_unreachable("theta: radius cap hit before reaching target tolerance");
    *tail_out = t;
    return spec.max_radius;
}

// exp(2 pi i q) for exact rational q; quarter-integer phases come out exact.
inline complex_t unit_phase(const rational& q) {
    const rational f = mod1(q);
    if (f == rational(0)) return {1.0, 0.0};
    if (f == rational(1, 2)) return {-1.0, 0.0};
    if (f == rational(1, 4)) return {0.0, 1.0};
    if (f == rational(3, 4)) return {0.0, -1.0};
    return std::polar(1.0, 2.0 * pi * to_double(f));
}

// Odometer over the box n_i in [lo_i, hi_i]; calls f(n).
template <class F>
inline void for_each_lattice_point(const std::vector<int>& lo, const std::vector<int>& hi, F&& f) {
    const std::size_t g = lo.size();
    std::vector<int> n(lo);
    while (true) {
        f(n);
        std::size_t k = 0;
        while (k < g) {
            if (++n[k] <= hi[k]) break;
            n[k] = lo[k];
            ++k;
        }
        if (k == g) return;
    }
}

struct sum_geometry {
    std::vector<int> lo, hi;     // box with |n_i + a_i| <= R
    std::vector<double> a, b;    // characteristic as doubles (exact halves etc.)
    double lam = 0.0;            // smallest eigenvalue of Im tau
    double y_norm = 0.0;         // |Im z|_2
    int radius = 0;
    double tail = 0.0;
};

inline sum_geometry prepare(const characteristic& ch, const cvector& z, const siegel_point& tau,
                            int p, double coeff, const truncation_spec& spec) {
    const int g = tau.genus();
    if (ch.genus() != g || z.size() != g)
        throw std::invalid_argument("theta: genus mismatch between characteristic, z and tau");
    sum_geometry geo;
    geo.lam = tau.lambda_min();
    geo.y_norm = z.imag().norm();
    geo.radius = select_radius(g, p, coeff, geo.lam, geo.y_norm, spec, &geo.tail);
    geo.lo.resize(g);
    geo.hi.resize(g);
    geo.a.resize(g);
    geo.b.resize(g);
    for (int i = 0; i < g; ++i) {
        geo.a[i] = to_double(ch.a()[i]);
        geo.b[i] = to_double(ch.b()[i]);
        geo.lo[i] = static_cast<int>(std::ceil(-geo.radius - geo.a[i]));
        geo.hi[i] = static_cast<int>(std::floor(geo.radius - geo.a[i]));
    }
    return geo;
}

// exp(pi i m.tau.m + 2 pi i m.z) * exp(2 pi i m.b), the b part through exact
// rational reduction so half-integral phases stay exact.
inline complex_t term_value(const std::vector<int>& n, const characteristic& ch,
                            const sum_geometry& geo, const cvector& z, const cmatrix& tau) {
    const int g = static_cast<int>(geo.a.size());
    complex_t quad{0.0, 0.0}, lin{0.0, 0.0};
    rational bdot(0);
    for (int i = 0; i < g; ++i) {
        const double mi = n[i] + geo.a[i];
        lin += mi * z(i);
        bdot += (ch.a()[i] + n[i]) * ch.b()[i];
        for (int j = 0; j < g; ++j) quad += mi * (n[j] + geo.a[j]) * tau(i, j);
    }
    const complex_t expo = complex_t{0.0, pi} * quad + complex_t{0.0, 2.0 * pi} * lin;
    return std::exp(expo) * unit_phase(bdot);
}

inline bool is_zero_vector(const cvector& z) {
    for (Eigen::Index i = 0; i < z.size(); ++i)
        if (z(i) != complex_t{0.0, 0.0}) return false;
    return true;
}

} // namespace detail

/// theta_{a,b}(z, tau): certified truncation of the shifted lattice sum
/// sum_n exp(pi i (n+a).tau.(n+a) + 2 pi i (n+a).(z+b)).
/// Odd half-integral characteristics at z = 0 vanish identically and are
/// returned as an exact zero.
inline certified_complex theta(const characteristic& ch, const cvector& z, const siegel_point& tau,
                               const truncation_spec& spec = {}) {
    if (detail::is_zero_vector(z) && ch.is_half_integral() && ch.parity() == 1)
        return {complex_t{0.0, 0.0}, 0.0};
    auto geo = detail::prepare(ch, z, tau, 0, 1.0, spec);
    complex_t acc{0.0, 0.0};
    detail::for_each_lattice_point(geo.lo, geo.hi, [&](const std::vector<int>& n) {
        acc += detail::term_value(n, ch, geo, z, tau.tau());
    });
    return {acc, geo.tail};
}

inline certified_complex theta(const characteristic& ch, std::complex<double> z,
                               const siegel_point& tau, const truncation_spec& spec = {}) {
    cvector zv(1);
    zv(0) = z;
    return theta(ch, zv, tau, spec);
}

/// Gradient in z, component k carrying the term factor 2 pi i (n+a)_k.
/// Even half-integral characteristics at z = 0 have identically vanishing
/// gradient (the theta function is even in z) and return exact zeros.
inline std::vector<certified_complex> theta_z_grad(const characteristic& ch, const cvector& z,
                                                   const siegel_point& tau,
                                                   const truncation_spec& spec = {}) {
    const int g = tau.genus();
    if (detail::is_zero_vector(z) && ch.is_half_integral() && ch.parity() == 0)
        return std::vector<certified_complex>(g, certified_complex{complex_t{0.0, 0.0}, 0.0});
    auto geo = detail::prepare(ch, z, tau, 1, 2.0 * detail::pi, spec);
    std::vector<complex_t> acc(g, complex_t{0.0, 0.0});
    detail::for_each_lattice_point(geo.lo, geo.hi, [&](const std::vector<int>& n) {
        const complex_t base = detail::term_value(n, ch, geo, z, tau.tau());
        for (int k = 0; k < g; ++k)
            acc[k] += complex_t{0.0, 2.0 * detail::pi} * (n[k] + geo.a[k]) * base;
    });
    std::vector<certified_complex> out;
    out.reserve(g);
    for (int k = 0; k < g; ++k) out.push_back({acc[k], geo.tail});
    return out;
}

/// d^order/dt^order at t = 0 of theta_{a,b}(0, tau + t*[[0,1],[1,0]]) for
/// genus 2, by term-wise differentiation: the term factor is
/// (2 pi i (n+a)_1 (n+a)_2)^order.
inline certified_complex theta_offdiag_deriv(const characteristic& ch, const siegel_point& tau,
                                             int order, const truncation_spec& spec = {}) {
    if (tau.genus() != 2 || ch.genus() != 2)
        throw wrong_genus("theta_offdiag_deriv: genus must be 2");
    if (order != 1 && order != 2)
        throw std::invalid_argument("theta_offdiag_deriv: order must be 1 or 2");
    // |2 pi m1 m2|^d <= pi^d |m|^{2d}
    const double coeff = std::pow(detail::pi, order);
    const cvector z = cvector::Zero(2);
    auto geo = detail::prepare(ch, z, tau, 2 * order, coeff, spec);
    complex_t acc{0.0, 0.0};
    detail::for_each_lattice_point(geo.lo, geo.hi, [&](const std::vector<int>& n) {
        const complex_t base = detail::term_value(n, ch, geo, z, tau.tau());
        const complex_t fac =
            complex_t{0.0, 2.0 * detail::pi} * (n[0] + geo.a[0]) * (n[1] + geo.a[1]);
        acc += (order == 1 ? fac : fac * fac) * base;
    });
    return {acc, geo.tail};
}

} // namespace siegeltheta

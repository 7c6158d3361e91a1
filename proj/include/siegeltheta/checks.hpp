#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "constants.hpp"
#include "degeneration.hpp"
#include "kummer.hpp"
#include "modular_g1.hpp"
#include "sampling.hpp"
#include "siegel_forms.hpp"
#include "torsion.hpp"

namespace siegeltheta {

/// One identity check: the residual (relative unless stated otherwise in
/// the catalog) against its pinned tolerance. ref is the catalog code
/// documented in the README identity table.
struct check_case {
    std::string id;
    std::string ref;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct check_options {
    std::uint64_t seed = 7;
    std::complex<double> degeneration_tau{0.0, 2.0};
    int gram_grid = 800;
};

namespace checks_detail {

inline constexpr double pi = std::numbers::pi_v<double>;

inline void add(std::vector<check_case>& out, std::string id, std::string ref, double residual,
                double tolerance) {
    out.push_back({std::move(id), std::move(ref), residual, tolerance,
                   residual <= tolerance && std::isfinite(residual)});
}

inline double rel(complex_t got, complex_t want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

inline std::vector<std::complex<double>> tau_grid3x3() {
    std::vector<std::complex<double>> g;
    for (double x : {-0.3, 0.0, 0.4})
        for (double y : {0.9, 1.3, 2.0}) g.emplace_back(x, y);
    return g;
}

} // namespace checks_detail

// ---------------------------------------------------------------------------
// g1-identities
// ---------------------------------------------------------------------------
inline std::vector<check_case> suite_g1(const check_options& opt) {
    using namespace checks_detail;
    std::vector<check_case> out;
    sampler rng(opt.seed);
    truncation_spec tight;
    tight.target_abs_tol = 1e-14;

    { // discriminant of the cubic versus the eta product
        double worst = 0.0;
        for (auto tau : tau_grid3x3()) {
            const auto [g2v, g3v] = g1::eisenstein_g2_g3(tau);
            const complex_t lhs = std::pow(g2v.value, 3) - 27.0 * g3v.value * g3v.value;
            const complex_t rhs = std::pow(2.0 * pi, 12) * g1::delta_product(tau).value;
            worst = std::max(worst, rel(lhs, rhs));
        }
        add(out, "weierstrass-discriminant", "G1-01", worst, 1e-8);
    }
    { // regularized determinant versus the Petersson norm of Delta
        double worst = 0.0;
        for (auto tau : {complex_t{0, 1}, complex_t{1, 2}, complex_t{0.4, 1.1}}) {
            const double lhs = g1::torsion_elliptic(tau);
            const double pet =
                std::pow(tau.imag(), 12) * std::norm(g1::delta_product(tau).value);
            const double rhs = std::pow(pet, -1.0 / 12.0);
            worst = std::max(worst, std::abs(lhs - rhs) / rhs);
        }
        add(out, "kronecker-limit", "G1-02", worst, 1e-7);
    }
    { // chi1^8 = 2^8 Delta
        double worst = 0.0;
        for (int k = 0; k < 20; ++k) {
            const complex_t tau = rng.siegel(1).scalar();
            const complex_t lhs = std::pow(g1::chi1(tau, tight).value, 8);
            const complex_t rhs = 256.0 * g1::delta_product(tau).value;
            worst = std::max(worst, rel(lhs, rhs));
        }
        add(out, "chi1-octic", "G1-03", worst, 1e-10);
    }
    { // half-period doubling identities
        double w1 = 0.0, w2 = 0.0, w3 = 0.0, w4 = 0.0;
        for (int k = 0; k < 20; ++k) {
            const complex_t tau = rng.siegel(1).scalar();
            const complex_t t00 = g1::theta00(tau, tight).value,
                            t10 = g1::theta10(tau, tight).value,
                            t01 = g1::theta01(tau, tight).value;
            const complex_t h00 = g1::theta00(tau / 2.0, tight).value,
                            h10 = g1::theta10(tau / 2.0, tight).value,
                            h01 = g1::theta01(tau / 2.0, tight).value;
            w1 = std::max(w1, rel(h10 * h10, 2.0 * t00 * t10));
            w2 = std::max(w2, rel(h00 * h01, t01 * t01));
            w3 = std::max(w3, rel(h00 * h10 * h01 * (h00 * h10 * h01),
                                  2.0 * t00 * t10 * t01 * std::pow(t01, 3)));
            w4 = std::max(w4, rel(std::pow(t00, 4), std::pow(t10, 4) + std::pow(t01, 4)));
        }
        add(out, "doubling-even", "G1-04", w1, 1e-10);
        add(out, "doubling-product", "G1-05", w2, 1e-10);
        add(out, "chi1-half-square", "G1-06", w3, 1e-10);
        add(out, "theta-quartic", "G1-07", w4, 1e-10);
    }
    { // z-derivative of the odd theta versus the even triple product
        double worst = 0.0;
        for (int k = 0; k < 10; ++k) {
            const siegel_point tau = rng.siegel(1);
            const auto grad = theta_z_grad(characteristic::half({1}, {1}),
                                           cvector::Zero(1), tau, tight);
            const complex_t lhs = grad[0].value / (2.0 * pi);
            const complex_t rhs = constants::jacobi_derivative_sign * 0.5 *
                                  g1::chi1(tau.scalar(), tight).value;
            worst = std::max(worst, rel(lhs, rhs));
        }
        add(out, "theta-derivative-triple", "G1-08", worst, 1e-9);
    }
    { // product formula versus the theta-constant octic on a 5x5 grid
        double worst = 0.0;
        for (double x : {-0.4, -0.2, 0.0, 0.2, 0.4})
            for (double y : {0.8, 1.0, 1.3, 1.7, 2.2}) {
                const complex_t tau{x, y};
                const complex_t lhs = g1::delta_product(tau).value;
                const complex_t rhs = std::pow(g1::chi1(tau, tight).value, 8) / 256.0;
                worst = std::max(worst, rel(lhs, rhs));
            }
        add(out, "delta-product-vs-chi1", "G1-09", worst, 1e-10);
    }
    { // continuation value at s = 0 is -1, independent of tau
        double worst = 0.0;
        for (int k = 0; k < 3; ++k) {
            const complex_t tau = rng.siegel(1).scalar();
            worst = std::max(worst, std::abs(epstein_zeta(tau, 0.0).value - complex_t{-1.0, 0.0}));
        }
        add(out, "epstein-at-zero", "G1-10", worst, 1e-12);
    }
    { // quadrature of the section-norm log over the torus
        const double got = g1::log_theta_norm_integral(complex_t{0.0, 1.0}, 400);
        const double want = std::log(std::abs(g1::delta_product(complex_t{0.0, 1.0}).value)) / 12.0;
        add(out, "theta-log-average", "G1-11", std::abs(got - want), 1e-3);
    }
    { // torsion is a lattice invariant
        const double a = g1::torsion_elliptic(complex_t{0.3, 1.4});
        const double b = g1::torsion_elliptic(complex_t{1.3, 1.4});
        add(out, "torsion-translation", "G1-12", std::abs(a - b) / a, 1e-9);
        const double c = g1::torsion_elliptic(complex_t{0.0, 2.0});
        const double d = g1::torsion_elliptic(complex_t{0.0, 0.5}); // -1/(2i) = i/2
        add(out, "torsion-inversion", "G1-13", std::abs(c - d) / c, 1e-8);
    }
    return out;
}

// ---------------------------------------------------------------------------
// theta engine
// ---------------------------------------------------------------------------
inline std::vector<check_case> suite_theta(const check_options& opt) {
    using namespace checks_detail;
    std::vector<check_case> out;
    sampler rng(opt.seed + 1);

    { // tightening the target tolerance moves certified values by at most the slack
        truncation_spec loose, tight;
        loose.target_abs_tol = 1e-8;
        tight.target_abs_tol = 1e-14;
        double worst = 0.0;
        for (int k = 0; k < 100; ++k) {
            const int g = 1 + k % 3;
            const siegel_point tau = rng.siegel(g);
            const characteristic ch = rng.rational_characteristic(g, 4);
            const cvector z = rng.complex_vector(g, 0.5, 0.35);
            const complex_t a = theta(ch, z, tau, loose).value;
            const complex_t b = theta(ch, z, tau, tight).value;
            worst = std::max(worst, std::abs(a - b));
        }
        add(out, "certified-tightening", "TH-01", worst, 1e-8 + 1e-14);
    }
    { // theta(-z) = (-1)^parity theta(z) for half-integral characteristics
        double worst = 0.0;
        truncation_spec spec;
        spec.target_abs_tol = 1e-12;
        for (int k = 0; k < 30; ++k) {
            const int g = 1 + k % 3;
            const siegel_point tau = rng.siegel(g);
            const characteristic ch = rng.rational_characteristic(g, 2);
            const cvector z = rng.complex_vector(g, 0.5, 0.35);
            const auto plus = theta(ch, z, tau, spec);
            const auto minus = theta(ch, (-z).eval(), tau, spec);
            const double sgn = ch.parity() == 0 ? 1.0 : -1.0;
            const double defect = std::abs(minus.value - sgn * plus.value);
            worst = std::max(worst, defect - 2.0 * (plus.err + minus.err));
        }
        add(out, "parity-reflection", "TH-02", std::max(worst, 0.0), 1e-10);
    }
    { // section transformation law under lattice shifts, m = 1 and 2
        double worst = 0.0;
        truncation_spec spec;
        spec.target_abs_tol = 1e-12;
        for (int m = 1; m <= 2; ++m) {
            for (int k = 0; k < 8; ++k) {
                const int g = 1 + k % 2;
                const siegel_point tau = rng.siegel(g);
                const siegel_point mtau = siegel_point((static_cast<double>(m) * tau.tau()).eval());
                const characteristic ch0 = characteristic::zero(g);
                const cvector z = rng.complex_vector(g, 0.4, 0.25);
                cvector kk(g), ll(g);
                for (int i = 0; i < g; ++i) {
                    kk(i) = static_cast<double>(rng.uniform_int(-2, 2));
                    ll(i) = static_cast<double>(rng.uniform_int(-2, 2));
                }
                auto f = [&](const cvector& w) {
                    return theta(ch0, (static_cast<double>(m) * w).eval(), mtau, spec).value;
                };
                const cvector shifted = z + kk + tau.tau() * ll;
                const complex_t quad = (ll.transpose() * tau.tau() * ll)(0, 0);
                const complex_t lin = (ll.transpose() * z)(0, 0);
                const complex_t factor =
                    std::exp(complex_t{0.0, -pi * m} * quad + complex_t{0.0, -2.0 * pi * m} * lin);
                worst = std::max(worst, rel(f(shifted), factor * f(z)));
            }
        }
        add(out, "quasi-periodicity", "TH-03", worst, 1e-9);
    }
    { // block-diagonal tau factors the theta constant
        double worst = 0.0;
        truncation_spec spec;
        spec.target_abs_tol = 1e-13;
        const complex_t tau1 = rng.siegel(1).scalar(), tau2 = rng.siegel(1).scalar();
        const siegel_point dtau = diag2(tau1, tau2);
        for (int a1 = 0; a1 < 2; ++a1)
            for (int a2 = 0; a2 < 2; ++a2)
                for (int b1 = 0; b1 < 2; ++b1)
                    for (int b2 = 0; b2 < 2; ++b2) {
                        const auto whole = theta(characteristic::half({a1, a2}, {b1, b2}),
                                                 cvector::Zero(2), dtau, spec);
                        const auto f1 = theta(characteristic::half({a1}, {b1}),
                                              complex_t{0, 0}, siegel_point(tau1), spec);
                        const auto f2 = theta(characteristic::half({a2}, {b2}),
                                              complex_t{0, 0}, siegel_point(tau2), spec);
                        const double denom = std::max(std::abs((f1 * f2).value), 1e-6);
                        worst = std::max(worst, std::abs(whole.value - (f1 * f2).value) / denom);
                    }
        add(out, "block-factorization", "TH-04", worst, 1e-10);
    }
    { // identically vanishing odd constants come out exactly zero
        double worst = 0.0;
        const siegel_point tau2 = rng.siegel(2);
        const auto v2 = theta(characteristic::half({1, 0}, {1, 0}), cvector::Zero(2), tau2);
        worst = std::max(worst, std::abs(v2.value) + v2.err);
        const siegel_point tau1 = rng.siegel(1);
        const auto v1 = theta(characteristic::half({1}, {1}), cvector::Zero(1), tau1);
        worst = std::max(worst, std::abs(v1.value) + v1.err);
        add(out, "odd-constant-zero", "TH-05", worst, 0.0);
    }
    { // analytic z-gradient against central differences
        double worst = 0.0;
        truncation_spec spec;
        spec.target_abs_tol = 1e-13;
        const siegel_point tau(complex_t{0.0, 2.0});
        const characteristic ch = characteristic::zero(1);
        const complex_t z{0.3, 0.1};
        const double h = 1e-5;
        const auto grad = theta_z_grad(ch, cvector::Constant(1, z), tau, spec);
        const complex_t fd = (theta(ch, z + h, tau, spec).value -
                              theta(ch, z - h, tau, spec).value) /
                             (2.0 * h);
        worst = rel(grad[0].value, fd);
        add(out, "gradient-fd", "TH-06", worst, 1e-7);
    }
    { // off-diagonal second derivative against second differences
        truncation_spec spec;
        spec.target_abs_tol = 1e-13;
        const siegel_point base = diag2(complex_t{0, 2}, complex_t{0, 2});
        const characteristic ch = characteristic::half({1, 1}, {0, 0});
        const auto d2 = theta_offdiag_deriv(ch, base, 2, spec);
        const double h = 1e-3;
        auto at = [&](double t) {
            return theta(ch, cvector::Zero(2), offdiagonal_family(complex_t{0, 2}, t), spec).value;
        };
        const complex_t fd = (at(h) - 2.0 * at(0.0) + at(-h)) / (h * h);
        add(out, "offdiag-fd", "TH-07", rel(d2.value, fd), 1e-5);
    }
    return out;
}

// ---------------------------------------------------------------------------
// siegel-covariance
// ---------------------------------------------------------------------------
inline std::vector<check_case> suite_covariance(const check_options& opt) {
    using namespace checks_detail;
    std::vector<check_case> out;
    sampler rng(opt.seed + 2);
    truncation_spec spec;
    spec.target_abs_tol = 1e-13;

    // random words in the standard generators
    const auto gens2 = symplectic_element::standard_generators(2);
    auto random_word = [&](int len) {
        symplectic_element w = symplectic_element::identity(2);
        for (int i = 0; i < len; ++i) w = w * gens2[rng.uniform_int(0, static_cast<int>(gens2.size()) - 1)];
        return w;
    };

    { // det Im(gamma tau) = |det(C tau + D)|^{-2} det Im tau
        double worst = 0.0;
        for (int k = 0; k < 10; ++k) {
            const siegel_point tau = rng.siegel(2);
            const auto gamma = random_word(1 + k % 6);
            const siegel_point tgt = sympl_act_tau(gamma, tau);
            const double lhs = tgt.det_im();
            const double rhs = tau.det_im() / std::norm(j_factor(tau, gamma));
            worst = std::max(worst, std::abs(lhs - rhs) / rhs);
        }
        add(out, "det-im-covariance", "SC-01", worst, 1e-10);
    }
    { // Petersson norm of chi_2 at weight 5 is a modular invariant
        double worst = 0.0;
        for (int k = 0; k < 10; ++k) {
            const siegel_point tau = rng.siegel(2);
            const auto gamma = random_word(1 + k % 6);
            const siegel_point tgt = sympl_act_tau(gamma, tau);
            const double a = petersson_norm_sq(chi_g(2, tau, spec).value, 5.0, tau);
            const double b = petersson_norm_sq(chi_g(2, tgt, spec).value, 5.0, tgt);
            worst = std::max(worst, std::abs(a - b) / a);
        }
        add(out, "chi2-petersson-invariance", "SC-02", worst, 1e-8);
    }
    { // torsion of the divisor depends only on the orbit of tau
        double worst = 0.0;
        for (int k = 0; k < 10; ++k) {
            const siegel_point tau = rng.siegel(2);
            const auto gamma = random_word(1 + k % 5);
            const double a = torsion_theta_divisor(2, tau, spec).value;
            const double b = torsion_theta_divisor(2, sympl_act_tau(gamma, tau), spec).value;
            worst = std::max(worst, std::abs(a - b) / a);
        }
        add(out, "divisor-torsion-invariance", "SC-03", worst, 1e-7);
    }
    { // even characteristic counts
        double worst = 0.0;
        for (int g = 1; g <= 3; ++g)
            worst = std::max(worst, std::abs(static_cast<double>(even_characteristics(g).size()) -
                                             static_cast<double>(even_characteristic_count(g))));
        add(out, "even-count", "SC-04", worst, 0.0);
    }
    { // chi_2 transforms with a +-1 character times det(C tau + D)^5
        double worst_unit = 0.0, worst_mult = 0.0;
        const siegel_point tau = rng.siegel(2);
        const complex_t chi0 = chi_g(2, tau, spec).value;
        auto eps_of = [&](const symplectic_element& gamma) {
            const siegel_point tgt = sympl_act_tau(gamma, tau);
            return chi_g(2, tgt, spec).value /
                   (std::pow(j_factor(tau, gamma), 5) * chi0);
        };
        std::vector<complex_t> eps_gens;
        for (const auto& gen : gens2) {
            const complex_t e = eps_of(gen);
            eps_gens.push_back(e);
            worst_unit = std::max(worst_unit, std::min(std::abs(e - 1.0), std::abs(e + 1.0)));
        }
        for (int k = 0; k < 6; ++k) {
            const int i = rng.uniform_int(0, static_cast<int>(gens2.size()) - 1);
            const int j = rng.uniform_int(0, static_cast<int>(gens2.size()) - 1);
            const complex_t w = eps_of(gens2[i] * gens2[j]);
            worst_mult = std::max(worst_mult, std::abs(w - eps_gens[i] * eps_gens[j]));
        }
        add(out, "chi2-character-sign", "SC-05", worst_unit, 1e-8);
        add(out, "chi2-character-mult", "SC-06", worst_mult, 1e-7);
    }
    { // the level-(1,2) congruence condition survives 200 products
        const auto gens = symplectic_element::standard_generators(2);
        std::vector<symplectic_element> members;
        for (const auto& gen : gens)
            if (gen.in_gamma12()) members.push_back(gen);
        // squares of translations are always members
        for (const auto& gen : gens) members.push_back(gen * gen);
        int fails = 0;
        symplectic_element cur = symplectic_element::identity(2);
        for (int k = 0; k < 200; ++k) {
            const auto& next = members[rng.uniform_int(0, static_cast<int>(members.size()) - 1)];
            if (!next.in_gamma12()) ++fails;
            cur = cur * next;
            if (!cur.in_gamma12()) ++fails;
        }
        add(out, "gamma12-closure", "SC-07", static_cast<double>(fails), 0.0);
    }
    { // genus-1 product of even constants agrees across modules
        const complex_t tau = rng.siegel(1).scalar();
        const complex_t a = chi_g(1, siegel_point(tau), spec).value;
        const complex_t b = g1::chi1(tau, spec).value;
        add(out, "chi-g1-consistency", "SC-08", rel(a, b), 1e-13);
    }
    { // chi_2 vanishes on block-diagonal points
        const siegel_point dtau = diag2(rng.siegel(1).scalar(), rng.siegel(1).scalar());
        const auto v = chi_g(2, dtau, spec);
        add(out, "chi2-diagonal-vanishing", "SC-09", std::abs(v.value), 1e-13);
    }
    { // the normalized form is a fixed multiple of chi_2
        const siegel_point tau = rng.siegel(2);
        const auto d = delta_g_normalized(2, tau, spec);
        const auto c = chi_g(2, tau, spec);
        add(out, "delta2-ratio", "SC-10", rel(d.value.value / c.value, constants::c2()), 1e-14);
    }
    return out;
}

// ---------------------------------------------------------------------------
// kummer
// ---------------------------------------------------------------------------
inline std::vector<check_case> suite_kummer(const check_options& opt) {
    using namespace checks_detail;
    std::vector<check_case> out;
    sampler rng(opt.seed + 3);
    truncation_spec spec;
    spec.target_abs_tol = 1e-13;

    auto coeff_scale = [](const std::array<certified_complex, 5>& co) {
        double s = 0.0;
        for (const auto& c : co) s = std::max(s, std::abs(c.value));
        return s;
    };

    { // the quartic vanishes on the image of the level-2 map
        double worst = 0.0;
        for (int kt = 0; kt < 3; ++kt) {
            const siegel_point tau = rng.siegel(2);
            const auto co = kummer_coeffs(tau, spec);
            const double cs = coeff_scale(co);
            for (int kz = 0; kz < 50; ++kz) {
                const cvector z = rng.complex_vector(2, 0.5, 0.3);
                quad4 w = level2_map(z, tau, spec);
                w = projective_normalize(w);
                worst = std::max(worst, std::abs(kummer_quartic_eval(w, co).value) / cs);
            }
        }
        add(out, "quartic-on-image", "KU-01", worst, 1e-8);
    }
    { // all sixteen nodes are singular points
        double worst = 0.0;
        for (int kt = 0; kt < 5; ++kt) {
            const siegel_point tau = rng.siegel(2);
            const auto model = kummer_model::at(tau, spec);
            const double cs = coeff_scale(model.coeffs);
            for (const auto& node : model.nodes) {
                const quad4 w = projective_normalize(node);
                worst = std::max(worst, std::abs(kummer_quartic_eval(w, model.coeffs).value) / cs);
                for (const auto& gcomp : kummer_quartic_grad(w, model.coeffs))
                    worst = std::max(worst, std::abs(gcomp.value) / cs);
            }
        }
        add(out, "nodes-singular", "KU-02", worst, 1e-8);
    }
    { // F(e)^2 G(e) for the fixture unit vector equals chi_2(2 tau)^4
        double worst = 0.0;
        for (int kt = 0; kt < 5; ++kt) {
            const siegel_point tau = rng.siegel(2);
            const auto tuple = theta_four_tuple::at(tau, spec);
            const auto co = kummer_coeffs_from(tuple);
            quad4 e{};
            e[constants::kummer_unit_vector_index] = 1.0;
            const complex_t lhs =
                (kummer_quartic_eval(e, co) * kummer_quartic_eval(e, co) *
                 dual_form_product(e, tuple))
                    .value;
            const siegel_point tau2 = siegel_point((2.0 * tau.tau()).eval());
            const complex_t rhs = std::pow(chi_g(2, tau2, spec).value, 4);
            worst = std::max(worst, rel(lhs, rhs));
        }
        add(out, "unit-dual-product", "KU-03", worst, 1e-7);
    }
    { // normalized discriminant at the unit vector against the doubled form
        double worst = 0.0;
        for (int kt = 0; kt < 3; ++kt) {
            const siegel_point tau = rng.siegel(2);
            quad4 e{};
            e[constants::kummer_unit_vector_index] = 1.0;
            const complex_t lhs = discriminant_2_2(e, tau, spec).value.value;
            const siegel_point tau2 = siegel_point((2.0 * tau.tau()).eval());
            const complex_t d2 = delta_g_normalized(2, tau2, spec).value.value;
            const complex_t rhs = 256.0 * std::pow(d2, 4);
            worst = std::max(worst, rel(lhs, rhs));
        }
        add(out, "discriminant-consistency", "KU-04", worst, 1e-6);
    }
    { // tangent planes of smooth points land on the dual surface (self-duality)
        double worst_f = 0.0, worst_d = 0.0;
        const siegel_point tau = rng.siegel(2);
        const auto tuple = theta_four_tuple::at(tau, spec);
        const auto co = kummer_coeffs_from(tuple);
        const double cs = coeff_scale(co);
        double tmax = 0.0;
        for (const auto& tv : tuple.as_array()) tmax = std::max(tmax, std::abs(tv.value));
        // discriminant magnitude scale in the max-modulus gauge of u
        const double dscale = constants::c22() * cs * cs * std::pow(4.0 * tmax, 16);
        for (int k = 0; k < 20; ++k) {
            const cvector z = rng.complex_vector(2, 0.5, 0.3);
            const quad4 p = projective_normalize(level2_map(z, tau, spec));
            const auto gr = kummer_quartic_grad(p, co);
            quad4 u{gr[0].value, gr[1].value, gr[2].value, gr[3].value};
            u = projective_normalize(u);
            worst_f = std::max(worst_f, std::abs(kummer_quartic_eval(u, co).value) / cs);
            const auto dv = discriminant_2_2(u, tau, spec);
            worst_d = std::max(worst_d, std::abs(dv.value.value) / dscale);
        }
        add(out, "tangent-self-duality", "KU-05", worst_f, 1e-6);
        add(out, "tangent-discriminant-zero", "KU-06", worst_d, 1e-6);
    }
    { // degree-24 homogeneity of the discriminant
        const siegel_point tau = rng.siegel(2);
        const quad4 u{complex_t{0.3, 0.1}, complex_t{-0.8, 0.2}, complex_t{0.5, -0.4},
                      complex_t{1.0, 0.0}};
        quad4 lu;
        const complex_t lam{1.3, 0.4};
        for (int i = 0; i < 4; ++i) lu[i] = lam * u[i];
        const complex_t a = discriminant_2_2(lu, tau, spec).value.value;
        const complex_t b = std::pow(lam, 24) * discriminant_2_2(u, tau, spec).value.value;
        add(out, "discriminant-homogeneity", "KU-07", rel(a, b), 1e-10);
    }
    { // orbit size and degeneracy detection
        double bad = 0.0;
        const siegel_point tau = rng.siegel(2);
        const auto tuple = theta_four_tuple::at(tau, spec);
        const auto orbit = heisenberg_orbit(
            quad4{tuple.alpha.value, tuple.beta.value, tuple.gamma.value, tuple.delta.value});
        if (orbit.size() != 16) bad += 1.0;
        bool threw = false;
        try {
            (void)heisenberg_orbit(quad4{1.0, 0.0, 0.0, 0.0});
        } catch (const degenerate_orbit&) {
            threw = true;
        }
        if (!threw) bad += 1.0;
        add(out, "orbit-sixteen", "KU-08", bad, 0.0);
    }
    { // the level-2 map is even in z
        double worst = 0.0;
        const siegel_point tau = rng.siegel(2);
        for (int k = 0; k < 5; ++k) {
            const cvector z = rng.complex_vector(2, 0.5, 0.3);
            const quad4 a = projective_normalize(level2_map(z, tau, spec));
            const quad4 b = projective_normalize(level2_map((-z).eval(), tau, spec));
            for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
        }
        add(out, "level2-even", "KU-09", worst, 1e-10);
    }
    { // classical incidence: every node lies on exactly six tropes
        const siegel_point tau = rng.siegel(2);
        const auto model = kummer_model::at(tau, spec);
        double bad = 0.0;
        for (const auto& node : model.nodes) {
            const quad4 nn = projective_normalize(node);
            int cnt = 0;
            for (const auto& trope : model.dual_forms) {
                const quad4 tt = projective_normalize(trope);
                complex_t dot{0, 0};
                for (int i = 0; i < 4; ++i) dot += nn[i] * tt[i];
                if (std::abs(dot) < 1e-8) ++cnt;
            }
            if (cnt != 6) bad += 1.0;
        }
        add(out, "node-trope-incidence", "KU-10", bad, 0.0);
    }
    { // pairing defect of the tuple vanishes on block-diagonal points
        const siegel_point dtau = diag2(rng.siegel(1).scalar(), rng.siegel(1).scalar());
        const auto t = theta_four_tuple::at(dtau, spec);
        const auto defect = t.beta * t.delta - t.gamma * t.alpha;
        const double scale = std::abs((t.beta * t.delta).value);
        add(out, "tuple-defect-diagonal", "KU-11", std::abs(defect.value) / scale, 1e-12);
    }
    { // G changes by at most a sign along the group orbit of u
        double worst = 0.0;
        const siegel_point tau = rng.siegel(2);
        const auto tuple = theta_four_tuple::at(tau, spec);
        const quad4 u{complex_t{0.7, 0.2}, complex_t{-0.1, 0.5}, complex_t{0.4, -0.3},
                      complex_t{0.9, 0.1}};
        const complex_t base = dual_form_product(u, tuple).value;
        for (const auto& e : heisenberg_group()) {
            const complex_t v = dual_form_product(e.apply(u), tuple).value;
            worst = std::max(worst, std::min(std::abs(v - base), std::abs(v + base)) /
                                        std::abs(base));
        }
        add(out, "dual-product-orbit-sign", "KU-12", worst, 1e-9);
    }
    return out;
}

// ---------------------------------------------------------------------------
// degeneration
// ---------------------------------------------------------------------------
inline std::vector<check_case> suite_degeneration(const check_options& opt) {
    using namespace checks_detail;
    std::vector<check_case> out;
    truncation_spec spec;
    spec.target_abs_tol = 1e-13;
    const degeneration_family fam(opt.degeneration_tau);

    const auto sd = check_second_deriv_identity(fam, spec);
    add(out, "second-derivative-exact", "DG-01", sd.exact_residual,
        fixtures::second_deriv_exact_tol);
    add(out, "second-derivative-fd", "DG-02", sd.fd_residual, fixtures::second_deriv_fd_tol);
    add(out, "first-derivative-zero", "DG-03", sd.first_deriv_abs, 1e-8);

    const auto cl = check_chi2_limit(fam, spec);
    add(out, "chi2-limit-factored", "DG-04", cl.factored_residual,
        fixtures::chi2_limit_factored_tol);
    add(out, "chi2-limit-extrapolated", "DG-05", cl.extrapolated_residual,
        fixtures::chi2_limit_extrapolated_tol);
    add(out, "chi2-limit-order", "DG-06", std::abs(cl.pre_extrapolation_order - 2.0), 0.2);

    const auto ql = check_quartic_limit(fam, spec);
    double worst_unit = 0.0;
    for (double r : ql.residuals) worst_unit = std::max(worst_unit, r);
    add(out, "quartic-limit", "DG-07", worst_unit, fixtures::quartic_limit_tol);
    add(out, "pairing-defect-slope", "DG-08", std::abs(ql.pairing_defect_slope - 2.0),
        fixtures::pairing_defect_slope_tol);
    add(out, "tuple-square-identity", "DG-09", ql.tuple_identity_residual,
        fixtures::tuple_identity_tol);
    add(out, "tuple-sum-identity", "DG-10", ql.tuple_sum_residual, fixtures::tuple_identity_tol);
    add(out, "tuple-product-identity", "DG-11", ql.tuple_product_residual,
        fixtures::tuple_identity_tol);

    { // same closed form at a non-rectangular base point
        const degeneration_family fam2(opt.degeneration_tau + complex_t{1.0, 0.0});
        const auto sd2 = check_second_deriv_identity(fam2, spec);
        add(out, "second-derivative-shifted", "DG-12", sd2.exact_residual,
            fixtures::second_deriv_exact_tol);
    }
    return out;
}

// ---------------------------------------------------------------------------
// torsion
// ---------------------------------------------------------------------------
inline std::vector<check_case> suite_torsion(const check_options& opt) {
    using namespace checks_detail;
    std::vector<check_case> out;
    sampler rng(opt.seed + 4);
    truncation_spec spec;
    spec.target_abs_tol = 1e-13;

    { // closed-form Gram matrix of the section basis, m = 1 and 2
        const complex_t tau{0.0, 1.0};
        const auto g1m = l2_gram_quadrature(1, tau, opt.gram_grid);
        const double want1 = 1.0 / std::sqrt(2.0 * tau.imag());
        add(out, "gram-m1-diagonal", "TO-01", std::abs(g1m(0, 0).real() - want1), 1e-5);

        const auto g2m = l2_gram_quadrature(2, tau, opt.gram_grid);
        const double want2 = 1.0 / std::sqrt(4.0 * tau.imag());
        const double diag_err = std::max(std::abs(g2m(0, 0).real() - want2),
                                         std::abs(g2m(1, 1).real() - want2));
        add(out, "gram-m2-diagonal", "TO-02", diag_err, 1e-5);
        add(out, "gram-m2-orthogonality", "TO-03", std::abs(g2m(0, 1)), 1e-6);
    }
    { // refinement does not lose accuracy (convergence saturates at the
      // round-off floor well before these grid sizes)
        const complex_t tau{0.0, 1.0};
        const double want = 1.0 / std::sqrt(2.0);
        const double e1 = std::abs(l2_gram_quadrature(1, tau, 200)(0, 0).real() - want);
        const double e2 = std::abs(l2_gram_quadrature(1, tau, 400)(0, 0).real() - want);
        const double floor_ = 1e-12;
        const double ratio_defect = (e2 <= std::max(e1 / 4.0, floor_)) ? 0.0 : e2 / std::max(e1, floor_);
        add(out, "gram-refinement", "TO-04", ratio_defect, 0.0);
    }
    { // closed-form torsion of polarization powers: duality and fixed points
        double worst = 0.0;
        for (int g = 1; g <= 3; ++g)
            for (int m = 1; m <= 3; ++m) {
                const siegel_point tau = rng.siegel(g);
                const double plus = torsion_abelian(polarized_torus(g, tau, m));
                const double minus = torsion_abelian(polarized_torus(g, tau, -m));
                const double want = (g % 2 == 0 ? -1.0 : 1.0) * plus;
                worst = std::max(worst, std::abs(minus - want));
            }
        add(out, "abelian-duality", "TO-05", worst, 0.0);
        const siegel_point tau2 = rng.siegel(2);
        add(out, "abelian-zero-power", "TO-06",
            std::abs(torsion_abelian(polarized_torus(2, tau2, 0))), 0.0);
        const double got = torsion_abelian(polarized_torus(2, tau2, -1));
        add(out, "abelian-negative-unit", "TO-07",
            std::abs(got - std::log(2.0 * pi)), 1e-14);
    }
    { // blow-up exponent of the divisor torsion along the pinching family
        const complex_t base{0.0, 2.0};
        std::vector<double> ts{1e-2, 1e-3, 1e-4};
        std::vector<double> vals;
        for (double t : ts)
            vals.push_back(torsion_theta_divisor(2, offdiagonal_family(base, t), spec).value);
        const double slope = detail::loglog_slope(ts, vals);
        add(out, "divergence-exponent", "TO-08", std::abs(slope + 1.0 / 3.0), 0.01);
    }
    { // torsion value matches the norm expression it is defined by
        const siegel_point tau = rng.siegel(2);
        const double a = torsion_theta_divisor(2, tau, spec).value;
        const complex_t d2 = delta_g_normalized(2, tau, spec).value.value;
        const double b = std::pow(std::pow(tau.det_im(), 5) * std::norm(d2), -1.0 / 6.0);
        add(out, "divisor-torsion-value", "TO-09", std::abs(a - b) / b, 1e-12);
    }
    { // the vanishing locus is rejected
        bool threw = false;
        try {
            (void)torsion_theta_divisor(2, diag2(complex_t{0, 1}, complex_t{0, 1.3}), spec);
        } catch (const on_discriminant_locus&) {
            threw = true;
        }
        add(out, "locus-guard", "TO-10", threw ? 0.0 : 1.0, 0.0);
    }
    return out;
}

inline std::vector<check_case> run_suite(const std::string& name, const check_options& opt = {}) {
    if (name == "g1-identities") return suite_g1(opt);
    if (name == "theta") return suite_theta(opt);
    if (name == "siegel-covariance") return suite_covariance(opt);
    if (name == "kummer") return suite_kummer(opt);
    if (name == "degeneration") return suite_degeneration(opt);
    if (name == "torsion") return suite_torsion(opt);
    if (name == "all") {
        std::vector<check_case> all;
        for (const char* s :
             {"g1-identities", "theta", "siegel-covariance", "kummer", "degeneration", "torsion"}) {
            auto part = run_suite(s, opt);
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }
    throw std::invalid_argument("unknown suite: " + name);
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"g1-identities",    "theta",  "siegel-covariance",
                                                "kummer", "degeneration", "torsion", "all"};
    return names;
}

} // namespace siegeltheta

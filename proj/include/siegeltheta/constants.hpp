#pragma once

#include <cmath>
#include <numbers>

namespace siegeltheta {
namespace constants {

// zeta'(-1) = 1/12 - log A with A the Glaisher-Kinkelin constant;
// frozen to 25 digits and cross-checked in the test suite against an
// independent zeta'(2)-based route.
inline constexpr double zeta_prime_minus_one = -0.1654211437004509292139197;

// log of the Glaisher-Kinkelin constant.
inline constexpr double log_glaisher = 0.2487544770337842625472530;

// Normalizing constant of the genus-2 cusp form: Delta_2 = c2 * chi_2.
inline double c2() {
    return std::exp2(-22.0) * std::pow(std::numbers::pi_v<double>, -14.0) *
           std::exp(12.0 * zeta_prime_minus_one);
}

// Normalizing constant of the (2,2) discriminant: Delta_{2,2} = c22 * F^2 G.
// Satisfies c22 = 2^8 c2^4.
inline double c22() {
    return std::exp2(-80.0) * std::pow(std::numbers::pi_v<double>, -56.0) *
           std::exp(48.0 * zeta_prime_minus_one);
}

// Sign in the derivative identity (1/2pi) d/dz theta_{1/2,1/2}(0, tau) = sign * chi_1(tau)/2,
// constant on the connected upper half plane; measured and frozen.
inline constexpr double jacobi_derivative_sign = -1.0;

// Index of the dual unit vector at which F(e)^2 G(e) = chi_2(2 tau)^4 was
// verified; all four unit vectors satisfy the identity, e0 is canonical.
inline constexpr int kummer_unit_vector_index = 0;

} // namespace constants

// Tolerances for the degeneration battery, kept in one place so precision
// upgrades tighten them together.
namespace fixtures {

inline constexpr double second_deriv_exact_tol = 1e-9;
inline constexpr double second_deriv_fd_tol = 1e-5;
inline constexpr double chi2_limit_factored_tol = 1e-9;
inline constexpr double chi2_limit_extrapolated_tol = 1e-6;
inline constexpr double quartic_limit_tol = 1e-4;
inline constexpr double pairing_defect_slope_tol = 0.05;
inline constexpr double tuple_identity_tol = 1e-9;

} // namespace fixtures
} // namespace siegeltheta

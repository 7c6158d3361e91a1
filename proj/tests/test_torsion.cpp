#include <catch2/catch_amalgamated.hpp>

#include "siegeltheta/siegeltheta.hpp"

using namespace siegeltheta;

namespace {
constexpr double pi = detail::pi;
const truncation_spec tight{1e-13, 200, false};
} // namespace

TEST_CASE("closed-form torsion of polarization powers") {
    const siegel_point tau1(complex_t{0, 1});
    CHECK(torsion_abelian(polarized_torus(1, tau1, 0)) == 0.0);
    CHECK(torsion_abelian(polarized_torus(1, tau1, 1)) ==
          Catch::Approx(-0.5 * std::log(2 * pi)));
    const siegel_point tau2 = diag2(complex_t{0, 1}, complex_t{0, 2});
    CHECK(torsion_abelian(polarized_torus(2, tau2, -1)) == Catch::Approx(std::log(2 * pi)));
    // m > 0, general: (1/2) m^g log(m^g/(2 pi)^g)
    CHECK(torsion_abelian(polarized_torus(2, tau2, 3)) ==
          Catch::Approx(0.5 * 9.0 * std::log(9.0 / std::pow(2 * pi, 2))));
}

TEST_CASE("torsion duality holds bit-for-bit") {
    sampler rng(5);
    for (int g = 1; g <= 3; ++g) {
        const siegel_point tau = rng.siegel(g);
        for (int m = 1; m <= 3; ++m) {
            const double plus = torsion_abelian(polarized_torus(g, tau, m));
            const double minus = torsion_abelian(polarized_torus(g, tau, -m));
            const double sign = (g % 2 == 0) ? -1.0 : 1.0;
            CHECK(minus == sign * plus);
        }
    }
}

TEST_CASE("polarization bookkeeping") {
    const siegel_point tau = diag2(complex_t{0, 1}, complex_t{0, 2});
    const polarized_torus pt(2, tau, 3);
    CHECK(pt.rho_l() == 9.0);
    CHECK(polarized_torus::rho_omega == 1.0);
    CHECK_THROWS_AS(polarized_torus(3, tau, 1), std::invalid_argument);
}

TEST_CASE("divisor torsion matches its defining norm expression") {
    sampler rng(7);
    const siegel_point tau = rng.siegel(2);
    const auto t = torsion_theta_divisor(2, tau, tight);
    CHECK(t.exact_constant);
    const complex_t d2 = delta_g_normalized(2, tau, tight).value.value;
    const double want = std::pow(std::pow(tau.det_im(), 5) * std::norm(d2), -1.0 / 6.0);
    CHECK(std::abs(t.value - want) / want < 1e-13);
}

TEST_CASE("divisor torsion is constant on modular orbits") {
    sampler rng(11);
    const auto gens = symplectic_element::standard_generators(2);
    const siegel_point tau = rng.siegel(2);
    const double base = torsion_theta_divisor(2, tau, tight).value;
    for (int k = 0; k < 10; ++k) {
        symplectic_element g = symplectic_element::identity(2);
        for (int j = 0; j <= k % 5; ++j)
            g = g * gens[rng.uniform_int(0, static_cast<int>(gens.size()) - 1)];
        const double v = torsion_theta_divisor(2, sympl_act_tau(g, tau), tight).value;
        CHECK(std::abs(v - base) / base < 1e-7);
    }
}

TEST_CASE("divisor torsion blows up with exponent one third along the pinch") {
    const complex_t base{0.0, 2.0};
    std::vector<double> ts{1e-2, 1e-3, 1e-4}, vals;
    for (double t : ts)
        vals.push_back(torsion_theta_divisor(2, offdiagonal_family(base, t), tight).value);
    const double slope = detail::loglog_slope(ts, vals);
    CHECK(std::abs(slope + 1.0 / 3.0) < 0.01);
}

TEST_CASE("points with vanishing chi are rejected, as are unsupported genera") {
    CHECK_THROWS_AS(torsion_theta_divisor(2, diag2(complex_t{0, 1}, complex_t{0, 1.3}), tight),
                    on_discriminant_locus);
    sampler rng(13);
    CHECK_THROWS_AS(torsion_theta_divisor(4, rng.siegel(2), tight), unsupported_genus);
    const auto t3 = torsion_theta_divisor(3, rng.siegel(3), truncation_spec{1e-10, 200, false});
    CHECK_FALSE(t3.exact_constant);
    CHECK(t3.value > 0.0);
}

TEST_CASE("section Gram matrix matches the closed form at level one") {
    const complex_t tau{0, 1};
    const auto g = l2_gram_quadrature(1, tau, 400);
    CHECK(g.rows() == 1);
    CHECK(std::abs(g(0, 0).real() - 1.0 / std::sqrt(2.0)) < 1e-6);
    CHECK(std::abs(g(0, 0).imag()) < 1e-12);
}

TEST_CASE("level-two sections are orthogonal with the closed-form diagonal") {
    const complex_t tau{0, 1};
    const auto g = l2_gram_quadrature(2, tau, 400);
    CHECK(std::abs(g(0, 0).real() - 0.5) < 1e-6);
    CHECK(std::abs(g(1, 1).real() - 0.5) < 1e-6);
    CHECK(std::abs(g(0, 1)) < 1e-6);
    CHECK(std::abs(g(1, 0)) < 1e-6);
}

TEST_CASE("quadrature stays converged under refinement") {
    const complex_t tau{0, 1};
    const double want = 1.0 / std::sqrt(2.0);
    const double e100 = std::abs(l2_gram_quadrature(1, tau, 100)(0, 0).real() - want);
    const double e200 = std::abs(l2_gram_quadrature(1, tau, 200)(0, 0).real() - want);
    // the periodic integrand converges far below these grids; refinement
    // must not regress past the round-off floor
    CHECK(e100 < 1e-10);
    CHECK(e200 < std::max(e100 / 4.0, 1e-12));
}

TEST_CASE("quadrature preconditions") {
    CHECK_THROWS_AS(l2_gram_quadrature(3, complex_t{0, 1}, 400), std::invalid_argument);
    CHECK_THROWS_AS(l2_gram_quadrature(1, complex_t{0, 1}, 99), std::invalid_argument);
    CHECK_THROWS_AS(l2_gram_quadrature(1, complex_t{0, -1}, 400), non_positive_definite);
}

TEST_CASE("gram closed form holds off the square point too") {
    const complex_t tau{0.3, 1.7};
    const auto g = l2_gram_quadrature(1, tau, 300);
    CHECK(std::abs(g(0, 0).real() - 1.0 / std::sqrt(2.0 * tau.imag())) < 1e-6);
}

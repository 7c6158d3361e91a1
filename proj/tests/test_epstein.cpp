#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "siegeltheta/siegeltheta.hpp"

using namespace siegeltheta;

namespace {
constexpr double pi = detail::pi;
}

TEST_CASE("complex gamma hits the classical values") {
    CHECK(std::abs(detail::gamma_complex({5.0, 0.0}) - complex_t{24.0, 0.0}) < 1e-12);
    CHECK(std::abs(detail::gamma_complex({0.5, 0.0}) - complex_t{std::sqrt(pi), 0.0}) < 1e-14);
    // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    const complex_t z{0.3, 0.7};
    const complex_t lhs = detail::gamma_complex(z) * detail::gamma_complex(1.0 - z);
    const complex_t rhs = pi / std::sin(pi * z);
    CHECK(std::abs(lhs - rhs) / std::abs(rhs) < 1e-13);
}

TEST_CASE("upper incomplete gamma: elementary closed forms") {
    for (double x : {0.3, 1.0, 4.0, 15.0}) {
        CHECK(std::abs(detail::upper_gamma({1.0, 0.0}, x) - std::exp(-x)) < 1e-15);
        const double g_half = std::sqrt(pi) * std::erfc(std::sqrt(x));
        CHECK(std::abs(detail::upper_gamma({0.5, 0.0}, x) - g_half) / g_half < 1e-12);
        // Gamma(0, x) = E1(x)
        const double e1 = -std::expint(-x);
        CHECK(std::abs(detail::upper_gamma({0.0, 0.0}, x) - e1) / e1 < 1e-12);
    }
}

TEST_CASE("upper incomplete gamma satisfies the raising recurrence") {
    sampler rng(11);
    for (int k = 0; k < 40; ++k) {
        const complex_t s{rng.uniform(-4.0, 4.0), rng.uniform(-3.0, 3.0)};
        const double x = rng.uniform(0.2, 20.0);
        const complex_t lhs = detail::upper_gamma(s + 1.0, x);
        const complex_t rhs = s * detail::upper_gamma(s, x) + std::exp(-x + s * std::log(x));
        const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-30});
        CHECK(std::abs(lhs - rhs) / scale < 1e-9);
    }
}

TEST_CASE("continuation is smooth through the representation switch") {
    // the two-branch split must agree where the branches meet
    const complex_t s{-2.3, 1.1};
    const double xa = std::abs(s) + 5.9, xb = std::abs(s) + 6.1;
    const complex_t ga = detail::upper_gamma(s, xa);
    const complex_t gb = detail::upper_gamma(s, xb);
    // compare both against a fine trapezoid of the defining integral
    auto quad = [&](double x0) {
        complex_t acc{0, 0};
        const double upper = x0 + 50.0;
        const int n = 120000;
        const double h = (upper - x0) / n;
        for (int i = 0; i <= n; ++i) {
            const double t = x0 + i * h;
            const double w = (i == 0 || i == n) ? 0.5 : 1.0;
            acc += w * std::exp((s - 1.0) * std::log(t) - t);
        }
        return acc * h;
    };
    CHECK(std::abs(ga - quad(xa)) / std::abs(ga) < 1e-7);
    CHECK(std::abs(gb - quad(xb)) / std::abs(gb) < 1e-7);
}

TEST_CASE("derivative at zero matches a symmetric difference of the continuation") {
    const complex_t tau{0.4, 1.1};
    const double h = 1e-5;
    const complex_t up = epstein_zeta(tau, complex_t{h, 0.0}).value;
    const complex_t dn = epstein_zeta(tau, complex_t{-h, 0.0}).value;
    const complex_t fd = (up - dn) / (2.0 * h);
    const auto closed = epstein_zeta_deriv0(tau);
    CHECK(std::abs(fd - closed.value) / std::abs(closed.value) < 1e-8);
}

TEST_CASE("trivial zeros at negative even integers") {
    const auto z = epstein_zeta(complex_t{0.2, 1.3}, complex_t{-2.0, 0.0});
    CHECK(std::abs(z.value) < 1e-12);
}

TEST_CASE("lower half plane and pole are rejected") {
    CHECK_THROWS_AS(epstein_zeta(complex_t{0.0, -1.0}, complex_t{2.0, 0.0}),
                    non_positive_definite);
    CHECK_THROWS_AS(epstein_zeta_deriv0(complex_t{0.0, 0.0}), non_positive_definite);
    CHECK_THROWS_AS(epstein_zeta(complex_t{0, 1}, complex_t{1.0 + 1e-10, 0.0}), pole_at_one);
}

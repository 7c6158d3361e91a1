#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "siegeltheta/siegeltheta.hpp"

using namespace siegeltheta;

namespace {
constexpr double pi = detail::pi;
const truncation_spec tight{1e-14, 200, false};

double rel(complex_t got, complex_t want) { return std::abs(got - want) / std::abs(want); }
} // namespace

TEST_CASE("discriminant product at the square point matches the frozen value") {
    const auto d = g1::delta_product(complex_t{0, 1});
    CHECK(std::abs(d.value - complex_t{0.0017853698506421519, 0.0}) < 1e-16);
    CHECK(d.value.imag() == Catch::Approx(0.0).margin(1e-18));
    CHECK(d.err < 1e-18);
}

TEST_CASE("q-expansion coefficients match the integer cusp-form coefficients") {
    // integer convolution of q prod (1-q^n)^24, frozen reference list
    const long long want[20] = {1,       -24,      252,      -1472,    4830,
                                -6048,   -16744,   84480,    -113643,  -115920,
                                534612,  -370944,  -577738,  401856,   1217160,
                                987136,  -6905934, 2727432,  10661420, -7109760};
    std::vector<long long> c(21, 0);
    c[0] = 1;
    for (int n = 1; n <= 20; ++n)
        for (int rep = 0; rep < 24; ++rep) {
            std::vector<long long> nc(c);
            for (int k = 0; k + n <= 20; ++k) nc[k + n] -= c[k];
            c = nc;
        }
    for (int n = 1; n <= 20; ++n) CHECK(c[n - 1] == want[n - 1]);
    // and the analytic product agrees with the truncated integer series at a
    // point where q is small
    const complex_t tau{0.25, 1.5};
    const complex_t q = std::exp(complex_t{0, 2 * pi} * tau);
    complex_t series{0, 0};
    for (int n = 20; n >= 1; --n) series = series * q + static_cast<double>(want[n - 1]);
    series *= q;
    CHECK(rel(g1::delta_product(tau).value, series) < 1e-12);
}

TEST_CASE("discriminant is invariant under unit translation") {
    const complex_t tau{0.37, 1.21};
    const auto a = g1::delta_product(tau);
    const auto b = g1::delta_product(tau + 1.0);
    CHECK(std::abs(a.value - b.value) <= 2.0 * (a.err + b.err) + 1e-17);
}

TEST_CASE("discriminant transforms with weight twelve under inversion") {
    const complex_t tau{0, 2};
    const double lhs = std::abs(g1::delta_product(-1.0 / tau).value);
    const double rhs = std::pow(std::abs(tau), 12) * std::abs(g1::delta_product(tau).value);
    CHECK(std::abs(lhs - rhs) / rhs < 1e-10);
}

TEST_CASE("even triple product powers down to the discriminant") {
    for (complex_t tau : {complex_t{0, 1}, complex_t{1, 3}, complex_t{0.3, 0.9}}) {
        const complex_t chi = g1::chi1(tau, tight).value;
        CHECK(rel(std::pow(chi, 8), 256.0 * g1::delta_product(tau).value) < 1e-9);
    }
}

TEST_CASE("half-period identities") {
    const complex_t tau{0, 2};
    const complex_t chi_half = g1::chi1(tau / 2.0, tight).value;
    const complex_t rhs = 2.0 * g1::chi1(tau, tight).value *
                          std::pow(g1::theta01(tau, tight).value, 3);
    CHECK(rel(chi_half * chi_half, rhs) < 1e-12);

    sampler rng(31);
    for (int k = 0; k < 20; ++k) {
        const complex_t t = rng.siegel(1).scalar();
        const complex_t t00 = g1::theta00(t, tight).value;
        const complex_t t10 = g1::theta10(t, tight).value;
        const complex_t t01 = g1::theta01(t, tight).value;
        CHECK(rel(std::pow(t00, 4), std::pow(t10, 4) + std::pow(t01, 4)) < 1e-10);
        const complex_t h10 = g1::theta10(t / 2.0, tight).value;
        const complex_t h00 = g1::theta00(t / 2.0, tight).value;
        const complex_t h01 = g1::theta01(t / 2.0, tight).value;
        CHECK(rel(h10 * h10, 2.0 * t00 * t10) < 1e-10);
        CHECK(rel(h00 * h01, t01 * t01) < 1e-10);
    }
}

TEST_CASE("cubic invariants satisfy the discriminant identity") {
    for (complex_t tau : {complex_t{0, 1}, complex_t{0, 2}, complex_t{0.5, 1.2}}) {
        const auto [g2v, g3v] = g1::eisenstein_g2_g3(tau);
        const complex_t lhs = std::pow(g2v.value, 3) - 27.0 * g3v.value * g3v.value;
        const complex_t rhs = std::pow(2 * pi, 12) * g1::delta_product(tau).value;
        CHECK(rel(lhs, rhs) < 1e-8);
    }
}

namespace {
// disc-truncated lattice sums; the disc is invariant under the lattice's
// rotational symmetry, so the symmetric zeros cancel exactly
complex_t lattice_power_sum(complex_t tau, int power, double radius) {
    complex_t acc{0, 0};
    const int box = static_cast<int>(radius / std::min(1.0, tau.imag())) + 2;
    for (int m = -box; m <= box; ++m)
        for (int n = -box; n <= box; ++n) {
            if (m == 0 && n == 0) continue;
            const complex_t w = static_cast<double>(m) + static_cast<double>(n) * tau;
            if (std::norm(w) > radius * radius) continue;
            const complex_t w2 = w * w;
            const complex_t w4 = w2 * w2;
            acc += 1.0 / (power == 4 ? w4 : w4 * w2);
        }
    return acc;
}
} // namespace

TEST_CASE("six-power invariant vanishes on the square lattice") {
    const auto [g2v, g3v] = g1::eisenstein_g2_g3(complex_t{0, 1});
    const double scale = std::pow(pi, 6);
    CHECK(std::abs(g3v.value) / scale < 1e-10);
    CHECK(std::abs(140.0 * lattice_power_sum(complex_t{0, 1}, 6, 400.0)) / scale < 1e-10);
}

TEST_CASE("four-power invariant vanishes on the hexagonal lattice") {
    const complex_t rho = std::exp(complex_t{0, pi / 3.0});
    const auto [g2v, g3v] = g1::eisenstein_g2_g3(rho);
    const double scale = std::pow(pi, 4);
    CHECK(std::abs(g2v.value) / scale < 1e-8);
    CHECK(std::abs(60.0 * lattice_power_sum(rho, 4, 800.0)) / scale < 1e-8);
}

TEST_CASE("four-power invariant matches the slow lattice sum on the square lattice") {
    const auto [g2v, g3v] = g1::eisenstein_g2_g3(complex_t{0, 1});
    const complex_t oracle = 60.0 * lattice_power_sum(complex_t{0, 1}, 4, 400.0);
    CHECK(rel(g2v.value, oracle) < 1e-4); // oracle tail ~ R^-2
}

TEST_CASE("zeta continuation has the right special values") {
    CHECK(epstein_zeta(complex_t{0, 1}, complex_t{0, 0}).value == complex_t{-1.0, 0.0});
    CHECK(std::abs(epstein_zeta(complex_t{0.3, 1.7}, complex_t{0, 0}).value -
                   complex_t{-1.0, 0.0}) < 1e-12);
    // frozen lemniscatic value of the continued function at s = 2
    const auto z2 = epstein_zeta(complex_t{0, 1}, complex_t{2, 0});
    CHECK(std::abs(z2.value - complex_t{0.0038669465907372100, 0.0}) < 1e-14);
}

TEST_CASE("continuation at s = 2 matches the brute-force double sum") {
    double acc = 0.0;
    for (int m = -2000; m <= 2000; ++m)
        for (int n = -2000; n <= 2000; ++n) {
            if (m == 0 && n == 0) continue;
            const double q = static_cast<double>(m) * m + static_cast<double>(n) * n;
            acc += 1.0 / (q * q);
        }
    const double brute = acc / std::pow(2 * pi, 4);
    const auto z2 = epstein_zeta(complex_t{0, 1}, complex_t{2, 0});
    CHECK(std::abs(z2.value.real() - brute) / brute < 1e-6);
}

TEST_CASE("continuation rejects the pole") {
    CHECK_THROWS_AS(epstein_zeta(complex_t{0, 1}, complex_t{1.0, 1e-12}), pole_at_one);
}

TEST_CASE("regularized determinant equals the Petersson norm power of the discriminant") {
    for (complex_t tau : {complex_t{0, 1}, complex_t{1, 2}, complex_t{0.4, 1.1}}) {
        const double lhs = g1::torsion_elliptic(tau);
        const double pet = std::pow(tau.imag(), 12) * std::norm(g1::delta_product(tau).value);
        CHECK(std::abs(lhs - std::pow(pet, -1.0 / 12.0)) / lhs < 1e-7);
    }
    // frozen value at the square point
    CHECK(std::abs(g1::torsion_elliptic(complex_t{0, 1}) - 2.8710800441845200) < 1e-10);
}

TEST_CASE("regularized determinant is a lattice invariant") {
    const double a = g1::torsion_elliptic(complex_t{0.3, 1.4});
    const double b = g1::torsion_elliptic(complex_t{1.3, 1.4});
    CHECK(std::abs(a - b) / a < 1e-9);
    const double c = g1::torsion_elliptic(complex_t{0, 2});
    const double d = g1::torsion_elliptic(complex_t{0, 0.5});
    CHECK(std::abs(c - d) / c < 1e-8);
}

TEST_CASE("torus average of the section-norm log matches the discriminant twelfth") {
    const double got = g1::log_theta_norm_integral(complex_t{0, 1}, 400);
    const double want = std::log(std::abs(g1::delta_product(complex_t{0, 1}).value)) / 12.0;
    CHECK(std::abs(got - want) < 1e-3);
}

TEST_CASE("frozen zeta derivative constant agrees with an independent series route") {
    // log A = (gamma + log 2 pi)/12 - zp2/(2 pi^2), zp2 = d/ds zeta(s) at 2
    const int N = 2000;
    double zp2 = 0.0;
    for (int n = 2; n <= N; ++n) zp2 -= std::log(static_cast<double>(n)) / (static_cast<double>(n) * n);
    // Euler-Maclaurin closure of the tail of sum log n / n^2
    const double L = std::log(static_cast<double>(N));
    zp2 -= (L + 1.0) / N - 0.5 * L / (static_cast<double>(N) * N) -
           (1.0 - 2.0 * L) / (12.0 * static_cast<double>(N) * N * N);
    const double log_a = (std::numbers::egamma_v<double> + std::log(2 * pi)) / 12.0 -
                         zp2 / (2.0 * pi * pi);
    CHECK(std::abs(log_a - constants::log_glaisher) < 1e-12);
    CHECK(std::abs((1.0 / 12.0 - log_a) - constants::zeta_prime_minus_one) < 1e-12);
}

TEST_CASE("modular value carries its weight into the Petersson norm") {
    modular_value mv{complex_t{0, 2}, g1::delta_product(complex_t{0, 2}), 12.0,
                     form_kind::delta};
    CHECK(mv.petersson_norm_sq() ==
          Catch::Approx(std::pow(2.0, 12) * std::norm(mv.value.value)));
}

TEST_CASE("product form rejects the lower half plane") {
    CHECK_THROWS_AS(g1::delta_product(complex_t{0.1, -0.5}), non_positive_definite);
    CHECK_THROWS_AS(g1::eisenstein_g2_g3(complex_t{0.1, 0.0}), non_positive_definite);
}

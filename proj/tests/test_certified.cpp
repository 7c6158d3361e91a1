#include <catch2/catch_amalgamated.hpp>

#include "siegeltheta/siegeltheta.hpp"

using namespace siegeltheta;

TEST_CASE("error bounds add under addition and subtraction") {
    certified_complex a{{1.0, 2.0}, 1e-10};
    certified_complex b{{-0.5, 0.25}, 2e-10};
    CHECK((a + b).err == Catch::Approx(3e-10));
    CHECK((a - b).err == Catch::Approx(3e-10));
    CHECK((a + b).value == std::complex<double>{0.5, 2.25});
}

TEST_CASE("product bound dominates the worst-case perturbation") {
    certified_complex a{{3.0, -4.0}, 1e-8}; // |a| = 5
    certified_complex b{{0.0, 2.0}, 1e-9};  // |b| = 2
    const auto p = a * b;
    CHECK(p.err >= 5.0 * 1e-9 + 2.0 * 1e-8);
    CHECK(p.err == Catch::Approx(5e-9 + 2e-8 + 1e-17));
}

TEST_CASE("scalar multiples scale the bound by the modulus") {
    certified_complex a{{1.0, 1.0}, 1e-10};
    const auto s = a * std::complex<double>{0.0, -2.0};
    CHECK(s.err == Catch::Approx(2e-10));
}

TEST_CASE("division refuses denominators whose bound covers zero") {
    certified_complex num{{1.0, 0.0}, 0.0};
    certified_complex den{{1e-12, 0.0}, 1e-11};
    CHECK_THROWS_AS(num / den, std::domain_error);
}

TEST_CASE("division bound is conservative") {
    certified_complex num{{1.0, 0.0}, 1e-12};
    certified_complex den{{2.0, 0.0}, 1e-12};
    const auto q = num / den;
    CHECK(std::abs(q.value - std::complex<double>{0.5, 0.0}) == 0.0);
    // true worst case: |(1+1e-12)/(2-1e-12) - 1/2| ~ 7.5e-13
    CHECK(q.err >= 7.4e-13);
    CHECK(q.err <= 1e-11);
}

TEST_CASE("integer powers keep a finite, nonnegative bound") {
    certified_complex a{{1.1, 0.3}, 1e-13};
    const auto p = pow_int(a, 8);
    CHECK(p.err > 0.0);
    const auto direct = a * a * a * a * a * a * a * a;
    CHECK(std::abs(p.value - direct.value) < 1e-14 * std::abs(direct.value));
}

TEST_CASE("relative error reports infinity once the bound swallows the value") {
    certified_complex tiny{{1e-14, 0.0}, 1e-13};
    CHECK(std::isinf(tiny.rel_err()));
    certified_complex fine{{1.0, 0.0}, 1e-13};
    CHECK(fine.rel_err() == Catch::Approx(1e-13).epsilon(1e-3));
}

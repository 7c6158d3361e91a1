#include <catch2/catch_amalgamated.hpp>

#include "siegeltheta/siegeltheta.hpp"

using namespace siegeltheta;

TEST_CASE("mod-1 reduction lands in [0,1) and is idempotent") {
    CHECK(mod1(rational(7, 2)) == rational(1, 2));
    CHECK(mod1(rational(-1, 4)) == rational(3, 4));
    CHECK(mod1(rational(-8, 4)) == rational(0));
    CHECK(mod1(mod1(rational(-13, 6))) == mod1(rational(-13, 6)));
}

TEST_CASE("construction reduces entries mod 1") {
    characteristic ch({rational(3, 2), rational(-1, 4)}, {rational(5, 1), rational(1, 3)});
    CHECK(ch.a()[0] == rational(1, 2));
    CHECK(ch.a()[1] == rational(3, 4));
    CHECK(ch.b()[0] == rational(0));
    CHECK(ch.b()[1] == rational(1, 3));
}

TEST_CASE("parity distinguishes even and odd half-integral characteristics") {
    CHECK(characteristic::half({0}, {0}).parity() == 0);
    CHECK(characteristic::half({1}, {1}).parity() == 1);
    CHECK(characteristic::half({1, 1}, {1, 1}).parity() == 0); // 4 a.b = 2
    CHECK(characteristic::half({1, 0}, {1, 0}).parity() == 1);
    CHECK_THROWS_AS(characteristic({rational(1, 3)}, {rational(0)}).parity(), std::logic_error);
}

TEST_CASE("even characteristic counts match the closed form") {
    CHECK(even_characteristics(1).size() == 3);
    CHECK(even_characteristics(2).size() == 10);
    CHECK(even_characteristics(3).size() == 36);
    for (int g = 1; g <= 3; ++g)
        CHECK(even_characteristics(g).size() == even_characteristic_count(g));
}

TEST_CASE("the ten even genus-2 characteristics are the classical set") {
    const auto evens = even_characteristics(2);
    auto contains = [&](std::vector<int> a, std::vector<int> b) {
        const characteristic want = characteristic::half(a, b);
        for (const auto& ch : evens)
            if (ch == want) return true;
        return false;
    };
    CHECK(contains({0, 0}, {0, 0}));
    CHECK(contains({1, 0}, {0, 0}));
    CHECK(contains({0, 1}, {0, 0}));
    CHECK(contains({0, 0}, {1, 0}));
    CHECK(contains({0, 0}, {0, 1}));
    CHECK(contains({1, 1}, {0, 0}));
    CHECK(contains({0, 0}, {1, 1}));
    CHECK(contains({1, 0}, {0, 1}));
    CHECK(contains({0, 1}, {1, 0}));
    CHECK(contains({1, 1}, {1, 1}));
    CHECK_FALSE(contains({1, 0}, {1, 0}));
}

TEST_CASE("every listed characteristic is even and half-integral") {
    for (int g = 1; g <= 3; ++g)
        for (const auto& ch : even_characteristics(g)) {
            CHECK(ch.is_half_integral());
            CHECK(ch.parity() == 0);
        }
}

TEST_CASE("dimension mismatch is rejected") {
    CHECK_THROWS_AS(characteristic({rational(0)}, {rational(0), rational(0)}),
                    std::invalid_argument);
}

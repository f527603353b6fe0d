#include "doctest.h"

#include "rankone/errors.hpp"
#include "rankone/spectrum.hpp"

using namespace rankone;

TEST_CASE("group parameter table") {
    auto r3 = group_params(Field::R, 3);
    CHECK(r3.rho == doctest::Approx(1.0));
    CHECK(r3.comp_lo == 0.0);
    CHECK(r3.comp_hi == doctest::Approx(2.0));

    auto c2 = group_params(Field::C, 2);
    CHECK(c2.rho == doctest::Approx(2.0));
    CHECK(c2.comp_hi == doctest::Approx(4.0));

    auto h2 = group_params(Field::H, 2);
    CHECK(h2.rho == doctest::Approx(5.0));
    CHECK(h2.comp_lo == doctest::Approx(2.0));
    CHECK(h2.comp_hi == doctest::Approx(8.0));

    CHECK_THROWS_AS(group_params(Field::R, 1), RangeError);
}

TEST_CASE("real case component list") {
    // rho = 5 at n = 11: j = 0, 1, 2 qualify for alpha = beta = 0.1
    auto list = discrete_components(Field::R, 11, 0.1, 0.1);
    REQUIRE(list.components.size() == 3);
    CHECK(list.components[0].param == doctest::Approx(0.2));
    CHECK(list.components[1].param == doctest::Approx(2.2));
    CHECK(list.components[2].param == doctest::Approx(4.2));
    for (const auto& c : list.components) {
        CHECK(c.theorem == "Thm4.1");
        CHECK(list.group.in_range(c.param));
    }

    // n = 2: single component alpha+beta below rho = 1/2
    auto n2 = discrete_components(Field::R, 2, 0.2, 0.2);
    REQUIRE(n2.components.size() == 1);
    CHECK(n2.components[0].param == doctest::Approx(0.4));

    // empty when alpha + beta >= rho
    CHECK(discrete_components(Field::R, 2, 0.3, 0.3).components.empty());
}

TEST_CASE("monotonicity: shrinking a parameter never loses components") {
    for (double alpha : {0.1, 0.3, 0.7}) {
        for (double beta : {0.2, 0.5}) {
            auto big = discrete_components(Field::R, 9, alpha, beta);
            auto small = discrete_components(Field::R, 9, alpha / 2, beta);
            CHECK(small.components.size() >= big.components.size());
        }
    }
}

TEST_CASE("complex and quaternionic predicates") {
    auto c = discrete_components(Field::C, 3, 1.0, 1.5);
    REQUIRE(c.components.size() == 1);
    CHECK(c.components[0].param == doctest::Approx(2.5));
    CHECK(c.components[0].theorem == "Thm5.1");

    // alpha + beta >= n: no predicted component
    CHECK(discrete_components(Field::C, 3, 1.5, 1.6).components.empty());

    // H, n = 2: threshold 2n-1 = 3 can never beat alpha, beta > 2
    CHECK(discrete_components(Field::H, 2, 3.0, 3.0).components.empty());

    // H, n = 3: alpha + beta = 4.8 < 5
    auto h = discrete_components(Field::H, 3, 2.2, 2.6);
    REQUIRE(h.components.size() == 1);
    CHECK(h.components[0].param == doctest::Approx(4.8));

    CHECK_THROWS_AS(discrete_components(Field::H, 2, 1.0, 3.0), RangeError);
    CHECK_THROWS_AS(discrete_components(Field::R, 2, 1.5, 0.2), RangeError);
}

TEST_CASE("overgroup parameter") {
    CHECK(overgroup_parameter(Field::C, 4, 1.0) == doctest::Approx(0.5));
    CHECK(overgroup_parameter(Field::H, 3, 2.5) == doctest::Approx(1.25));
    CHECK_THROWS_AS(overgroup_parameter(Field::C, 4, 4.0), RangeError);  // open interval
    CHECK_THROWS_AS(overgroup_parameter(Field::H, 3, 2.0), RangeError);
    CHECK_THROWS_AS(overgroup_parameter(Field::R, 3, 0.5), RangeError);
}

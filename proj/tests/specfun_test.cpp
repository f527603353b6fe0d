#include "doctest.h"

#include "rankone/errors.hpp"
#include "rankone/specfun.hpp"

#include <cmath>

using namespace rankone;

TEST_CASE("gamma sign") {
    CHECK(gamma_sign(0.5) == 1);
    CHECK(gamma_sign(3.0) == 1);
    CHECK(gamma_sign(-0.5) == -1);  // Gamma(-1/2) = -2 sqrt(pi)
    CHECK(gamma_sign(-1.5) == 1);
    CHECK(gamma_sign(-2.5) == -1);
}

TEST_CASE("closed forms agree across the parameter box") {
    for (int n = 2; n <= 5; ++n) {
        double rho = (n - 1) / 2.0;
        for (int k = 1; k <= 9; ++k) {
            double mu = 0.1 * k * 2.0 * rho;
            if (k == 5) {
                // mu = rho: Gamma(rho - mu) poles in both closed forms
                CHECK_THROWS_AS(knapp_stein_constant(mu, n), PoleError);
                continue;
            }
            auto ks = knapp_stein_constant(mu, n);
            CHECK(ks.rel_discrepancy <= 1e-10);
            CHECK(std::isfinite(ks.value));
        }
    }
}

TEST_CASE("normalization at a known point") {
    // n = 2, rho = 1/2, mu = 1/2: C = G(1/4) G(3/4) / (G(1) G(0)) ... the
    // second Gamma argument rho - mu = 0 is a pole, so probe mu = 1/4 instead:
    // C = G(3/8) G(7/8) / (G(1) G(1/4)).
    auto ks = knapp_stein_constant(0.25, 2);
    double expect = std::exp(std::lgamma(0.375) + std::lgamma(0.875) - std::lgamma(1.0) -
                             std::lgamma(0.25));
    CHECK(ks.value == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("gamma poles are reported") {
    // mu = rho makes Gamma(rho - mu) = Gamma(0)
    CHECK_THROWS_AS(knapp_stein_constant(0.5, 2), PoleError);
    // n = 3 (rho = 1), mu = 1: same pole; consistent across both forms
    CHECK_THROWS_AS(knapp_stein_constant(1.0, 3), PoleError);
    CHECK_THROWS_AS(log_abs_gamma(0.0), PoleError);
    CHECK_THROWS_AS(log_abs_gamma(-3.0), PoleError);
}

#include "doctest.h"

#include "rankone/errors.hpp"
#include "rankone/mc.hpp"
#include "rankone/rng.hpp"
#include "support/quadrature.hpp"

#include <cmath>

using namespace rankone;
using testsupport::tanh_sinh;

TEST_CASE("preconditions follow the boundedness hypotheses") {
    std::vector<double> zeta{1.0};
    CHECK_THROWS_AS(a_integral_mc(1, 0.3, 0.3, 0, zeta, 1000, 1), RangeError);  // 0.6 > 0.5
    CHECK_THROWS_AS(a_integral_mc(1, 0.6, 0.1, 0, zeta, 1000, 1), RangeError);
    CHECK_THROWS_AS(a_integral_mc(1, 0.2, 0.2, 0, {}, 1000, 1), RangeError);
    CHECK_THROWS_AS(a_integral_mc(1, 0.2, 0.2, 0, {0.0}, 1000, 1), RangeError);
}

TEST_CASE("d=1 m=0 estimate agrees with adaptive quadrature and a Beta-form oracle") {
    const double alpha = 0.2, beta = 0.2;
    const double ea = 1.0 - 2.0 * alpha, eb = 1.0 - 2.0 * beta;  // 0.6, 0.6
    std::vector<double> zeta{1.0};
    auto est = a_integral_mc(1, alpha, beta, 0, zeta, 400000, 12345);
    CHECK(!est.diverged);

    auto integrand = [&](double v) {
        return std::pow(std::abs(1.0 - v), -ea) * std::pow(std::abs(v), -eb);
    };
    // split at the singularities; map the tails to (0, 1]
    double inner = tanh_sinh(integrand, 0.0, 0.5) + tanh_sinh(integrand, 0.5, 1.0);
    auto left = [&](double t) { return integrand(-(1.0 - t) / t) / (t * t); };
    auto right = [&](double t) { return integrand(1.0 + (1.0 - t) / t) / (t * t); };
    double tails = tanh_sinh(left, 0.0, 1.0) + tanh_sinh(right, 0.0, 1.0);
    double quad = inner + tails;

    CHECK(std::abs(est.mean - quad) <= 3.0 * est.std_error);

    // independent closed form: B(1-ea,1-eb) + B(1-eb, ea+eb-1) + B(1-ea, ea+eb-1)
    auto lb = [](double x) { return std::lgamma(x); };
    auto betafn = [&](double x, double y) { return std::exp(lb(x) + lb(y) - lb(x + y)); };
    double closed = betafn(1 - ea, 1 - eb) + betafn(1 - eb, ea + eb - 1) + betafn(1 - ea, ea + eb - 1);
    CHECK(quad == doctest::Approx(closed).epsilon(1e-5));
    CHECK(std::abs(est.mean - closed) <= 3.0 * est.std_error);
}

TEST_CASE("standard error scales like 1/sqrt(samples)") {
    std::vector<double> zeta{1.0};
    auto small = a_integral_mc(1, 0.2, 0.2, 0, zeta, 20000, 7);
    auto large = a_integral_mc(1, 0.2, 0.2, 0, zeta, 80000, 7);
    double ratio = small.std_error / large.std_error;
    CHECK(ratio > 1.0);   // quadrupling the samples must shrink the error ...
    CHECK(ratio < 4.0);   // ... by about a factor two
    CHECK(std::abs(small.mean - large.mean) <= 3.0 * (small.std_error + large.std_error));
}

TEST_CASE("homogeneity exponent") {
    CHECK(a_integral_homogeneity_exponent(5, 0.1, 0.1, 1) == doctest::Approx(-0.6));
    CHECK(a_integral_homogeneity_exponent(1, 0.2, 0.2, 0) == doctest::Approx(-0.2));
}

TEST_CASE("homogeneity and rotation invariance at small scale") {
    // modest sample counts keep the unit run fast; the acceptance suite runs
    // the full 10^6-sample version
    const int d = 5, m = 1;
    const double alpha = 0.1, beta = 0.1;
    const double expo = a_integral_homogeneity_exponent(d, alpha, beta, m);
    auto at = [&](double scale, std::uint64_t seed) {
        std::vector<double> zeta(d, 0.0);
        zeta[0] = scale;
        auto est = a_integral_mc(d, alpha, beta, m, zeta, 200000, seed);
        est.mean /= std::pow(scale, expo);
        est.std_error /= std::pow(scale, expo);
        return est;
    };
    auto e1 = at(0.5, 100), e2 = at(1.0, 200), e3 = at(2.0, 300);
    CHECK(std::abs(e1.mean - e2.mean) <= 3.0 * std::hypot(e1.std_error, e2.std_error));
    CHECK(std::abs(e3.mean - e2.mean) <= 3.0 * std::hypot(e3.std_error, e2.std_error));

    Rng rng(55);
    auto dir = rng.unit_vector(d);
    auto er = a_integral_mc(d, alpha, beta, m, dir, 200000, 400);
    CHECK(std::abs(er.mean - e2.mean) <= 3.0 * std::hypot(er.std_error, e2.std_error));
}

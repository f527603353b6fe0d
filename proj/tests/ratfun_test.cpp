#include "doctest.h"

#include "rankone/errors.hpp"
#include "rankone/ratfun.hpp"
#include "support/generators.hpp"

using namespace rankone;
using testsupport::random_factor;
using testsupport::random_poly;

namespace {

LinearFactor alpha_one_minus_half_d() {
    // alpha + 1 - d/2
    return LinearFactor{Rational(1), Rational(1), Rational(0), Rational(-1, 2)};
}

}  // namespace

TEST_CASE("divide_by_linear examples") {
    // (alpha^2 + alpha) / alpha = alpha + 1
    Poly p = Poly::monomial({2, 0, 0}, 1) + Poly::alpha();
    auto q = divide_by_linear(p, LinearFactor::alpha_plus(0));
    REQUIRE(q.has_value());
    CHECK(*q == Poly::alpha() + Poly(1l));

    // (alpha^2 + 1) / alpha is not exact
    Poly p2 = Poly::monomial({2, 0, 0}, 1) + Poly(1l);
    CHECK(!divide_by_linear(p2, LinearFactor::alpha_plus(0)).has_value());

    // (alpha+1-d/2)(beta+2) / (alpha+1-d/2) = beta + 2
    Poly p3 = alpha_one_minus_half_d().to_poly() * (Poly::beta() + Poly(2l));
    auto q3 = divide_by_linear(p3, alpha_one_minus_half_d());
    REQUIRE(q3.has_value());
    CHECK(*q3 == Poly::beta() + Poly(2l));
}

TEST_CASE("divide_by_linear multiply-back property") {
    Rng rng(3);
    for (int rep = 0; rep < 60; ++rep) {
        Poly p = random_poly(rng);
        LinearFactor f = random_factor(rng);
        auto q = divide_by_linear(p * f.to_poly(), f);
        REQUIRE(q.has_value());
        CHECK(*q == p);
    }
}

TEST_CASE("ratfun cancellation and arithmetic") {
    // 1/alpha + (-1)/alpha = 0
    RatFun x = RatFun::reciprocal({LinearFactor::alpha_plus(0)});
    CHECK((x + (-x)).is_zero());

    // (alpha)_2 / (alpha)_1 = alpha + 1 after cancellation
    RatFun poch2(pochhammer(Poly::alpha(), 2));
    RatFun ratio = poch2 * RatFun::reciprocal({LinearFactor::alpha_plus(0)});
    CHECK(ratio.is_polynomial());
    CHECK(ratio == RatFun(Poly::alpha() + Poly(1l)));

    // shift of 1/(alpha+1-d/2) by (+1, 0) keeps a factored denominator
    RatFun inv = RatFun::reciprocal({alpha_one_minus_half_d()});
    RatFun shifted = inv.shifted(1, 0);
    REQUIRE(shifted.den().size() == 1);
    CHECK(shifted.den()[0] == LinearFactor{Rational(2), Rational(1), Rational(0), Rational(-1, 2)});
}

TEST_CASE("ratfun evaluation homomorphism and shift round trip") {
    Rng rng(91);
    for (int rep = 0; rep < 25; ++rep) {
        RatFun x(random_poly(rng), {random_factor(rng)});
        RatFun y(random_poly(rng), {random_factor(rng), random_factor(rng)});
        Rational a(2, 3), b(7, 5), d(3);
        try {
            Rational lhs = (x * y).eval(a, b, d);
            CHECK(lhs == x.eval(a, b, d) * y.eval(a, b, d));
            Rational sum = (x + y).eval(a, b, d);
            CHECK(sum == x.eval(a, b, d) + y.eval(a, b, d));
        } catch (const PoleError&) {
            // fine for random factors vanishing at the probe point
        }
        CHECK(x.shifted(1, 0).shifted(-1, 0) == x);
        CHECK(x.shifted(2, -3).shifted(-2, 3) == x);
    }
}

TEST_CASE("ratfun ring axioms on random instances") {
    Rng rng(137);
    auto random_ratfun = [&](int denfactors) {
        std::vector<LinearFactor> den;
        for (int i = 0; i < denfactors; ++i) den.push_back(random_factor(rng));
        return RatFun(random_poly(rng), std::move(den));
    };
    for (int rep = 0; rep < 20; ++rep) {
        RatFun x = random_ratfun(1), y = random_ratfun(2), z = random_ratfun(1);
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK((x + y) * z == x * z + y * z);
        CHECK((x - x).is_zero());
    }
}

TEST_CASE("pole_set") {
    // 1/(alpha (alpha+1)) has alpha-poles {alpha, alpha+1}
    RatFun x = RatFun::reciprocal({LinearFactor::alpha_plus(0), LinearFactor::alpha_plus(1)});
    auto poles = x.pole_set(RatFun::Var::alpha);
    REQUIRE(poles.size() == 2);
    CHECK(poles[0] == LinearFactor::alpha_plus(0));
    CHECK(poles[1] == LinearFactor::alpha_plus(1));

    // alpha / (alpha beta): the alpha cancels
    RatFun y(Poly::alpha(), {LinearFactor::alpha_plus(0), LinearFactor::beta_plus(0)});
    CHECK(y.pole_set(RatFun::Var::alpha).empty());
    CHECK(y.pole_set(RatFun::Var::beta).size() == 1);
}

TEST_CASE("eval reports poles") {
    RatFun x = RatFun::reciprocal({LinearFactor::alpha_plus(0)});
    CHECK_THROWS_AS(x.eval(Rational(0), Rational(1), Rational(3)), PoleError);
    CHECK_THROWS_AS(x.eval(0.0, 1.0, 3.0), PoleError);
    CHECK(x.eval(2.0, 1.0, 3.0) == doctest::Approx(0.5));
}

TEST_CASE("with_dim substitutes and renormalizes") {
    // 1/(alpha+1-d/2) at d=4 becomes 1/(alpha-1)
    RatFun inv = RatFun::reciprocal({alpha_one_minus_half_d()});
    RatFun at4 = inv.with_dim(4);
    REQUIRE(at4.den().size() == 1);
    CHECK(at4.den()[0] == LinearFactor::alpha_plus(-1));
}

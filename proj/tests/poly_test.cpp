#include "doctest.h"

#include "rankone/poly.hpp"
#include "support/generators.hpp"

using namespace rankone;
using testsupport::random_poly;

TEST_CASE("poly arithmetic basics") {
    Poly a = Poly::alpha();
    CHECK((a + a) == a * Rational(2));
    // (alpha + 1 - d/2) * beta = alpha*beta + beta - d*beta/2
    Poly lhs = (Poly::alpha() + Poly(1l) - Poly::dim() * Rational(1, 2)) * Poly::beta();
    Poly rhs = Poly::monomial({1, 1, 0}, 1) + Poly::beta() + Poly::monomial({0, 1, 1}, Rational(-1, 2));
    CHECK(lhs == rhs);
    CHECK((a * Poly{}).is_zero());
}

TEST_CASE("poly distributivity on random instances") {
    Rng rng(7);
    for (int rep = 0; rep < 50; ++rep) {
        Poly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        CHECK((p + q) * r == p * r + q * r);
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
    }
}

TEST_CASE("shift is a ring map and invertible") {
    Rng rng(13);
    for (int rep = 0; rep < 20; ++rep) {
        Poly p = random_poly(rng), q = random_poly(rng);
        CHECK((p * q).shifted(2, -1) == p.shifted(2, -1) * q.shifted(2, -1));
        CHECK(p.shifted(1, 3).shifted(-1, -3) == p);
    }
}

TEST_CASE("evaluation is a homomorphism") {
    Rng rng(21);
    Rational a(3, 2), b(-1, 3), d(5);
    for (int rep = 0; rep < 20; ++rep) {
        Poly p = random_poly(rng), q = random_poly(rng);
        CHECK((p * q).eval(a, b, d) == p.eval(a, b, d) * q.eval(a, b, d));
        CHECK((p + q).eval(a, b, d) == p.eval(a, b, d) + q.eval(a, b, d));
    }
}

TEST_CASE("pochhammer") {
    CHECK(pochhammer(Poly::alpha(), 0) == Poly(1l));
    CHECK(pochhammer(Poly(2l), 3) == Poly(24l));
    // (alpha+1-d/2)_1 vanishes at alpha=1/2, d=3
    Poly p = pochhammer(Poly::alpha() + Poly(1l) - Poly::dim() * Rational(1, 2), 1);
    CHECK(p.eval(Rational(1, 2), Rational(0), Rational(3)) == 0);
    // (alpha)_3 = alpha^3 + 3 alpha^2 + 2 alpha
    Poly expect = Poly::monomial({3, 0, 0}, 1) + Poly::monomial({2, 0, 0}, 3) +
                  Poly::monomial({1, 0, 0}, 2);
    CHECK(pochhammer(Poly::alpha(), 3) == expect);
}

TEST_CASE("content and rendering") {
    Poly p = Poly::monomial({2, 0, 0}, Rational(4)) + Poly::monomial({0, 0, 1}, Rational(-2));
    CHECK(p.content() == Rational(2));
    CHECK(Poly{}.to_string() == "0");
    CHECK(p.to_string() == "4*alpha^2 - 2*d");
    Poly half = Poly::monomial({0, 1, 0}, Rational(-1, 2));
    CHECK(half.to_string() == "-1/2*beta");
}

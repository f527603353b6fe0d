#pragma once

#include "rankone/kernel.hpp"
#include "rankone/rng.hpp"

namespace rankone::testsupport {

// Random small polynomial in alpha, beta, d with integer coefficients.
inline Poly random_poly(Rng& rng, int max_terms = 4, int max_deg = 2, int max_coeff = 5) {
    Poly p;
    int nterms = 1 + static_cast<int>(rng.uniform() * max_terms);
    for (int t = 0; t < nterms; ++t) {
        Monomial m{static_cast<int>(rng.uniform() * (max_deg + 1)),
                   static_cast<int>(rng.uniform() * (max_deg + 1)),
                   static_cast<int>(rng.uniform() * (max_deg + 1))};
        long c = static_cast<long>(rng.uniform() * (2 * max_coeff + 1)) - max_coeff;
        p += Poly::monomial(m, Rational(c));
    }
    return p;
}

inline LinearFactor random_factor(Rng& rng) {
    LinearFactor f;
    auto coin = [&](Rational& c) {
        double u = rng.uniform();
        if (u < 0.5) c = static_cast<long>(rng.uniform() * 5) - 2;
    };
    while (f.is_constant()) {
        coin(f.ca);
        coin(f.cb);
        coin(f.cd);
        if (f.is_constant()) continue;
        f.c0 = Rational(static_cast<long>(rng.uniform() * 7) - 3, 1 + static_cast<long>(rng.uniform() * 2));
    }
    return f;
}

// Random kernel expression with small integer exponent data.
inline KernelExpr random_kernel(Rng& rng, int max_terms = 3) {
    KernelExpr e;
    int nterms = 1 + static_cast<int>(rng.uniform() * max_terms);
    for (int t = 0; t < nterms; ++t) {
        AffineExp er{static_cast<int>(rng.uniform() * 3) - 2, 0,
                     static_cast<int>(rng.uniform() * 5) - 2};
        AffineExp es{0, static_cast<int>(rng.uniform() * 3) - 2,
                     static_cast<int>(rng.uniform() * 5) - 2};
        int kt = static_cast<int>(rng.uniform() * 3);
        long c = static_cast<long>(rng.uniform() * 9) - 4;
        if (c == 0) c = 1;
        e += KernelExpr::term(RatFun(Rational(c)), er, es, kt);
    }
    return e;
}

}  // namespace rankone::testsupport

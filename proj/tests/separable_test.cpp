#include "doctest.h"

#include "rankone/separable.hpp"

#include <cmath>

using namespace rankone;

namespace {

GaussianFactor bump(std::vector<double> center, double width) {
    GaussianFactor g;
    g.center = std::move(center);
    g.width = width;
    return g;
}

// Mixture with common centers: the cross spectral densities carry no phase,
// so both quadrature paths apply their singular models.
GaussianMixture centered_mixture(int dim) {
    GaussianMixture mix;
    mix.dim = dim;
    std::vector<double> origin(dim, 0.0);
    mix.terms.push_back({1.0, bump(origin, 0.9), bump(origin, 1.1)});
    mix.terms.push_back({-0.6, bump(origin, 1.3), bump(origin, 0.8)});
    mix.terms.push_back({0.35, bump(origin, 1.0), bump(origin, 1.4)});
    return mix;
}

// Well-resolved mixture for the small-grid dense cross-checks: wide bumps
// keep the diagonal values O(1) so relative comparisons are meaningful.
GaussianMixture broad_mixture(int dim, Rng& rng) {
    GaussianMixture mix;
    mix.dim = dim;
    for (int t = 0; t < 3; ++t) {
        std::vector<double> cx(dim), cy(dim);
        for (int a = 0; a < dim; ++a) {
            cx[a] = rng.uniform(-1.0, 1.0);
            cy[a] = rng.uniform(-1.0, 1.0);
        }
        mix.terms.push_back({cdouble(rng.uniform(0.4, 1.0), rng.uniform(-0.3, 0.3)),
                             bump(cx, rng.uniform(1.4, 2.0)), bump(cy, rng.uniform(1.4, 2.0))});
    }
    return mix;
}

}  // namespace

TEST_CASE("separable tensor norm equals the dense computation") {
    const int n = 64;
    const double box = 20.0;
    Rng rng(42);
    for (int rep = 0; rep < 3; ++rep) {
        GaussianMixture mix = rep == 0 ? centered_mixture(1) : GaussianMixture::random(1, box, rng);
        SeparableGrid sep(mix, n, box);
        GridFunction dense = sep.to_dense();
        // raw lattice rule: the cross-Gram reorganization is an identity
        double lhs0 = sep.tensor_norm_sq(0.21, 0.33, /*singular_correction=*/false);
        double rhs0 = tensor_norm_sq(dense, 0.21, 0.33, /*singular_correction=*/false);
        CHECK(std::abs(lhs0 - rhs0) <= 1e-12 * std::abs(rhs0));
        // full rules: they model the singular cell differently (per-pair vs
        // per-slice fits), so the agreement is at the correction scale
        double lhs = sep.tensor_norm_sq(0.21, 0.33);
        double rhs = tensor_norm_sq(dense, 0.21, 0.33);
        CHECK(std::abs(lhs - rhs) <= 5e-2 * std::abs(rhs));
    }
}

TEST_CASE("separable tensor norm is exact on single products") {
    const int n = 64;
    const double box = 20.0;
    GaussianMixture mix = GaussianMixture::pure_product(1, 0.9);
    SeparableGrid sep(mix, n, box);
    GridFunction dense = sep.to_dense();
    double lhs = sep.tensor_norm_sq(0.2, 0.2);
    double rhs = tensor_norm_sq(dense, 0.2, 0.2);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs));
    // and equals the product of fractional norms
    GridFunction g = GridFunction::sample(1, n, box, [](std::span<const double> x) {
        return cdouble(std::exp(-x[0] * x[0] / (2.0 * 0.81)));
    });
    double prod = fractional_norm_sq(g, 0.2);
    CHECK(std::abs(lhs - prod * prod) <= 1e-12 * lhs);
}

TEST_CASE("separable bracket application equals the dense path") {
    Rng rng(7);
    const double box = 12.0;
    for (int m = 0; m <= 2; ++m) {
        SeparableGrid sep(broad_mixture(1, rng), 16, box);
        GridFunction dense = sep.to_dense();
        GridFunction lhs = sep.apply_bracket(m, 0.21, 0.37);
        GridFunction rhs = apply_bracket_grid(dense, m, 0.21, 0.37);
        CHECK(rel_l2_diff(lhs, rhs) <= 1e-11);
    }
    // two factors in d = 2 as well
    SeparableGrid sep2(broad_mixture(2, rng), 8, box);
    GridFunction dense2 = sep2.to_dense();
    for (int m = 0; m <= 1; ++m) {
        GridFunction lhs = sep2.apply_bracket(m, 0.3, 0.3);
        GridFunction rhs = apply_bracket_grid(dense2, m, 0.3, 0.3);
        CHECK(rel_l2_diff(lhs, rhs) <= 1e-11);
    }
}

TEST_CASE("mixture transforms act on the analytic description") {
    Rng rng(19);
    GaussianMixture mix = GaussianMixture::random(1, 20.0, rng);
    std::vector<double> x{0.7}, y{-0.4}, x0{0.3};
    auto shifted = mix.translated(x0);
    std::vector<double> xs{x[0] - 0.3}, ys{y[0] - 0.3};
    CHECK(std::abs(shifted(x, y) - mix(xs, ys)) <= 1e-14);

    const double lambda = 0.5, w = 0.6;
    auto dil = mix.dilated(lambda, w);
    std::vector<double> xl{x[0] / lambda}, yl{y[0] / lambda};
    cdouble expect = std::pow(lambda, -w) * mix(xl, yl);
    CHECK(std::abs(dil(x, y) - expect) <= 1e-14);
}

TEST_CASE("mixtures stay inside the middle of the box") {
    Rng rng(23);
    for (int rep = 0; rep < 10; ++rep) {
        GaussianMixture mix = GaussianMixture::random(2, 20.0, rng);
        for (const auto& t : mix.terms) {
            for (double c : t.gx.center) CHECK(std::abs(c) <= 5.0);
            for (double c : t.gy.center) CHECK(std::abs(c) <= 5.0);
            CHECK(t.gx.width >= 0.44);
            CHECK(t.gx.width <= 0.71);
        }
    }
}

#pragma once

#include "rankone/grid.hpp"
#include "rankone/rng.hpp"

#include <complex>
#include <vector>

namespace rankone {

// Isotropic Gaussian bump exp(-|x - center|^2 / (2 width^2)).
struct GaussianFactor {
    std::vector<double> center;
    double width = 1.0;

    double operator()(std::span<const double> x) const;
    GaussianFactor translated(std::span<const double> x0) const;
    // g(x/lambda) is again a Gaussian: center and width scale by lambda.
    GaussianFactor arg_scaled(double lambda) const;
};

// f(x, y) = sum_i coeff_i gx_i(x) gy_i(y): the test-function class of the
// experiments. Centers stay in the middle half of the box so periodization
// leakage is negligible.
struct GaussianMixture {
    int dim = 1;
    struct Term {
        cdouble coeff;
        GaussianFactor gx, gy;
    };
    std::vector<Term> terms;

    // Random mixture with centers in [-center_frac, center_frac] * box per
    // coordinate and widths in [wlo, whi] * (box / 20). The defaults keep
    // periodization leakage below 1e-10 on the default box.
    static GaussianMixture random(int dim, double box, Rng& rng, int nterms = 0,
                                  double center_frac = 0.25, double wlo = 0.45,
                                  double whi = 0.7);
    static GaussianMixture pure_product(int dim, double width = 1.0);

    cdouble operator()(std::span<const double> x, std::span<const double> y) const;

    GaussianMixture translated(std::span<const double> x0) const;       // f(x-x0, y-x0)
    GaussianMixture dilated(double lambda, double weight_exp) const;    // lambda^{-w} f(x/l, y/l)
};

// Sampled rank-structured realization of a mixture on the d-dimensional grid.
// Tensor norms and operator application are evaluated through per-factor
// transforms; the lattice sums agree with the dense 2d-grid computation.
class SeparableGrid {
  public:
    SeparableGrid(const GaussianMixture& mix, int n, double box);

    int dim() const { return dim_; }
    int n() const { return n_; }
    double box() const { return box_; }

    // Materializes f on the 2d-axis grid (small n only).
    GridFunction to_dense() const;

    double tensor_norm_sq(double alpha, double beta, bool singular_correction = true) const;

    GridFunction apply_bracket(int m, double alpha, double beta,
                               RecursionDenominator den = RecursionDenominator::kOneMinusRho) const;

  private:
    int dim_, n_;
    double box_;
    struct Term {
        cdouble coeff;
        GridFunction u, w;
        std::vector<cdouble> u_hat, w_hat;  // raw DFTs
    };
    std::vector<Term> terms_;
};

}  // namespace rankone
